// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "specgap/chebyshev.hpp"
#include "specgap/constructor.hpp"
#include "specgap/pell.hpp"
#include "specgap/rng.hpp"

using namespace specgap;

TEST_CASE("divisor-splitting certificate for sqrt(8), (p,q) = (34,12)") {
    QuadSurd r8 = QuadSurd::sqrt_of(Rat(8));
    GapCertificate c = construct_from_approximant(r8, Int(34), Int(12));
    CHECK(c.desquare_factor == 1);
    CHECK(c.wq.divisor == 3);
    CHECK(c.wp.divisor == 2);
    CHECK(c.m == 7);
    CHECK(c.m_prime == 1);
    CHECK(c.n == 15);
    CHECK(c.n_prime == 19);
    CHECK(c.revalidated);
    // gap = 4 |12 sqrt8 - 34|; oracle recomputes the two levels directly.
    QuadSurd lam = r8 * QuadSurd(Int(49)) + QuadSurd(Int(225));
    QuadSurd lamp = r8 * QuadSurd(Int(1)) + QuadSurd(Int(361));
    CHECK(c.gap == (lam - lamp).abs());
    CHECK(c.gap.decimal(7) == "0.2354980");
}

TEST_CASE("convergent (17,12) of sqrt(2): prime numerator flagged") {
    QuadSurd r2 = QuadSurd::sqrt_of(Rat(2));
    GapCertificate c = construct_from_approximant(r2, Int(17), Int(12));
    CHECK(c.desquare_factor == 1);
    CHECK(c.wp.divisor == 1);  // 17 is prime
    CHECK(c.wp.balance == doctest::Approx(0.0));
    CHECK_FALSE(c.evenly_divisible);
    CHECK(c.revalidated);
}

TEST_CASE("certificate identities hold for random approximants") {
    // m^2 - m'^2 = 4q and n'^2 - n^2 = 4p on every output.
    CounterRng rng(0x7a5);
    QuadSurd alpha = QuadSurd::sqrt_of(Rat(3));
    for (int i = 0; i < 120; ++i) {
        Int p(static_cast<long>(rng.next() % 5000 + 2));
        Int q(static_cast<long>(rng.next() % 5000 + 2));
        GapCertificate c;
        try {
            c = construct_from_approximant(alpha, p, q);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::degenerate_divisor);  // p or q collapsed to 1 side
            continue;
        }
        CHECK(c.m * c.m - c.m_prime * c.m_prime == 4 * c.q);
        CHECK(c.n_prime * c.n_prime - c.n * c.n == 4 * c.p);
        CHECK(c.revalidated);
        CHECK(c.gap.sign() > 0);
    }
}

TEST_CASE("weaker approximants give gap <= 4q/T exactly") {
    // With |alpha - p/q| <= 1/T the certificate gap is 4q|alpha - p/q| <= 4q/T.
    QuadSurd alpha = QuadSurd::sqrt_of(Rat(2));
    struct Case {
        long p, q, T;
    } cases[] = {{17, 12, 144}, {7, 5, 25}, {24, 17, 100}, {41, 29, 500}};
    for (auto [p, q, T] : cases) {
        QuadSurd diff = (alpha - QuadSurd(Rat(p, q))).abs();
        REQUIRE(diff <= QuadSurd(Rat(1, T)));  // hypothesis of the variant
        GapCertificate c = construct_from_approximant(alpha, Int(p), Int(q));
        CHECK(c.gap * QuadSurd(Int(T)) <= QuadSurd(Int(4 * q)) * QuadSurd(Int(c.desquare_factor)));
    }
}

TEST_CASE("dirichlet route at alpha = sqrt(2), N = 100") {
    Alpha a = Alpha::parse("sqrt:2");
    GapCertificate c = general_upper_bound(a, Int(100));
    CHECK(c.m == 11);
    CHECK(c.m_prime == 9);
    CHECK(c.n == 13);
    CHECK(c.n_prime == 15);
    CHECK(c.m - c.m_prime == 2);
    CHECK(c.n_prime - c.n == 2);
    CHECK(c.gap.decimal(7) == "0.5685425");  // 8 |5 sqrt2 - 7|
    CHECK(c.revalidated);
}

TEST_CASE("dirichlet route: gap * ceil(sqrt(N)) <= 8 for random alpha in [1,2]") {
    CounterRng rng(0xd1a1);
    for (int i = 0; i < 20; ++i) {
        Rat v = 1 + Rat(static_cast<unsigned long>(rng.next() >> 11), Int(1) << 53);
        v.canonicalize();
        Alpha a = Alpha::exact(QuadSurd(v));
        for (long N : {100L, 10'000L}) {
            GapCertificate c = general_upper_bound(a, Int(N));
            Int Q = isqrt(Int(N));
            if (Q * Q < N) Q += 1;
            CHECK(c.gap * QuadSurd(Q) <= QuadSurd(Int(8)));
            CHECK(c.level_bound <= QuadSurd(Int(40 * N)));
        }
    }
}

TEST_CASE("sqrtD pipeline, D = 2, primes {3,5}, P = 7") {
    PrimeSelection sel = selection_from_list(std::vector<std::uint64_t>{3, 5}, pell_fundamental(Int(2)).y);
    std::vector<Int> Ps{Int(7)};
    auto certs = construct_sqrtD(Int(2), sel, Ps, /*audit_lcm=*/true);
    REQUIRE(certs.size() == 1);
    const GapCertificate& c = certs[0];
    CHECK(c.revalidated);
    CHECK(c.provenance == Provenance::sqrtD_pipeline);

    // n = 105; q_35 and q_21 both divide q_105 by exact division.
    Int x2(6);
    Int q105 = 2 * seq_u(104, x2, -1);
    Int q35 = 2 * seq_u(34, x2, -1);
    Int q21 = 2 * seq_u(20, x2, -1);
    CHECK(c.q == q105);
    CHECK(divides(q35, q105));
    CHECK(divides(q21, q105));
    CHECK(c.wq.divisor == lcm(q35, q21));

    // Balance exponent of the lcm divisor sits in [0.40, 0.53]: the exact
    // window check is Q^5 >= q^2 and Q^100 <= q^53.
    CHECK(exponent_cmp(c.wq.divisor, c.q, Rat(2, 5)) >= 0);
    CHECK(exponent_cmp(c.wq.divisor, c.q, Rat(53, 100)) <= 0);
    CHECK(c.wq.exponent == doctest::Approx(7.0 / 15.0).epsilon(0.02));

    // gap * q_n <= 8, exactly.
    CHECK(c.gap * QuadSurd(c.q) <= QuadSurd(Int(8)));
}

TEST_CASE("sqrtD pipeline: level bound stays within q^(1+eps), eps shrinking") {
    // Levels sit between q and q^(1+eps); the measured excess exponent
    // log(level_bound)/log(q) - 1 shrinks as q grows.
    PrimeSelection sel = selection_from_list(std::vector<std::uint64_t>{3, 5}, pell_fundamental(Int(2)).y);
    std::vector<Int> Ps{Int(7), Int(11), Int(13), Int(17)};
    auto certs = construct_sqrtD(Int(2), sel, Ps);
    REQUIRE(certs.size() == 4);
    double prev_excess = 1e9;
    for (const GapCertificate& c : certs) {
        double excess = c.level_bound.log10_magnitude() / log10_of(c.q) - 1.0;
        CHECK(excess > -0.5);  // level_bound >> q up to the divisor defect
        CHECK(excess < prev_excess + 0.02);
        prev_excess = excess;
    }
    CHECK(prev_excess < 0.15);
}

TEST_CASE("sqrtD pipeline rejects bad P and non-coprime primes") {
    PrimeSelection sel = selection_from_list(std::vector<std::uint64_t>{3, 5}, pell_fundamental(Int(2)).y);
    std::vector<Int> even{Int(4)};
    CHECK_THROWS_AS(construct_sqrtD(Int(2), sel, even), Error);
    std::vector<Int> shared{Int(15)};
    CHECK_THROWS_AS(construct_sqrtD(Int(2), sel, shared), Error);
    std::vector<Int> ok{Int(7)};
    CHECK_THROWS_AS(construct_sqrtD(Int(4), sel, ok), Error);  // square D
}

TEST_CASE("general quadratic spec: alpha values") {
    // sqrt(D) displayed through the Pell solution: sqrt(2) = alpha(6,0,1,-1,1/4).
    GeneralQuadraticSpec s{Int(6), 0, 1, -1, Rat(1, 4)};
    CHECK(s.alpha() == QuadSurd::sqrt_of(Rat(2)));
    // Golden mean: r=1, a=1, b=0, x=1, sign=+1.
    GeneralQuadraticSpec g{Int(1), 1, 0, 1, Rat(1)};
    CHECK(g.alpha() == QuadSurd(Int(1), Int(1), Int(2), Int(5)));
    // Its square.
    GeneralQuadraticSpec g2{Int(1), 2, 0, 1, Rat(1)};
    CHECK(g2.alpha() == QuadSurd(Int(3), Int(1), Int(2), Int(5)));
    // Negative x normalizes away.
    GeneralQuadraticSpec neg{Int(-1), -1, 0, 1, Rat(-1)};
    CHECK(neg.alpha() == g.alpha());
    // Invalid shapes.
    CHECK_THROWS_AS((GeneralQuadraticSpec{Int(2), 1, 0, -1, Rat(1)}.alpha()), Error);  // |x|<3 with sign -1
    CHECK_THROWS_AS((GeneralQuadraticSpec{Int(3), 0, 0, 1, Rat(1)}.alpha()), Error);   // (a,b) = 0
}

TEST_CASE("general quadratic approximants: golden mean gives Fibonacci ratios") {
    GeneralQuadraticSpec g{Int(1), 1, 0, 1, Rat(1)};
    auto aps = approximants_general_quadratic(g, 10);
    REQUIRE(aps.size() == 10);
    // p/q walks the consecutive-Fibonacci family: first term F_3/F_2 = 2/1.
    Int f_lo = 1, f_hi = 2;
    for (const Approximant& ap : aps) {
        CHECK(ap.q == f_lo);
        CHECK(ap.p == f_hi);
        Int next = f_lo + f_hi;
        f_lo = f_hi;
        f_hi = next;
    }
    // Quality * q stays bounded (badly approximable target).
    for (const Approximant& ap : aps) CHECK(ap.scaled_quality.value < QuadSurd(Int(1)));
}

TEST_CASE("general quadratic approximants match the sqrtD pipeline term-by-term") {
    GeneralQuadraticSpec s{Int(6), 0, 1, -1, Rat(1, 2)};  // alpha = sqrt(8)
    auto aps = approximants_general_quadratic(s, 12);
    for (std::size_t i = 0; i < aps.size(); ++i) {
        PellSolution sol = pell_sequence(Int(2), i + 1);
        CHECK(aps[i].p == 2 * sol.x);
        CHECK(aps[i].q == sol.y);
    }
}

TEST_CASE("approximant quality scales like 1/q") {
    GeneralQuadraticSpec s{Int(3), 1, 1, -1, Rat(2, 7)};
    auto aps = approximants_general_quadratic(s, 30);
    QuadSurd alpha = s.alpha();
    for (const Approximant& ap : aps) {
        QuadSurd recheck = (alpha * QuadSurd(ap.q) - QuadSurd(ap.p)).abs();
        CHECK(recheck == ap.quality.value);
        CHECK(ap.scaled_quality.value < QuadSurd(Int(40)));
    }
}

TEST_CASE("construct_general on the golden mean: index equation and balances") {
    GeneralQuadraticSpec g{Int(1), 1, 0, 1, Rat(1)};
    GeneralConstruction res = construct_general(g, Rat(1, 3), 2);
    REQUIRE(res.certificates.size() == 2);
    REQUIRE(res.indices.size() == 2);
    CHECK(res.sel_one_mod4.primes == std::vector<std::uint64_t>{5});
    CHECK(res.sel_three_mod4.primes == std::vector<std::uint64_t>{3});
    for (const IndexSolution& s : res.indices) {
        CHECK(s.L * s.m_idx - s.L_prime * s.mp_idx == s.b_off);
        CHECK(s.b_off == 1);  // = a
        CHECK((s.L * s.m_idx) % 2 == 1);
        CHECK(gcd(s.L, s.m_idx) == 1);
        CHECK(gcd(s.L_prime, s.mp_idx) == 1);
    }
    for (const GapCertificate& c : res.certificates) {
        CHECK(c.revalidated);
        // Balance exponents >= 1/2 - eps - o(1): with eps = 1/3 the divisor
        // exponents are density-sized, comfortably above 1/10 here.
        CHECK(exponent_cmp(c.wq.divisor, c.q, Rat(1, 10)) >= 0);
        CHECK(exponent_cmp(c.wp.divisor, c.p, Rat(1, 10)) >= 0);
    }
}

TEST_CASE("construct_general with b = 1 exercises the doubled-T side") {
    GeneralQuadraticSpec s{Int(3), 1, 1, -1, Rat(1)};  // alpha = y * sqrt(5), disc 5
    GeneralConstruction res = construct_general(s, Rat(1, 3), 1);
    REQUIRE(res.certificates.size() == 1);
    CHECK(res.certificates[0].revalidated);
    CHECK(res.indices[0].b_off == 1);
}

TEST_CASE("construct_general routes even a, b = 0 to the strong path") {
    GeneralQuadraticSpec g2{Int(1), 2, 0, 1, Rat(1)};
    GeneralConstruction res = construct_general(g2, Rat(1, 3), 3);
    REQUIRE(res.certificates.size() == 3);
    for (const GapCertificate& c : res.certificates) {
        CHECK(c.provenance == Provenance::strong_exact);
        // Strongly evenly divisible: min(d, q/d)^2 >= 0.04 q, exact.
        Int d = c.wq.divisor;
        Int du = d * d < c.q ? d : divexact(c.q, d);
        CHECK(du * du * 25 >= c.q);
    }
}

TEST_CASE("strong-exact certificates for golden2") {
    GeneralQuadraticSpec g2{Int(1), 2, 0, 1, Rat(1)};
    auto certs = construct_strong_exact(g2, 10);
    REQUIRE(certs.size() == 10);
    // First certificate comes from n = 3: q = F_4 = 3, p = F_6 = 8.
    CHECK(certs[0].q == 3);
    CHECK(certs[0].p == 8);
    CHECK(certs[0].m == 4);
    CHECK(certs[0].m_prime == 2);
    CHECK(certs[0].n == 2);
    CHECK(certs[0].n_prime == 6);
    QuadSurd bound(Int(28));
    for (const GapCertificate& c : certs) {
        CHECK(c.revalidated);
        // min(d, q/d)^2 >= 0.04 q, as exact integers.
        Int d = c.wq.divisor;
        Int du = d * d < c.q ? d : divexact(c.q, d);
        CHECK(du * du * 25 >= c.q);
        Int e = c.wp.divisor;
        Int eu = e * e < c.p ? e : divexact(c.p, e);
        CHECK(eu * eu * 25 >= c.p);
        // gap * level_bound <= 28 (recorded constant; measured max ~27.13).
        CHECK(c.gap * c.level_bound <= bound);
    }
}

TEST_CASE("half-index divisibility is exhaustive for odd n") {
    // u_{(n-1)/2} | u_n for odd n <= 199 and x <= 30, both recurrence signs.
    for (int s : {1, -1})
        for (long x = 1; x <= 30; ++x)
            for (long n = 1; n <= 199; n += 2)
                CHECK(divides(seq_u((n - 1) / 2, Int(x), s), seq_u(n, Int(x), s)));
}

TEST_CASE("strong-exact requires b = 0 and even a") {
    CHECK_THROWS_AS(construct_strong_exact(GeneralQuadraticSpec{Int(1), 1, 0, 1, Rat(1)}, 2), Error);
    CHECK_THROWS_AS(construct_strong_exact(GeneralQuadraticSpec{Int(3), 2, 1, -1, Rat(1)}, 2), Error);
}
