// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "specgap/factor.hpp"

using namespace specgap;

TEST_CASE("factorize basics") {
    auto f = factorize(Int(12));
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == 2);
    CHECK(f[0].second == 2);
    CHECK(f[1].first == 3);
    CHECK(f[1].second == 1);
    CHECK(factorize(Int(1)).empty());
    // A 60-bit semiprime exercises the rho path past the trial bound.
    Int p("1000000007"), q("1000000009");
    auto g = factorize(p * q);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == p);
    CHECK(g[1].first == q);
}

TEST_CASE("factorization cap raises FactorizationTimeout") {
    Int huge = pow_ui(Int(10), 600);
    CHECK_THROWS_AS(factorize(huge + 7), Error);
    try {
        factorize(huge + 7);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::factorization_timeout);
    }
}

TEST_CASE("best_divisor examples") {
    DivisorWitness w12 = best_divisor(Int(12));
    CHECK(w12.d == 3);
    CHECK(w12.balance == doctest::Approx(0.8842).epsilon(1e-3));
    CHECK(w12.balance_decimal().substr(0, 6) == "0.8842");

    DivisorWitness w36 = best_divisor(Int(36));
    CHECK(w36.d == 6);
    CHECK(w36.balance == doctest::Approx(1.0));

    DivisorWitness w17 = best_divisor(Int(17));
    CHECK(w17.d == 1);
    CHECK(w17.balance == doctest::Approx(0.0));

    DivisorWitness w1 = best_divisor(Int(1));
    CHECK(w1.d == 1);
    CHECK(w1.balance == doctest::Approx(1.0));
}

TEST_CASE("best_divisor maximality against full enumeration") {
    // d * (n/d) = n and no divisor <= sqrt(n) beats d, for every n <= 10^5.
    for (long n = 1; n <= 100'000; ++n) {
        DivisorWitness w = best_divisor(Int(n));
        CHECK(divides(w.d, Int(n)));
        Int root = isqrt(Int(n));
        CHECK(w.d * w.d <= n);
        // The cofactor bound pins maximality: no divisor in (d, sqrt(n)].
        bool better = false;
        for (Int cand = w.d + 1; cand * cand <= n; ++cand)
            if (divides(cand, Int(n))) {
                better = true;
                break;
            }
        CHECK_FALSE(better);
        (void)root;
    }
}

TEST_CASE("balance threshold comparisons are exact") {
    // balance(12, 3) = log 3 / (0.5 log 12) = 0.88449...
    CHECK(balance_cmp(Int(12), Int(3), Rat(88, 100)) > 0);
    CHECK(balance_cmp(Int(12), Int(3), Rat(89, 100)) < 0);
    CHECK(balance_cmp(Int(36), Int(6), Rat(1)) == 0);  // perfect square: exactly 1
    CHECK(balance_cmp(Int(17), Int(1), Rat(1, 100)) < 0);
    // exponent_cmp: log(8)/log(64) = 1/2 exactly
    CHECK(exponent_cmp(Int(8), Int(64), Rat(1, 2)) == 0);
    CHECK(exponent_cmp(Int(9), Int(64), Rat(1, 2)) > 0);
    CHECK(exponent_cmp(Int(7), Int(64), Rat(1, 2)) < 0);
}

TEST_CASE("desquare examples") {
    auto a = desquare(Int(17), Int(12));
    CHECK(a.t == 1);
    CHECK(a.p == 17);
    CHECK(a.q == 12);
    auto b = desquare(Int(4), Int(9));
    CHECK(b.t == 2);
    CHECK(b.p == 8);
    CHECK(b.q == 18);
    auto c = desquare(Int(2), Int(3));
    CHECK(c.t == 1);
    // Exhaustive: some t in {1,2,3} always works.
    for (long p = 1; p <= 60; ++p)
        for (long q = 1; q <= 60; ++q) {
            auto r = desquare(Int(p), Int(q));
            CHECK(!is_perfect_square(r.p));
            CHECK(!is_perfect_square(r.q));
            CHECK(r.t >= 1);
            CHECK(r.t <= 3);
        }
}

TEST_CASE("squarefree decomposition") {
    auto [s, d] = squarefree_decompose(Int(8));
    CHECK(s == 2);
    CHECK(d == 2);
    auto [s2, d2] = squarefree_decompose(Int(360));  // 2^3 3^2 5
    CHECK(s2 == 6);
    CHECK(d2 == 10);
    auto [s3, d3] = squarefree_decompose(Int(1));
    CHECK(s3 == 1);
    CHECK(d3 == 1);
}
