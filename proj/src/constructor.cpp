// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/constructor.hpp"

#include <algorithm>

#include "specgap/chebyshev.hpp"
#include "specgap/pell.hpp"

namespace specgap {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::dirichlet: return "dirichlet";
        case Provenance::sqrtD_pipeline: return "sqrtD_pipeline";
        case Provenance::general_quadratic: return "general_quadratic";
        case Provenance::strong_exact: return "strong_exact";
        case Provenance::approximant: return "approximant";
    }
    return "unknown";
}

namespace {

// balance(n, d) >= threshold. Double logs carry ~12 safe digits even for
// huge operands, so the integer-powering comparison only runs in the thin
// band where they cannot decide.
bool balance_at_least(const Int& n, const Int& d, const Rat& threshold) {
    if (n == 1) return true;
    double b = std::clamp(2.0 * exponent_of(d <= divexact(n, d) ? d : divexact(n, d), n), 0.0, 1.0);
    double t = threshold.get_d();
    if (b > t + 1e-6) return true;
    if (b < t - 1e-6) return false;
    return balance_cmp(n, d, threshold) >= 0;
}

}  // namespace

void revalidate(GapCertificate& c) {
    if (c.m <= c.m_prime || c.m_prime < 1) fail(Errc::validation, "certificate needs m > m' >= 1");
    if (c.n_prime <= c.n || c.n < 1) fail(Errc::validation, "certificate needs n' > n >= 1");
    if (c.m * c.m - c.m_prime * c.m_prime != 4 * c.q) fail(Errc::validation, "m^2 - m'^2 != 4q");
    if (c.n_prime * c.n_prime - c.n * c.n != 4 * c.p) fail(Errc::validation, "n'^2 - n^2 != 4p");
    QuadSurd lambda = c.alpha * QuadSurd(c.m * c.m) + QuadSurd(c.n * c.n);
    QuadSurd lambda_p = c.alpha * QuadSurd(c.m_prime * c.m_prime) + QuadSurd(c.n_prime * c.n_prime);
    QuadSurd diff = (lambda - lambda_p).abs();
    QuadSurd expect = (c.alpha * QuadSurd(c.q) - QuadSurd(c.p)).abs() * QuadSurd(Int(4));
    if (!(diff == expect) || !(c.gap == expect)) fail(Errc::validation, "gap identity failed");
    if (c.gap.sign() <= 0) fail(Errc::validation, "gap must be positive");
    QuadSurd hi = cmp(lambda, lambda_p) >= 0 ? lambda : lambda_p;
    if (!(c.level_bound == hi)) fail(Errc::validation, "level bound mismatch");
    if (!divides(c.wq.divisor, c.q) || !divides(c.wp.divisor, c.p))
        fail(Errc::divisibility_violation, "witness divisor does not divide its side");
    c.revalidated = true;
}

GapCertificate certificate_from_divisors(const QuadSurd& alpha, const Int& p, const Int& q, const Int& e,
                                         const Int& d, Provenance prov, int desquare_factor) {
    if (sign_of(p) <= 0 || sign_of(q) <= 0) fail(Errc::validation, "approximant sides must be positive");
    if (!divides(d, q) || !divides(e, p)) fail(Errc::divisibility_violation, "given divisors do not divide");
    // The split needs the smaller half on each side; equality would collapse a
    // coordinate to zero.
    Int du = d * d < q ? d : divexact(q, d);
    Int eu = e * e < p ? e : divexact(p, e);
    if (du * du == q) fail(Errc::degenerate_divisor, "q is the square of its divisor");
    if (eu * eu == p) fail(Errc::degenerate_divisor, "p is the square of its divisor");

    GapCertificate c;
    c.alpha = alpha;
    c.p = p;
    c.q = q;
    c.m = divexact(q, du) + du;
    c.m_prime = divexact(q, du) - du;
    c.n = divexact(p, eu) - eu;
    c.n_prime = divexact(p, eu) + eu;
    c.provenance = prov;
    c.desquare_factor = desquare_factor;
    c.gap = (alpha * QuadSurd(q) - QuadSurd(p)).abs() * QuadSurd(Int(4));
    QuadSurd lambda = alpha * QuadSurd(c.m * c.m) + QuadSurd(c.n * c.n);
    QuadSurd lambda_p = alpha * QuadSurd(c.m_prime * c.m_prime) + QuadSurd(c.n_prime * c.n_prime);
    c.level_bound = cmp(lambda, lambda_p) >= 0 ? lambda : lambda_p;
    c.wq.divisor = d;
    c.wq.exponent = exponent_of(d, q);
    c.wq.balance = q == 1 ? 1.0 : std::clamp(2.0 * exponent_of(du, q), 0.0, 1.0);
    c.wp.divisor = e;
    c.wp.exponent = exponent_of(e, p);
    c.wp.balance = p == 1 ? 1.0 : std::clamp(2.0 * exponent_of(eu, p), 0.0, 1.0);
    c.evenly_divisible = balance_at_least(q, du, Rat(9, 20)) && balance_at_least(p, eu, Rat(9, 20));
    revalidate(c);
    return c;
}

GapCertificate construct_from_approximant(const QuadSurd& alpha, const Int& p, const Int& q,
                                          const FactorConfig& cfg) {
    Desquared ds = desquare(p, q);
    DivisorWitness wq = best_divisor(ds.q, cfg);
    DivisorWitness wp = best_divisor(ds.p, cfg);
    return certificate_from_divisors(alpha, ds.p, ds.q, wp.d, wq.d, Provenance::approximant, ds.t);
}

GapCertificate general_upper_bound(const Alpha& alpha, const Int& N) {
    if (N < 4) fail(Errc::validation, "N must be >= 4");
    if (!alpha.is_exact())
        fail(Errc::validation, "construction requires the exact alpha path (sqrt:, surd:, golden2)");
    Int Q = isqrt(N);
    if (Q * Q < N) Q += 1;  // ceil(sqrt(N))
    Approximant ap = dirichlet_approx(alpha, Q);
    const Int& q = ap.q;
    const Int& a = ap.p;

    GapCertificate c;
    c.alpha = alpha.surd();
    // m^2 - m'^2 = 8q and n'^2 - n^2 = 8a, so the certificate's underlying
    // approximant is (2a, 2q).
    c.q = 2 * q;
    c.p = 2 * a;
    c.m = 2 * q + 1;
    c.m_prime = 2 * q - 1;
    c.n = 2 * a - 1;
    c.n_prime = 2 * a + 1;
    c.provenance = Provenance::dirichlet;
    c.gap = (c.alpha * QuadSurd(c.q) - QuadSurd(c.p)).abs() * QuadSurd(Int(4));
    QuadSurd lambda = c.alpha * QuadSurd(c.m * c.m) + QuadSurd(c.n * c.n);
    QuadSurd lambda_p = c.alpha * QuadSurd(c.m_prime * c.m_prime) + QuadSurd(c.n_prime * c.n_prime);
    c.level_bound = cmp(lambda, lambda_p) >= 0 ? lambda : lambda_p;
    c.wq = {Int(2), exponent_of(Int(2), c.q), 0.0};
    c.wp = {Int(2), exponent_of(Int(2), c.p), 0.0};
    revalidate(c);
    return c;
}

std::vector<GapCertificate> construct_sqrtD(const Int& D, const PrimeSelection& primes, std::span<const Int> P_list,
                                            bool audit_lcm) {
    if (D < 2 || is_perfect_square(D)) fail(Errc::square_d, "D must be >= 2 and not a perfect square");
    if (P_list.empty()) fail(Errc::validation, "need at least one P");
    PellSolution fund = pell_fundamental(D);
    for (auto l : primes.primes)
        if (mpz_divisible_ui_p(fund.y.get_mpz_t(), static_cast<unsigned long>(l)))
            fail(Errc::validation, "prime " + std::to_string(l) + " divides the fundamental y");
    Int Lprod = primes.product();
    QuadSurd alpha = QuadSurd::sqrt_of(Rat(4 * D));

    // x_n = T_n(x), y_n = y U_{n-1}(x); p_n = 2 x_n, q_n = y_n.
    Int x2 = 2 * fund.x;
    auto q_at = [&](const Int& idx) {
        if (!fits_i64(idx)) fail(Errc::validation, "index too large");
        return Int(fund.y * seq_u(static_cast<std::uint64_t>(to_i64(idx)) - 1, x2, -1));
    };
    auto p_at = [&](const Int& idx) {
        if (!fits_i64(idx)) fail(Errc::validation, "index too large");
        return seq_v(static_cast<std::uint64_t>(to_i64(idx)), x2, -1);  // = 2 T_idx(x)
    };

    std::vector<GapCertificate> out;
    for (const Int& P : P_list) {
        if (sign_of(P) <= 0 || P % 2 == 0) fail(Errc::validation, "P must be odd and positive");
        if (gcd(P, Lprod) != 1) fail(Errc::validation, "P must be coprime to the selected primes");
        Int n = Lprod * P;
        Int qn = q_at(n), pn = p_at(n);
        std::vector<Int> qdivs, pdivs;
        for (auto l : primes.primes) {
            Int sub = divexact(n, Int(static_cast<unsigned long>(l)));
            Int qs = q_at(sub), ps = p_at(sub);
            if (!divides(qs, qn) || !divides(ps, pn))
                fail(Errc::divisibility_violation,
                     "strong divisibility failed at n/" + std::to_string(l) + " (this falsifies the gcd identities)");
            qdivs.push_back(qs);
            pdivs.push_back(ps);
        }
        Int Q, Pdiv;
        if (audit_lcm) {
            LcmAudit aq = lcm_divisor_audited(qdivs);
            LcmAudit ap = lcm_divisor_audited(pdivs);
            if (!aq.audit_ok || !ap.audit_ok) fail(Errc::internal, "lcm inclusion-exclusion audit failed");
            Q = aq.value;
            Pdiv = ap.value;
        } else {
            Q = lcm_divisor(qdivs);
            Pdiv = lcm_divisor(pdivs);
        }
        if (!divides(Q, qn) || !divides(Pdiv, pn))
            fail(Errc::divisibility_violation, "lcm divisor does not divide its term");
        out.push_back(certificate_from_divisors(alpha, pn, qn, Pdiv, Q, Provenance::sqrtD_pipeline));
    }
    // Deterministic emission order: increasing q.
    std::sort(out.begin(), out.end(), [](const GapCertificate& a, const GapCertificate& b) { return a.q < b.q; });
    return out;
}

GeneralQuadraticSpec GeneralQuadraticSpec::normalized() const {
    GeneralQuadraticSpec s = *this;
    if (sign_of(s.x) == 0) fail(Errc::invalid_spec, "x must be nonzero");
    if (s.b != 0 && s.b != 1) fail(Errc::invalid_spec, "b must be 0 or 1");
    if (s.sign != 1 && s.sign != -1) fail(Errc::invalid_spec, "sign must be +1 or -1");
    if (sign_of(s.r) == 0) fail(Errc::invalid_spec, "r must be nonzero");
    if (s.a == 0 && s.b == 0) fail(Errc::invalid_spec, "(a, b) = (0, 0) makes alpha rational");
    if (sign_of(s.x) < 0) {
        // alpha(-x, a, b, sign, r) = alpha(x, -a, b, sign, (-1)^a r)
        s.x = -s.x;
        s.a = -s.a;
        if (s.a % 2 != 0) s.r = -s.r;
    }
    if (s.sign == -1 && s.x <= 2) fail(Errc::invalid_spec, "sign = -1 requires |x| >= 3");
    Int disc = s.discriminant();
    if (is_perfect_square(disc)) fail(Errc::invalid_spec, "x^2 + 4*sign is a perfect square; alpha is rational");
    return s;
}

QuadSurd GeneralQuadraticSpec::alpha() const {
    GeneralQuadraticSpec s = normalized();
    Int disc = s.discriminant();
    QuadSurd root = QuadSurd::sqrt_of(Rat(disc));
    QuadSurd y = (QuadSurd(s.x) + root) / QuadSurd(Int(2));
    QuadSurd acc{Rat(1)};
    long e = s.a >= 0 ? s.a : -s.a;
    for (long i = 0; i < e; ++i) acc = acc * y;
    if (s.a < 0) acc = QuadSurd(Rat(1)) / acc;
    if (s.b == 1) acc = acc * root;
    QuadSurd result = QuadSurd(s.r) * acc;
    if (result.sign() <= 0) fail(Errc::invalid_spec, "alpha must be positive; adjust r");
    return result;
}

std::vector<Approximant> approximants_general_quadratic(const GeneralQuadraticSpec& spec_in, std::size_t count) {
    GeneralQuadraticSpec spec = spec_in.normalized();
    if (count < 1) fail(Errc::validation, "count must be >= 1");
    QuadSurd alpha = spec.alpha();
    Alpha ap = Alpha::exact(alpha);
    Int cnum = spec.r.get_num();
    Int cden = spec.r.get_den();
    // r > 0 after normalization checks on alpha's sign; sequences are positive.
    if (sign_of(cnum) < 0) fail(Errc::invalid_spec, "negative r with these (a, b) gives alpha < 0");

    std::vector<Approximant> out;
    // Smallest index keeping every sequence index nonnegative (and n >= 1).
    long start = std::max<long>(1, -spec.a);
    for (long n = start; out.size() < count; ++n) {
        Int num, den;
        if (spec.b == 0) {
            num = cnum * seq_u(static_cast<std::uint64_t>(n + spec.a), spec.x, spec.sign);
            den = cden * seq_u(static_cast<std::uint64_t>(n), spec.x, spec.sign);
        } else {
            num = cnum * seq_v(static_cast<std::uint64_t>(n + spec.a), spec.x, spec.sign);
            den = cden * seq_u(static_cast<std::uint64_t>(n - 1), spec.x, spec.sign);
        }
        if (sign_of(num) <= 0 || sign_of(den) <= 0) continue;
        Approximant a;
        a.p = num;
        a.q = den;
        a.quality = quality_of(ap, num, den);
        Quality sq = a.quality;
        sq.value = sq.value * QuadSurd(den);
        a.scaled_quality = sq;
        out.push_back(std::move(a));
    }
    return out;
}

namespace {

// Smallest nonnegative solution mu of 2 L^2 mu = rhs (mod L'^2), then the
// increasing family mu + t L'^2.
Int crt_base_mu(const Int& L, const Int& Lp, const Int& rhs) {
    Int mod = Lp * Lp;
    Int coeff = 2 * L * L % mod;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), coeff.get_mpz_t(), mod.get_mpz_t()) == 0)
        fail(Errc::internal, "2L^2 not invertible mod L'^2");
    Int mu = inv * (rhs % mod) % mod;
    if (sign_of(mu) < 0) mu += mod;
    return mu;
}

}  // namespace

GeneralConstruction construct_general(const GeneralQuadraticSpec& spec_in, const Rat& eps, std::size_t count) {
    GeneralQuadraticSpec spec = spec_in.normalized();
    if (count < 1) fail(Errc::validation, "count must be >= 1");
    GeneralConstruction out;
    if (spec.b == 0 && spec.a % 2 == 0) {
        // Second-kind-only specs admit the half-index divisors, which are
        // strictly stronger (strongly evenly divisible) and need no prime
        // selections; route there.
        out.certificates = construct_strong_exact(spec, count);
        return out;
    }
    out.sel_one_mod4 = prime_select(eps, {.kind = PoolPolicy::Kind::one_mod4});
    out.sel_three_mod4 = prime_select(eps, {.kind = PoolPolicy::Kind::three_mod4});
    Int L = out.sel_one_mod4.product();
    Int Lp = out.sel_three_mod4.product();
    QuadSurd alpha = spec.alpha();
    Int cnum = spec.r.get_num();
    Int cden = spec.r.get_den();

    // Index bookkeeping. The divisibility lives in the sds index: u_k sits at
    // sds index k+1, v_k at k. Arrange numerator sds index = L m (odd) and
    // denominator sds index = L' m', so L m - L' m' = a in all four cases.
    Int rhs = Int(spec.a) - L + Lp;  // 2 L^2 mu - L'^2 mu' = a - L + L'
    Int mu = crt_base_mu(L, Lp, rhs);
    Int step = Lp * Lp;
    while (out.certificates.size() < count) {
        Int m_idx = 2 * mu * L + 1;
        Int mup = divexact(2 * L * L * mu - rhs, step);
        if (sign_of(mup) >= 0) {
            Int mp_idx = mup * Lp + 1;
            Int num_sds = L * m_idx;   // odd by construction
            Int den_sds = Lp * mp_idx;
            if (num_sds - den_sds != spec.a) fail(Errc::internal, "index equation violated");
            if (den_sds >= 2 && num_sds >= 1) {
                if (!fits_i64(num_sds) || !fits_i64(den_sds))
                    fail(Errc::validation, "index exceeds the supported range; use a larger eps");
                auto u64_of = [](const Int& v) { return static_cast<std::uint64_t>(to_i64(v)); };
                Int num, den;
                std::vector<Int> num_divs, den_divs;
                if (spec.b == 0) {
                    num = cnum * seq_u(u64_of(num_sds) - 1, spec.x, spec.sign);
                    for (auto l : out.sel_one_mod4.primes)
                        num_divs.push_back(seq_u(u64_of(divexact(num_sds, Int((unsigned long)l))) - 1, spec.x, spec.sign));
                } else {
                    num = cnum * seq_v(u64_of(num_sds), spec.x, spec.sign);
                    for (auto l : out.sel_one_mod4.primes)
                        num_divs.push_back(seq_v(u64_of(divexact(num_sds, Int((unsigned long)l))), spec.x, spec.sign));
                }
                den = cden * seq_u(u64_of(den_sds) - 1, spec.x, spec.sign);
                for (auto l : out.sel_three_mod4.primes)
                    den_divs.push_back(seq_u(u64_of(divexact(den_sds, Int((unsigned long)l))) - 1, spec.x, spec.sign));

                for (const Int& dv : num_divs)
                    if (!divides(dv, num)) fail(Errc::divisibility_violation, "numerator divisor failed");
                for (const Int& dv : den_divs)
                    if (!divides(dv, den)) fail(Errc::divisibility_violation, "denominator divisor failed");
                Int e = lcm_divisor(num_divs);
                Int d = lcm_divisor(den_divs);
                if (!divides(e, num) || !divides(d, den))
                    fail(Errc::divisibility_violation, "lcm divisor failed");
                out.certificates.push_back(
                    certificate_from_divisors(alpha, num, den, e, d, Provenance::general_quadratic));
                IndexSolution sol;
                sol.L = L;
                sol.L_prime = Lp;
                sol.mu = mu;
                sol.mu_prime = mup;
                sol.m_idx = m_idx;
                sol.mp_idx = mp_idx;
                sol.b_off = spec.a;
                out.indices.push_back(sol);
            }
        }
        mu += step;
    }
    return out;
}

std::vector<GapCertificate> construct_strong_exact(const GeneralQuadraticSpec& spec_in, std::size_t count) {
    GeneralQuadraticSpec spec = spec_in.normalized();
    if (spec.b != 0 || spec.a % 2 != 0)
        fail(Errc::invalid_spec, "strong-exact route needs b = 0 and even a");
    if (count < 1) fail(Errc::validation, "count must be >= 1");
    QuadSurd alpha = spec.alpha();
    Int cnum = spec.r.get_num();
    Int cden = spec.r.get_den();

    std::vector<GapCertificate> out;
    long start = 1;
    if (spec.a < 0) start = std::max<long>(start, -spec.a + 1);
    if (start % 2 == 0) ++start;
    for (long n = start; out.size() < count; n += 2) {
        // Odd n and even a keep both u-indices odd, so u_{(k-1)/2} | u_k
        // on both sides (sds index (k+1)/2 divides k+1).
        Int num = cnum * seq_u(static_cast<std::uint64_t>(n + spec.a), spec.x, spec.sign);
        Int den = cden * seq_u(static_cast<std::uint64_t>(n), spec.x, spec.sign);
        Int e = seq_u(static_cast<std::uint64_t>((n + spec.a - 1) / 2), spec.x, spec.sign);
        Int d = seq_u(static_cast<std::uint64_t>((n - 1) / 2), spec.x, spec.sign);
        if (!divides(e, num) || !divides(d, den))
            fail(Errc::divisibility_violation, "half-index divisibility failed");
        if (d * d == den || e * e == num) continue;  // degenerate split; skip this index
        out.push_back(certificate_from_divisors(alpha, num, den, e, d, Provenance::strong_exact));
    }
    return out;
}

}  // namespace specgap
