// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/chebyshev.hpp"

#include <numeric>

namespace specgap {

namespace {

constexpr std::uint64_t kDoublingThreshold = 10'000;

// Lucas pair (L_k, L_{k+1}) with L_0 = 0, L_1 = 1, L_{k+1} = x L_k + s L_{k-1};
// our u_k equals L_{k+1}. Binary doubling from the most significant bit:
//   L_{2k}   = L_k (2 L_{k+1} - x L_k)
//   L_{2k+1} = L_{k+1}^2 + s L_k^2
struct LucasPair {
    Int lo, hi;  // (L_k, L_{k+1})
};

LucasPair lucas_pair(std::uint64_t k, const Int& x, int s) {
    if (k == 0) return {Int(0), Int(1)};
    LucasPair p = lucas_pair(k >> 1, x, s);
    Int cross = p.lo * (2 * p.hi - x * p.lo);           // L_{2j}
    Int upper = p.hi * p.hi + (s > 0 ? Int(p.lo * p.lo) : Int(-(p.lo * p.lo)));  // L_{2j+1}
    if (k & 1) {
        Int next = x * upper + (s > 0 ? cross : Int(-cross));  // L_{2j+2}
        return {upper, next};
    }
    return {cross, upper};
}

}  // namespace

Int seq_u(std::uint64_t k, const Int& x, int s) {
    if (s != 1 && s != -1) fail(Errc::validation, "recurrence sign must be +1 or -1");
    if (k <= kDoublingThreshold) {
        Int prev = 1, cur = x;  // u_0, u_1
        if (k == 0) return prev;
        for (std::uint64_t i = 1; i < k; ++i) {
            Int next = x * cur + (s > 0 ? prev : Int(-prev));
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    return lucas_pair(k + 1, x, s).lo;
}

Int seq_v(std::uint64_t k, const Int& x, int s) {
    if (s != 1 && s != -1) fail(Errc::validation, "recurrence sign must be +1 or -1");
    if (k <= kDoublingThreshold) {
        Int prev = 2, cur = x;  // v_0, v_1
        if (k == 0) return prev;
        for (std::uint64_t i = 1; i < k; ++i) {
            Int next = x * cur + (s > 0 ? prev : Int(-prev));
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    // v_k = 2 u_k - x u_{k-1} = 2 L_{k+1} - x L_k
    LucasPair p = lucas_pair(k, x, s);
    return 2 * p.hi - x * p.lo;
}

bool verify_pell_poly(std::uint64_t n, const Int& x) {
    if (n < 1) fail(Errc::validation, "n must be >= 1");
    // T_n(x) = v_n(2x)/2, U_{n-1}(x) = u_{n-1}(2x) at doubled parameter.
    Int tn = divexact(seq_v(n, 2 * x, -1), Int(2));
    Int un1 = seq_u(n - 1, 2 * x, -1);
    return tn * tn - (x * x - 1) * un1 * un1 == 1;
}

bool verify_composition(std::uint64_t n, std::uint64_t m, const Int& x) {
    if (n < m) fail(Errc::validation, "requires n >= m");
    Int lhs = seq_v(n + m, x, -1);
    Int rhs = seq_v(n, x, -1) * seq_v(m, x, -1) - seq_v(n - m, x, -1);
    return lhs == rhs;
}

Int linear_sds_term(std::uint64_t n, const Int& b, const Int& d) {
    if (gcd(b, d) != 1) fail(Errc::validation, "linear recurrence needs gcd(b, d) = 1");
    if (n == 0) return 0;
    Int prev = 0, cur = 1;
    for (std::uint64_t i = 1; i < n; ++i) {
        Int next = b * cur + d * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool sds_gcd_check(const SDSSpec& spec, std::uint64_t n, std::uint64_t m) {
    if (n < 1 || m < 1) fail(Errc::validation, "indices must be >= 1");
    std::uint64_t g = std::gcd(n, m);
    // gcd is taken on magnitudes; x = 1 specializations pass through 0 and -1.
    switch (spec.kind) {
        case SDSSpec::Kind::u_halfint: {
            Int a = cheb_U(n - 1, spec.x), b = cheb_U(m - 1, spec.x);
            return gcd(a, b) == ::abs(cheb_U(g - 1, spec.x));
        }
        case SDSSpec::Kind::t_halfint_doubled: {
            if (n % 2 == 0 || m % 2 == 0)
                fail(Errc::odd_index_required, "doubled-T gcd identity needs odd indices");
            Int a = cheb_T2(n, spec.x), b = cheb_T2(m, spec.x);
            return gcd(a, b) == ::abs(cheb_T2(g, spec.x));
        }
        case SDSSpec::Kind::linear_recurrence: {
            Int a = linear_sds_term(n, spec.b, spec.d), b = linear_sds_term(m, spec.b, spec.d);
            return gcd(a, b) == ::abs(linear_sds_term(g, spec.b, spec.d));
        }
    }
    fail(Errc::internal, "bad SDS kind");
}

Int lcm_divisor(std::span<const Int> values) {
    if (values.empty()) fail(Errc::validation, "lcm of an empty list");
    Int acc = 1;
    for (const Int& v : values) {
        if (sign_of(v) <= 0) fail(Errc::validation, "lcm requires positive values");
        acc = lcm(acc, v);
    }
    return acc;
}

LcmAudit lcm_divisor_audited(std::span<const Int> values) {
    LcmAudit out;
    out.value = lcm_divisor(values);
    std::size_t J = values.size();
    if (J > 20) fail(Errc::validation, "audit limited to 20 values");
    // prod over nonempty S of gcd(S)^((-1)^(|S|-1)), as an exact rational.
    Int num = 1, den = 1;
    out.subsets = 0;
    for (std::size_t mask = 1; mask < (1u << J); ++mask) {
        Int g = 0;
        int bits = 0;
        for (std::size_t j = 0; j < J; ++j) {
            if (mask & (1u << j)) {
                g = bits == 0 ? values[j] : gcd(g, values[j]);
                ++bits;
            }
        }
        ++out.subsets;
        if (bits % 2 == 1)
            num *= g;
        else
            den *= g;
    }
    out.audit_ok = num == out.value * den;
    return out;
}

std::vector<SelftestSuite> selftest_identities() {
    std::vector<SelftestSuite> suites;
    {
        SelftestSuite s{.name = "pell_polynomial_identity"};
        for (std::uint64_t n = 1; n <= 50; ++n)
            for (long x = 1; x <= 20; ++x) {
                ++s.cases;
                if (!verify_pell_poly(n, Int(x))) ++s.failures;
            }
        suites.push_back(s);
    }
    {
        SelftestSuite s{.name = "composition_formula"};
        for (long x = 1; x <= 30; ++x)
            for (std::uint64_t n = 0; n <= 100; ++n)
                for (std::uint64_t m = 0; m <= n; ++m) {
                    ++s.cases;
                    if (!verify_composition(n, m, Int(x))) ++s.failures;
                }
        suites.push_back(s);
    }
    {
        SelftestSuite s{.name = "u_strong_divisibility"};
        for (long x = 1; x <= 30; ++x) {
            std::vector<Int> u(101);
            for (std::uint64_t n = 1; n <= 100; ++n) u[n] = cheb_U(n - 1, Int(x));
            for (std::uint64_t n = 1; n <= 100; ++n)
                for (std::uint64_t m = n; m <= 100; ++m) {
                    ++s.cases;
                    if (gcd(u[n], u[m]) != ::abs(u[std::gcd(n, m)])) ++s.failures;
                }
        }
        suites.push_back(s);
    }
    {
        SelftestSuite s{.name = "t_odd_strong_divisibility"};
        for (long x = 1; x <= 30; ++x) {
            std::vector<Int> t(100);
            for (std::uint64_t n = 1; n <= 99; n += 2) t[n] = cheb_T2(n, Int(x));
            for (std::uint64_t n = 1; n <= 99; n += 2)
                for (std::uint64_t m = n; m <= 99; m += 2) {
                    ++s.cases;
                    if (gcd(t[n], t[m]) != ::abs(t[std::gcd(n, m)])) ++s.failures;
                }
        }
        suites.push_back(s);
    }
    return suites;
}

}  // namespace specgap
