// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "specgap/errors.hpp"

namespace specgap {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign_of(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// floor(sqrt(n)); n must be nonnegative.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// floor(n^(1/k)); n nonnegative, k >= 1.
inline Int iroot(const Int& n, unsigned long k) {
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return sign_of(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow10(unsigned long e) { return pow_ui(Int(10), e); }

/// floor division (rounds toward -infinity).
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient n/d; caller guarantees divisibility.
inline Int divexact(const Int& n, const Int& d) {
    Int q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline size_t bit_length(const Int& n) { return mpz_sizeinbase(n.get_mpz_t(), 2); }

/// log2 of |n| with about 15 significant digits, usable for huge integers.
inline double log2_of(const Int& n) {
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    if (mant == 0.0) return 0.0;
    return std::log2(std::abs(mant)) + static_cast<double>(exp2);
}

inline double log10_of(const Int& n) { return log2_of(n) * 0.30102999566398119521; }

inline bool fits_i64(const Int& n) { return mpz_fits_slong_p(n.get_mpz_t()) != 0; }
inline std::int64_t to_i64(const Int& n) { return static_cast<std::int64_t>(mpz_get_si(n.get_mpz_t())); }

Int parse_int(std::string_view text);

/// Accepts "p", "p/q" and decimal forms like "0.25" or "-1.5e-3"; exact.
Rat parse_rational(std::string_view text);

std::string to_string(const Int& n);
std::string to_string(const Rat& r);

}  // namespace specgap
