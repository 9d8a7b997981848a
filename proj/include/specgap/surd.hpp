// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "specgap/bigint.hpp"
#include "specgap/dyadic.hpp"
#include "specgap/factor.hpp"

namespace specgap {

/// Exact sign of u + v*sqrt(d) for squarefree d >= 2, by integer case analysis.
int surd_sign(const Int& u, const Int& v, const Int& d);

/// Exact real of the form (a + b*sqrt(d))/c.
///
/// Canonical form: c >= 1, gcd(a, b, c) = 1, d squarefree; b = 0 forces d = 1,
/// so rationals have a unique representation and equality is field-wise.
class QuadSurd {
  public:
    QuadSurd() : a_(0), b_(0), c_(1), d_(1) {}
    QuadSurd(const Int& value) : a_(value), b_(0), c_(1), d_(1) {}
    QuadSurd(long value) : a_(value), b_(0), c_(1), d_(1) {}
    explicit QuadSurd(const Rat& value) : a_(value.get_num()), b_(0), c_(value.get_den()), d_(1) {}
    /// Accepts unevaluated gmpxx integer expressions like QuadSurd(m * m).
    template <class U>
    QuadSurd(const __gmp_expr<mpz_t, U>& e) : QuadSurd(Int(e)) {}
    QuadSurd(Int a, Int b, Int c, Int d);

    /// sqrt(r) for a nonnegative rational r.
    static QuadSurd sqrt_of(const Rat& r);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    bool is_rational() const { return sign_of(b_) == 0; }
    bool is_zero() const { return sign_of(a_) == 0 && sign_of(b_) == 0; }
    Rat to_rational() const;  ///< requires is_rational()

    int sign() const;
    Int floor() const;

    QuadSurd operator-() const;
    QuadSurd abs() const { return sign() < 0 ? -*this : *this; }

    friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);
    friend bool operator==(const QuadSurd& x, const QuadSurd& y);

    /// Exact comparison; operands must share a radicand or be rational.
    friend int cmp(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign(); }
    friend bool operator<(const QuadSurd& x, const QuadSurd& y) { return cmp(x, y) < 0; }
    friend bool operator<=(const QuadSurd& x, const QuadSurd& y) { return cmp(x, y) <= 0; }
    friend bool operator>(const QuadSurd& x, const QuadSurd& y) { return cmp(x, y) > 0; }
    friend bool operator>=(const QuadSurd& x, const QuadSurd& y) { return cmp(x, y) >= 0; }

    /// Certified enclosure with radius <= 2^-bits * max(1, |value|); bits >= 8.
    CertifiedReal eval(unsigned bits) const;

    /// Exact rounding to `sig_digits` significant digits (half away from zero).
    std::string decimal(int sig_digits = 30) const;

    /// log10 |value| to double precision, cancellation-safe for huge operands.
    double log10_magnitude() const;

    std::string str() const;  ///< "(a+b*sqrt(d))/c" debug form

  private:
    Int a_, b_, c_, d_;
};

enum class SurdOp { add, sub, mul, div };

/// The four-way arithmetic entry point used by the C API.
QuadSurd surd_arith(const QuadSurd& x, const QuadSurd& y, SurdOp op);

}  // namespace specgap
