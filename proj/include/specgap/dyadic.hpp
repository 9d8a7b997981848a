// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "specgap/bigint.hpp"

namespace specgap {

/// Exact dyadic rational mant * 2^exp2, normalized so mant is odd or zero.
class Dyadic {
  public:
    Dyadic() : mant_(0), exp2_(0) {}
    Dyadic(Int mant, long exp2) : mant_(std::move(mant)), exp2_(exp2) { normalize(); }
    explicit Dyadic(const Int& v) : mant_(v), exp2_(0) { normalize(); }

    const Int& mant() const { return mant_; }
    long exp2() const { return exp2_; }
    bool is_zero() const { return sign_of(mant_) == 0; }
    int sign() const { return sign_of(mant_); }

    Dyadic operator-() const { return Dyadic(-mant_, exp2_); }
    Dyadic abs() const { return sign() < 0 ? -*this : *this; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    friend int cmp(const Dyadic& a, const Dyadic& b);
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }

    Rat to_rational() const;
    static Dyadic from_rational_rounded(const Rat& r, long frac_bits);  ///< |err| <= 2^-frac_bits

    /// 2^-e for e >= 0.
    static Dyadic pow2(long e) { return Dyadic(Int(1), e); }

    std::string to_decimal(int sig_digits) const;

  private:
    void normalize();
    Int mant_;
    long exp2_;
};

/// Midpoint-radius enclosure: the true value lies in [mid - rad, mid + rad].
struct CertifiedReal {
    Dyadic mid;
    Dyadic rad;  ///< nonnegative

    bool contains_zero() const;
    /// +1/-1 when the sign is certified, 0 when the enclosure straddles zero.
    int certified_sign() const;
    Rat lo() const { return mid.to_rational() - rad.to_rational(); }
    Rat hi() const { return mid.to_rational() + rad.to_rational(); }
};

}  // namespace specgap
