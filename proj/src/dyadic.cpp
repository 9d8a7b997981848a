// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/dyadic.hpp"

namespace specgap {

void Dyadic::normalize() {
    if (sign_of(mant_) == 0) {
        exp2_ = 0;
        return;
    }
    auto tz = mpz_scan1(mant_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_fdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);
        exp2_ += static_cast<long>(tz);
    }
}

namespace {

// Aligns a and b to a common exponent and returns (ma, mb, e).
struct Aligned {
    Int ma, mb;
    long e;
};

Aligned align(const Dyadic& a, const Dyadic& b) {
    long e = std::min(a.exp2(), b.exp2());
    Aligned r;
    r.e = e;
    r.ma = a.mant() << static_cast<unsigned long>(a.exp2() - e);
    r.mb = b.mant() << static_cast<unsigned long>(b.exp2() - e);
    return r;
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Aligned r = align(a, b);
    return Dyadic(r.ma + r.mb, r.e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    Aligned r = align(a, b);
    return Dyadic(r.ma - r.mb, r.e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.mant() * b.mant(), a.exp2() + b.exp2()); }

int cmp(const Dyadic& a, const Dyadic& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    Aligned r = align(a, b);
    return ::cmp(r.ma, r.mb);
}

Rat Dyadic::to_rational() const {
    Rat r(mant_);
    if (exp2_ >= 0) {
        r *= Rat(Int(1) << static_cast<unsigned long>(exp2_));
    } else {
        r /= Rat(Int(1) << static_cast<unsigned long>(-exp2_));
    }
    r.canonicalize();
    return r;
}

Dyadic Dyadic::from_rational_rounded(const Rat& r, long frac_bits) {
    // floor(r * 2^frac_bits) / 2^frac_bits, so the error is in [0, 2^-frac_bits).
    Int num = r.get_num();
    Int den = r.get_den();
    if (frac_bits > 0) num <<= static_cast<unsigned long>(frac_bits);
    Int q = fdiv(num, den);
    return Dyadic(q, -frac_bits);
}

std::string Dyadic::to_decimal(int sig_digits) const {
    if (is_zero()) return "0";
    Rat r = to_rational();
    Int num = r.get_num();
    Int den = r.get_den();
    bool neg = sign_of(num) < 0;
    if (neg) num = -num;
    long e = static_cast<long>(log10_of(num) - log10_of(den));
    for (int guard = 0; guard < 4; ++guard) {
        long k = sig_digits - 1 - e;
        Int scaled;
        if (k >= 0)
            scaled = fdiv(num * pow10(static_cast<unsigned long>(k)) * 2 + den, den * 2);
        else
            scaled = fdiv(num * 2 + den * pow10(static_cast<unsigned long>(-k)), den * pow10(static_cast<unsigned long>(-k)) * 2);
        std::string digits = scaled.get_str();
        if (static_cast<long>(digits.size()) == sig_digits) {
            std::string out = neg ? "-" : "";
            if (e >= 0 && e < sig_digits) {
                out += digits.substr(0, e + 1) + "." + digits.substr(e + 1);
            } else if (e < 0 && e >= -6) {
                out += "0." + std::string(-e - 1, '0') + digits;
            } else {
                out += digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e);
            }
            return out;
        }
        e += static_cast<long>(digits.size()) - sig_digits;
    }
    fail(Errc::internal, "decimal rendering failed to converge");
}

bool CertifiedReal::contains_zero() const { return certified_sign() == 0; }

int CertifiedReal::certified_sign() const {
    if (mid.is_zero()) return rad.is_zero() ? 0 : 0;
    if (cmp(mid.abs(), rad) > 0) return mid.sign();
    return 0;
}

}  // namespace specgap
