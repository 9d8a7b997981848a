// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/surd.hpp"

#include <cmath>

namespace specgap {

int surd_sign(const Int& u, const Int& v, const Int& d) {
    if (d < 2) fail(Errc::validation, "surd_sign requires d >= 2");
    int su = sign_of(u), sv = sign_of(v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su > 0 && sv > 0) return 1;
    if (su < 0 && sv < 0) return -1;
    // Opposite signs: |u| vs |v| sqrt(d), i.e. u^2 vs v^2 d.
    Int uu = u * u, vvd = v * v * d;
    int c = ::cmp(uu, vvd);
    if (c == 0) return 0;  // impossible for squarefree d >= 2; kept for totality
    return su > 0 ? c : -c;
}

QuadSurd::QuadSurd(Int a, Int b, Int c, Int d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (sign_of(c_) == 0) fail(Errc::validation, "QuadSurd denominator is zero");
    if (sign_of(d_) <= 0) fail(Errc::validation, "QuadSurd radicand must be positive");
    if (sign_of(c_) < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    if (sign_of(b_) == 0) {
        d_ = 1;
    } else if (d_ > 1) {
        auto [s, d0] = squarefree_decompose(d_);
        b_ *= s;
        d_ = d0;
    }
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
    Int g = gcd(gcd(a_, b_), c_);
    if (g > 1) {
        a_ = divexact(a_, g);
        b_ = divexact(b_, g);
        c_ = divexact(c_, g);
    }
}

QuadSurd QuadSurd::sqrt_of(const Rat& r) {
    if (sign_of(r) < 0) fail(Errc::validation, "sqrt of a negative rational");
    // sqrt(p/q) = sqrt(p*q)/q
    return QuadSurd(Int(0), Int(1), r.get_den(), r.get_num() * r.get_den());
}

Rat QuadSurd::to_rational() const {
    if (!is_rational()) fail(Errc::validation, "surd is irrational");
    Rat r(a_, c_);
    r.canonicalize();
    return r;
}

int QuadSurd::sign() const {
    if (is_rational()) return sign_of(a_);
    return surd_sign(a_, b_, d_);
}

QuadSurd QuadSurd::operator-() const {
    QuadSurd r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

namespace {

// Shared radicand for a binary operation; 1 when both are rational.
Int merged_radicand(const QuadSurd& x, const QuadSurd& y) {
    if (x.is_rational()) return y.d();
    if (y.is_rational()) return x.d();
    if (x.d() != y.d())
        fail(Errc::mixed_radicands, "radicands differ: " + to_string(x.d()) + " vs " + to_string(y.d()));
    return x.d();
}

// log10(10^x + 10^y) without overflow.
double logadd10(double x, double y) {
    double hi = std::max(x, y), lo = std::min(x, y);
    return hi + std::log10(1.0 + std::pow(10.0, lo - hi));
}

}  // namespace

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
    Int d = merged_radicand(x, y);
    return QuadSurd(x.a() * y.c() + y.a() * x.c(), x.b() * y.c() + y.b() * x.c(), x.c() * y.c(), d);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    Int d = merged_radicand(x, y);
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) s
    return QuadSurd(x.a() * y.a() + x.b() * y.b() * d, x.a() * y.b() + y.a() * x.b(), x.c() * y.c(), d);
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
    if (y.is_zero()) fail(Errc::division_by_zero, "division by zero surd");
    Int d = merged_radicand(x, y);
    // 1/y = c (a - b s) / (a^2 - b^2 d)
    Int norm = y.a() * y.a() - y.b() * y.b() * d;
    QuadSurd inv(y.a() * y.c(), -y.b() * y.c(), norm, d);
    return x * inv;
}

bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.a() == y.a() && x.b() == y.b() && x.c() == y.c() && x.d() == y.d();
}

QuadSurd surd_arith(const QuadSurd& x, const QuadSurd& y, SurdOp op) {
    switch (op) {
        case SurdOp::add: return x + y;
        case SurdOp::sub: return x - y;
        case SurdOp::mul: return x * y;
        case SurdOp::div: return x / y;
    }
    fail(Errc::internal, "bad surd op");
}

Int QuadSurd::floor() const {
    if (is_rational()) return fdiv(a_, c_);
    // b*sqrt(d) lies in [s, s+1) resp. (-s-1, -s], so start near the truth
    // and settle with exact comparisons.
    Int s = isqrt(b_ * b_ * d_);
    Int t = fdiv(sign_of(b_) > 0 ? Int(a_ + s) : Int(a_ - s - 1), c_);
    while (surd_sign(a_ - (t + 1) * c_, b_, d_) >= 0) t += 1;
    while (surd_sign(a_ - t * c_, b_, d_) < 0) t -= 1;
    return t;
}

CertifiedReal QuadSurd::eval(unsigned bits) const {
    if (bits < 8) fail(Errc::validation, "eval requires bits >= 8");
    if (is_rational()) {
        Rat v(a_, c_);
        v.canonicalize();
        size_t nbits = mpz_sizeinbase(v.get_den().get_mpz_t(), 2);
        if (mpz_scan1(v.get_den().get_mpz_t(), 0) == nbits - 1) {
            // Power-of-two denominator: exactly representable, radius 0.
            return {Dyadic(v.get_num(), -static_cast<long>(nbits - 1)), Dyadic()};
        }
    }
    for (unsigned long k = bits + 8;; k *= 2) {
        Dyadic mid, rad;
        if (is_rational()) {
            mid = Dyadic::from_rational_rounded(Rat(a_, c_), static_cast<long>(k));
            rad = Dyadic::pow2(-static_cast<long>(k));
        } else {
            // sqrt(d) enclosed in [s, s+1] * 2^-k
            Int s = isqrt(d_ << static_cast<unsigned long>(2 * k));
            Dyadic root_mid(2 * s + 1, -static_cast<long>(k) - 1);
            Rat num_mid = Rat(a_) + Rat(b_) * root_mid.to_rational();
            mid = Dyadic::from_rational_rounded(num_mid / Rat(c_), static_cast<long>(k));
            rad = Dyadic::pow2(-static_cast<long>(k)) + Dyadic(Int(::abs(b_))) * Dyadic::pow2(-static_cast<long>(k) - 1);
        }
        Dyadic bound = mid.abs() - rad;  // certified lower bound on |value|
        if (cmp(bound, Dyadic(Int(1))) < 0) bound = Dyadic(Int(1));
        if (cmp(rad, Dyadic::pow2(-static_cast<long>(bits)) * bound) <= 0) return {mid, rad};
        if (k > (1ul << 26)) fail(Errc::precision_exhausted, "eval did not converge");
    }
}

double QuadSurd::log10_magnitude() const {
    if (is_zero()) fail(Errc::validation, "log of zero");
    double lc = log10_of(c_);
    if (is_rational()) return log10_of(a_) - lc;
    double la = sign_of(a_) == 0 ? -1e18 : log10_of(a_);
    double lb = log10_of(b_) + 0.5 * log10_of(d_);
    if (sign_of(a_) == 0) return lb - lc;
    if (sign_of(a_) == sign_of(b_)) return logadd10(la, lb) - lc;
    // Cancellation: |a + b sqrt(d)| = |a^2 - b^2 d| / (|a| + |b| sqrt(d)).
    Int numer = a_ * a_ - b_ * b_ * d_;
    return log10_of(numer) - logadd10(la, lb) - lc;
}

std::string QuadSurd::decimal(int sig_digits) const {
    if (sig_digits < 1) fail(Errc::validation, "need at least one significant digit");
    int sg = sign();
    if (sg == 0) return "0";
    QuadSurd v = abs();

    long e = static_cast<long>(std::floor(v.log10_magnitude()));
    for (int guard = 0; guard < 64; ++guard) {
        long k = sig_digits - 1 - e;
        QuadSurd scaled_v = k >= 0 ? v * QuadSurd(pow10(static_cast<unsigned long>(k)))
                                   : v / QuadSurd(pow10(static_cast<unsigned long>(-k)));
        // round(x) = floor((2x + 1)/2), all exact.
        Int scaled = fdiv((scaled_v * QuadSurd(Int(2)) + QuadSurd(Int(1))).floor(), Int(2));
        std::string digits = scaled.get_str();
        if (static_cast<long>(digits.size()) != sig_digits) {
            e += static_cast<long>(digits.size()) - sig_digits;
            continue;
        }
        std::string out = sg < 0 ? "-" : "";
        if (e >= 0 && e < sig_digits) {
            out += digits.substr(0, e + 1);
            if (e + 1 < sig_digits) out += "." + digits.substr(e + 1);
        } else if (e < 0 && e >= -6) {
            out += "0." + std::string(-e - 1, '0') + digits;
        } else {
            out += digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e);
        }
        return out;
    }
    fail(Errc::internal, "decimal rendering did not converge");
}

std::string QuadSurd::str() const {
    if (is_rational()) {
        Rat r(a_, c_);
        r.canonicalize();
        return to_string(r);
    }
    std::string s = "(" + a_.get_str() + (sign_of(b_) < 0 ? "" : "+") + b_.get_str() + "*sqrt(" + d_.get_str() + "))";
    if (c_ != 1) s += "/" + c_.get_str();
    return s;
}

}  // namespace specgap
