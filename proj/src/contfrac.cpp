// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/contfrac.hpp"

#include <map>
#include <tuple>

namespace specgap {

std::string Quality::decimal(int sig_digits) const {
    if (exact) return value.decimal(sig_digits);
    return QuadSurd(Rat((lo + hi) / 2)).decimal(sig_digits);
}

double Quality::approx() const {
    if (exact) {
        if (value.is_zero()) return 0.0;
        return std::pow(10.0, value.log10_magnitude());
    }
    return Rat((lo + hi) / 2).get_d();
}

Quality quality_of(const Alpha& alpha, const Int& p, const Int& q) {
    Quality out;
    if (alpha.is_exact()) {
        out.exact = true;
        out.value = (alpha.surd() * QuadSurd(q) - QuadSurd(p)).abs();
    } else {
        out.exact = false;
        Rat lo = alpha.lo() * Rat(q) - Rat(p);
        Rat hi = alpha.hi() * Rat(q) - Rat(p);
        if (sign_of(lo) >= 0) {
            out.lo = lo;
            out.hi = hi;
        } else if (sign_of(hi) <= 0) {
            out.lo = -hi;
            out.hi = -lo;
        } else {
            out.lo = 0;
            out.hi = std::max(Rat(-lo), hi);
        }
    }
    return out;
}

namespace {

Quality scale_quality(const Quality& q, const Int& by) {
    Quality out = q;
    if (q.exact)
        out.value = q.value * QuadSurd(by);
    else {
        out.lo = q.lo * Rat(by);
        out.hi = q.hi * Rat(by);
    }
    return out;
}

}  // namespace

ConvergentStream::ConvergentStream(const Alpha& alpha) : alpha_(alpha) {
    if (alpha.is_exact()) {
        exact_ = true;
        state_ = alpha.surd();
    } else {
        exact_ = false;
        lo_ = alpha.lo();
        hi_ = alpha.hi();
    }
}

std::optional<Approximant> ConvergentStream::next() {
    if (done_) return std::nullopt;
    Int a;
    if (exact_) {
        a = state_.floor();
        QuadSurd frac = state_ - QuadSurd(a);
        if (frac.is_zero())
            done_ = true;
        else
            state_ = QuadSurd(Int(1)) / frac;
    } else {
        Int flo = fdiv(lo_.get_num(), lo_.get_den());
        Int fhi = fdiv(hi_.get_num(), hi_.get_den());
        if (flo != fhi)
            fail(Errc::precision_exhausted, "literal alpha has too few digits for this expansion depth");
        a = flo;
        Rat rlo = lo_ - Rat(a), rhi = hi_ - Rat(a);
        if (sign_of(rlo) == 0)
            fail(Errc::precision_exhausted, "literal alpha boundary hit in continued fraction");
        // Reciprocal swaps the endpoints.
        Rat nlo = 1 / rhi, nhi = 1 / rlo;
        lo_ = nlo;
        hi_ = nhi;
    }
    Int h = a * h_prev_ + h_prev2_;
    Int k = a * k_prev_ + k_prev2_;
    h_prev2_ = h_prev_;
    h_prev_ = h;
    k_prev2_ = k_prev_;
    k_prev_ = k;
    Approximant out;
    out.p = h;
    out.q = k;
    out.quality = quality_of(alpha_, h, k);
    out.scaled_quality = scale_quality(out.quality, k);
    return out;
}

CFExpansion continued_fraction(const Alpha& alpha, std::size_t depth) {
    if (depth < 1) fail(Errc::validation, "depth must be >= 1");
    if (alpha.sign() <= 0) fail(Errc::validation, "alpha must be positive");
    CFExpansion out;

    if (alpha.is_exact() && !alpha.surd().is_rational()) {
        // Exact expansion with period detection on the surd state. A repeated
        // state at index i first seen at index j gives period (j, i-j), with
        // positions counted over the full sequence [a0; q1, q2, ...].
        QuadSurd state = alpha.surd();
        std::map<std::tuple<Int, Int, Int>, std::size_t> seen;
        std::vector<Int> qs;
        std::optional<std::pair<std::size_t, std::size_t>> period;
        for (std::size_t i = 0; i <= depth; ++i) {
            auto key = std::make_tuple(state.a(), state.b(), state.c());
            auto it = seen.find(key);
            if (it != seen.end()) {
                period = std::make_pair(it->second, i - it->second);
                break;
            }
            seen.emplace(key, i);
            Int a = state.floor();
            qs.push_back(a);
            state = QuadSurd(Int(1)) / (state - QuadSurd(a));
        }
        out.a0 = qs[0];
        for (std::size_t i = 1; i <= depth; ++i) {
            if (i < qs.size()) {
                out.quotients.push_back(qs[i]);
            } else {
                auto [ps, pl] = *period;
                out.quotients.push_back(qs[ps + (i - ps) % pl]);
            }
        }
        out.period = period;
        return out;
    }

    // Rational and literal paths share the interval Euclid below.
    Rat lo, hi;
    if (alpha.is_exact()) {
        lo = hi = alpha.surd().to_rational();
    } else {
        lo = alpha.lo();
        hi = alpha.hi();
    }
    for (std::size_t i = 0; i <= depth; ++i) {
        Int flo = fdiv(lo.get_num(), lo.get_den());
        Int fhi = fdiv(hi.get_num(), hi.get_den());
        if (flo != fhi) {
            if (alpha.is_exact()) fail(Errc::internal, "rational expansion mismatch");
            fail(Errc::precision_exhausted, "literal alpha has too few digits for depth " + std::to_string(depth));
        }
        if (i == 0)
            out.a0 = flo;
        else
            out.quotients.push_back(flo);
        Rat rlo = lo - Rat(flo), rhi = hi - Rat(flo);
        if (sign_of(rhi) == 0 || (alpha.is_exact() && sign_of(rlo) == 0)) {
            out.terminated = true;
            break;
        }
        if (sign_of(rlo) == 0)
            fail(Errc::precision_exhausted, "literal alpha boundary hit in continued fraction");
        Rat nlo = 1 / rhi, nhi = 1 / rlo;
        lo = nlo;
        hi = nhi;
    }
    return out;
}

std::vector<Approximant> convergents(const Alpha& alpha, std::size_t count) {
    if (count < 1) fail(Errc::validation, "count must be >= 1");
    if (alpha.sign() <= 0) fail(Errc::validation, "alpha must be positive");
    std::vector<Approximant> out;
    ConvergentStream stream(alpha);
    for (std::size_t i = 0; i < count; ++i) {
        auto ap = stream.next();
        if (!ap) break;
        out.push_back(std::move(*ap));
    }
    return out;
}

Approximant dirichlet_approx(const Alpha& alpha, const Int& Q) {
    if (Q < 1) fail(Errc::validation, "Q must be >= 1");
    if (alpha.sign() <= 0) fail(Errc::validation, "alpha must be positive");
    ConvergentStream stream(alpha);
    std::optional<Approximant> best;
    while (true) {
        auto ap = stream.next();
        if (!ap) break;  // rational expansion ended with q <= Q
        if (ap->q > Q) break;
        if (sign_of(ap->p) > 0) best = std::move(*ap);
    }
    if (!best) fail(Errc::validation, "no convergent with positive numerator and q <= Q");
    bool zero_quality = best->quality.exact ? best->quality.value.is_zero() : false;
    if (!best->quality.exact && sign_of(best->quality.hi) == 0) zero_quality = true;
    if (zero_quality)
        fail(Errc::rational_alpha, "alpha is rationally resolved at q = " + to_string(best->q));
    return *best;
}

}  // namespace specgap
