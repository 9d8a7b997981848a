// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/spectrum.hpp"

#include <algorithm>
#include <queue>

namespace specgap {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

int sign_i128(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Exact sign of u + v*sqrt(d) when u^2 and v^2 d stay inside int128.
int surd_sign_i128(i128 u, i128 v, i128 d) {
    if (v == 0) return sign_i128(u);
    if (u == 0) return sign_i128(v);
    if (u > 0 && v > 0) return 1;
    if (u < 0 && v < 0) return -1;
    i128 uu = u * u, vvd = v * v * d;
    int c = uu > vvd ? 1 : (uu < vvd ? -1 : 0);
    return u > 0 ? c : -c;
}

}  // namespace

QuadSurd Eigenvalue::level(const Alpha& alpha) const {
    return alpha.surd() * QuadSurd(Int(m) * Int(m)) + QuadSurd(Int(n) * Int(n));
}

std::string Eigenvalue::level_decimal(const Alpha& alpha, int sig_digits) const {
    if (alpha.is_exact()) return level(alpha).decimal(sig_digits);
    Rat mid = alpha.value() * Rat(Int(m) * Int(m)) + Rat(Int(n) * Int(n));
    return QuadSurd(mid).decimal(sig_digits);
}

LevelOrder::LevelOrder(const Alpha& alpha, unsigned precision_cap)
    : alpha_(alpha), precision_cap_(precision_cap) {
    if (alpha.is_exact()) {
        const QuadSurd& s = alpha.surd();
        // int128 path is safe when coefficients < 2^10 and coordinates < 2^21:
        // |u| <= 2 * 2^10 * 2^43 = 2^54, u^2 <= 2^108, v^2 d <= 2^116.
        if (fits_i64(s.a()) && fits_i64(s.b()) && fits_i64(s.c()) && fits_i64(s.d())) {
            i64 a = to_i64(s.a()), b = to_i64(s.b()), c = to_i64(s.c()), d = to_i64(s.d());
            if (std::abs(a) < 1024 && std::abs(b) < 1024 && c < 1024 && d < 1024) {
                fast_ = true;
                fa_ = a;
                fb_ = b;
                fc_ = c;
                fd_ = d;
            }
        }
    }
}

int LevelOrder::cmp(const Eigenvalue& x, const Eigenvalue& y) const {
    constexpr i64 kCoordCap = 1 << 21;
    if (fast_ && std::abs(x.m) < kCoordCap && std::abs(x.n) < kCoordCap && std::abs(y.m) < kCoordCap &&
        std::abs(y.n) < kCoordCap) {
        // c*(level_x - level_y) = (a du + c dv) + b du sqrt(d), du = m^2 - m'^2.
        i128 du = (i128)x.m * x.m - (i128)y.m * y.m;
        i128 dv = (i128)x.n * x.n - (i128)y.n * y.n;
        return surd_sign_i128((i128)fa_ * du + (i128)fc_ * dv, (i128)fb_ * du, fd_);
    }
    if (alpha_.is_exact()) {
        const QuadSurd& s = alpha_.surd();
        Int du = Int(x.m) * Int(x.m) - Int(y.m) * Int(y.m);
        Int dv = Int(x.n) * Int(x.n) - Int(y.n) * Int(y.n);
        Int u = s.a() * du + s.c() * dv;
        Int v = s.b() * du;
        if (s.is_rational()) return sign_of(u);
        return surd_sign(u, v, s.d());
    }
    // Literal path: certified against the interval, else refuse to order.
    Int du = Int(x.m) * Int(x.m) - Int(y.m) * Int(y.m);
    Int dv = Int(x.n) * Int(x.n) - Int(y.n) * Int(y.n);
    Rat mid = alpha_.value() * Rat(du) + Rat(dv);
    Rat slack = alpha_.radius() * Rat(::abs(du));
    if (mid > slack) return 1;
    if (mid < -slack) return -1;
    if (du == 0 && dv == 0) return 0;
    fail(Errc::precision_exhausted,
         "literal alpha cannot order levels (" + std::to_string(x.m) + "," + std::to_string(x.n) + ") vs (" +
             std::to_string(y.m) + "," + std::to_string(y.n) + "); give more digits");
}

bool LevelOrder::level_le(const Eigenvalue& e, const Rat& X) const {
    Int mm = Int(e.m) * Int(e.m), nn = Int(e.n) * Int(e.n);
    if (alpha_.is_exact()) {
        const QuadSurd& s = alpha_.surd();
        // alpha m^2 + n^2 <= X  <=>  Xd(a mm + c nn) + Xd b mm sqrt(d) <= Xn c
        Int u = X.get_num() * s.c() - X.get_den() * (s.a() * mm + s.c() * nn);
        Int v = -X.get_den() * s.b() * mm;
        if (s.is_rational()) return sign_of(u) >= 0;
        return surd_sign(u, v, s.d()) >= 0;
    }
    Rat mid = X - (alpha_.value() * Rat(mm) + Rat(nn));
    Rat slack = alpha_.radius() * Rat(mm);
    if (mid > slack) return true;
    if (mid < -slack) return false;
    fail(Errc::precision_exhausted, "literal alpha cannot certify a cutoff comparison");
}

int LevelOrder::cmp_gap(const Eigenvalue& x, const Eigenvalue& y, const Eigenvalue& u, const Eigenvalue& v) const {
    // (level_x - level_y) - (level_u - level_v), same machinery as cmp.
    Int du = Int(x.m) * Int(x.m) - Int(y.m) * Int(y.m) - Int(u.m) * Int(u.m) + Int(v.m) * Int(v.m);
    Int dv = Int(x.n) * Int(x.n) - Int(y.n) * Int(y.n) - Int(u.n) * Int(u.n) + Int(v.n) * Int(v.n);
    if (alpha_.is_exact()) {
        const QuadSurd& s = alpha_.surd();
        Int uu = s.a() * du + s.c() * dv;
        Int vv = s.b() * du;
        if (s.is_rational()) return sign_of(uu);
        return surd_sign(uu, vv, s.d());
    }
    Rat mid = alpha_.value() * Rat(du) + Rat(dv);
    Rat slack = alpha_.radius() * Rat(::abs(du));
    if (mid > slack) return 1;
    if (mid < -slack) return -1;
    if (du == 0 && dv == 0) return 0;
    fail(Errc::precision_exhausted, "literal alpha cannot order gaps; give more digits");
}

namespace {

void require_usable_alpha(const Alpha& alpha) {
    if (alpha.sign() <= 0) fail(Errc::validation, "alpha must be positive");
    if (alpha.is_rational_exact())
        fail(Errc::rational_alpha, "rational alpha gives a multiset spectrum; excluded");
}

// Lazy merge of the per-m columns: popping (m, 1) admits column m+1.
struct HeapEnumerator {
    const LevelOrder& ord;
    struct Cmp {
        const LevelOrder* ord;
        bool operator()(const Eigenvalue& x, const Eigenvalue& y) const { return ord->cmp(x, y) > 0; }
    };
    std::priority_queue<Eigenvalue, std::vector<Eigenvalue>, Cmp> heap;

    explicit HeapEnumerator(const LevelOrder& o) : ord(o), heap(Cmp{&o}) { heap.push({1, 1}); }

    Eigenvalue next() {
        Eigenvalue e = heap.top();
        heap.pop();
        if (e.n == 1) heap.push({e.m + 1, 1});
        heap.push({e.m, e.n + 1});
        return e;
    }
};

}  // namespace

std::vector<Eigenvalue> enumerate_spectrum(const Alpha& alpha, std::size_t N, unsigned precision_cap) {
    if (N < 1) fail(Errc::validation, "N must be >= 1");
    require_usable_alpha(alpha);
    LevelOrder ord(alpha, precision_cap);
    HeapEnumerator en(ord);
    std::vector<Eigenvalue> out;
    out.reserve(N);
    for (std::size_t i = 0; i < N; ++i) out.push_back(en.next());
    return out;
}

std::vector<Eigenvalue> enumerate_up_to(const Alpha& alpha, const Rat& X, unsigned precision_cap) {
    require_usable_alpha(alpha);
    LevelOrder ord(alpha, precision_cap);
    std::vector<Eigenvalue> out;
    if (!ord.level_le({1, 1}, X)) return out;
    HeapEnumerator en(ord);
    while (true) {
        Eigenvalue e = en.next();
        if (!ord.level_le(e, X)) return out;
        out.push_back(e);
    }
}

namespace {

// floor(alpha * m^2) from whichever path is available.
Int alpha_m2_floor(const Alpha& alpha, i64 m) {
    Int mm = Int(m) * Int(m);
    if (alpha.is_exact()) return (alpha.surd() * QuadSurd(mm)).floor();
    Rat v = alpha.value() * Rat(mm);
    return fdiv(v.get_num(), v.get_den());
}

}  // namespace

Int count_up_to(const Alpha& alpha, const Rat& X) {
    require_usable_alpha(alpha);
    LevelOrder ord(alpha, 4096);
    Int total = 0;
    // For each m with alpha m^2 + 1 <= X, count n via an isqrt estimate
    // corrected by exact comparisons.
    Int Xfloor = fdiv(X.get_num(), X.get_den());
    for (i64 m = 1;; ++m) {
        if (!ord.level_le({m, 1}, X)) break;
        Int rest = Xfloor - alpha_m2_floor(alpha, m);
        Int n_est = rest > 0 ? isqrt(rest) : Int(1);
        i64 n = fits_i64(n_est) ? std::max<i64>(to_i64(n_est), 1) : 1;
        while (ord.level_le({m, n + 1}, X)) ++n;
        while (n >= 1 && !ord.level_le({m, n}, X)) --n;
        total += n;
    }
    return total;
}

/// #{(mu, nu) : level(mu, nu) <= level(e)}, i.e. the 1-based rank of e.
Int count_up_to_level(const Alpha& alpha, const Eigenvalue& e, unsigned precision_cap) {
    require_usable_alpha(alpha);
    LevelOrder ord(alpha, precision_cap);
    Int lvl_floor = alpha_m2_floor(alpha, e.m) + Int(e.n) * Int(e.n) + 1;
    Int total = 0;
    for (i64 m = 1;; ++m) {
        if (ord.cmp({m, 1}, e) > 0) break;  // columns start increasing in m
        Int rest = lvl_floor - alpha_m2_floor(alpha, m);
        Int n_est = rest > 0 ? isqrt(rest) : Int(1);
        i64 n = fits_i64(n_est) ? std::max<i64>(to_i64(n_est), 1) : 1;
        while (ord.cmp({m, n + 1}, e) <= 0) ++n;
        while (n >= 1 && ord.cmp({m, n}, e) > 0) --n;
        total += n;
    }
    return total;
}

namespace {

GapRecord make_record(const Alpha& alpha, const Eigenvalue& lo, const Eigenvalue& hi, i64 index, i64 N, i64 k) {
    GapRecord r;
    r.index = index;
    r.lower = lo;
    r.upper = hi;
    r.N = N;
    r.k = k;
    if (alpha.is_exact()) {
        r.gap = hi.level(alpha) - lo.level(alpha);
        r.scaled_gap = r.gap * QuadSurd(Int(N));
    }
    return r;
}

}  // namespace

GapRecord min_gap_of(const Alpha& alpha, std::span<const Eigenvalue> levels, std::size_t k, unsigned precision_cap) {
    std::size_t N = levels.size();
    if (k < 1) fail(Errc::validation, "gap rank k must be >= 1");
    if (N < k + 1) fail(Errc::validation, "need N >= k+1 eigenvalues for the k-th gap");
    LevelOrder ord(alpha, precision_cap);
    std::vector<std::size_t> idx(N - 1);
    for (std::size_t i = 0; i + 1 < N; ++i) idx[i] = i;
    auto less = [&](std::size_t i, std::size_t j) {
        int c = ord.cmp_gap(levels[i + 1], levels[i], levels[j + 1], levels[j]);
        if (c != 0) return c < 0;
        return i < j;  // deterministic tie-break on equal gaps
    };
    std::nth_element(idx.begin(), idx.begin() + (k - 1), idx.end(), less);
    std::size_t at = idx[k - 1];
    return make_record(alpha, levels[at], levels[at + 1], static_cast<i64>(at + 1), static_cast<i64>(N),
                       static_cast<i64>(k));
}

GapRecord min_gap(const Alpha& alpha, std::size_t N, std::size_t k, unsigned precision_cap) {
    if (N < k + 1) fail(Errc::validation, "need N >= k+1 for the k-th smallest gap");
    auto levels = enumerate_spectrum(alpha, N, precision_cap);
    return min_gap_of(alpha, levels, k, precision_cap);
}

std::vector<SweepRow> scaled_gap_sweep(const Alpha& alpha, std::span<const std::size_t> Ns, unsigned precision_cap) {
    if (Ns.empty()) fail(Errc::validation, "empty N list");
    for (std::size_t i = 1; i < Ns.size(); ++i)
        if (Ns[i] <= Ns[i - 1]) fail(Errc::validation, "N list must be increasing");
    std::size_t maxN = Ns.back();
    require_usable_alpha(alpha);
    LevelOrder ord(alpha, precision_cap);
    HeapEnumerator en(ord);

    std::vector<SweepRow> rows;
    Eigenvalue prev = en.next();
    Eigenvalue best_lo = prev, best_hi{};
    bool have_best = false;
    std::size_t next_row = 0;
    std::size_t best_index = 0;
    for (std::size_t i = 2; i <= maxN; ++i) {
        Eigenvalue cur = en.next();
        if (!have_best || ord.cmp_gap(cur, prev, best_hi, best_lo) < 0) {
            best_lo = prev;
            best_hi = cur;
            best_index = i - 1;
            have_best = true;
        }
        prev = cur;
        while (next_row < Ns.size() && Ns[next_row] == i) {
            rows.push_back({static_cast<i64>(i),
                            make_record(alpha, best_lo, best_hi, static_cast<i64>(best_index),
                                        static_cast<i64>(i), 1)});
            ++next_row;
        }
    }
    if (next_row < Ns.size()) fail(Errc::validation, "N list entries must be >= 2");
    return rows;
}

GapRecord propagate_gap(const Alpha& alpha, const GapRecord& g) {
    GapRecord out;
    out.lower = {2 * g.lower.m, 2 * g.lower.n};
    out.upper = {2 * g.upper.m, 2 * g.upper.n};
    out.N = g.N;
    out.k = g.k;
    out.consecutive = false;
    if (alpha.is_exact()) {
        out.gap = out.upper.level(alpha) - out.lower.level(alpha);
        // Exactly 4x the input gap by construction; checked, not assumed.
        if (!(out.gap == g.gap * QuadSurd(Int(4))))
            fail(Errc::internal, "propagated gap is not exactly 4x");
        out.scaled_gap = out.gap * QuadSurd(Int(g.N));
    }
    out.index = to_i64(count_up_to_level(alpha, out.lower, 4096));
    return out;
}

}  // namespace specgap
