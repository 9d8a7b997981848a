// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specgap/rng.hpp"

namespace specgap {

namespace {

double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) return 0.0;
    double pos = p * static_cast<double>(sorted.size() - 1);
    std::size_t i = static_cast<std::size_t>(pos);
    if (i + 1 >= sorted.size()) return sorted.back();
    double frac = pos - static_cast<double>(i);
    return sorted[i] * (1.0 - frac) + sorted[i + 1] * frac;
}

// One trial: k-th smallest consecutive gap of N sorted uniforms on [0, N].
double trial_kth_gap(CounterRng rng, std::size_t N, std::size_t k) {
    std::vector<double> pts(N);
    for (double& p : pts) p = rng.uniform53() * static_cast<double>(N);
    std::sort(pts.begin(), pts.end());
    std::vector<double> gaps(N - 1);
    for (std::size_t i = 0; i + 1 < N; ++i) gaps[i] = pts[i + 1] - pts[i];
    std::nth_element(gaps.begin(), gaps.begin() + (k - 1), gaps.end());
    return gaps[k - 1] * static_cast<double>(N);
}

}  // namespace

PoissonSummary poisson_min_gap(const PoissonExperiment& exp) {
    if (exp.N < 2) fail(Errc::validation, "need N >= 2 points");
    if (exp.trials < 1) fail(Errc::validation, "need at least one trial");
    if (exp.k < 1 || exp.k > exp.N - 1) fail(Errc::validation, "k must lie in [1, N-1]");
    CounterRng root(exp.seed);
    PoissonSummary out;
    out.samples.reserve(exp.trials);
    for (std::size_t t = 0; t < exp.trials; ++t)
        out.samples.push_back(trial_kth_gap(root.substream(t), exp.N, exp.k));
    double sum = 0.0;
    for (double s : out.samples) sum += s;
    out.mean = sum / static_cast<double>(out.samples.size());

    std::vector<double> sorted = out.samples;
    std::sort(sorted.begin(), sorted.end());
    out.quantiles = {quantile_sorted(sorted, 0.05), quantile_sorted(sorted, 0.25), quantile_sorted(sorted, 0.50),
                     quantile_sorted(sorted, 0.75), quantile_sorted(sorted, 0.95)};
    double ks = 0.0;
    std::size_t n = sorted.size();
    for (std::size_t i = 0; i < n; ++i) {
        double F = 1.0 - std::exp(-sorted[i]);
        ks = std::max(ks, std::abs(F - static_cast<double>(i) / n));
        ks = std::max(ks, std::abs(static_cast<double>(i + 1) / n - F));
    }
    out.ks_exponential = ks;
    return out;
}

std::vector<DyadicTrendRow> dyadic_event_trend(std::uint64_t seed, std::size_t trials, unsigned j_min,
                                               unsigned j_max) {
    if (j_min < 2 || j_max < j_min || j_max > 24) fail(Errc::validation, "need 2 <= j_min <= j_max <= 24");
    CounterRng root(seed);
    std::size_t levels = j_max - j_min + 1;
    std::vector<std::uint64_t> hits(levels, 0);
    for (std::size_t t = 0; t < trials; ++t) {
        CounterRng rng = root.substream(t);
        // Unit-rate Poisson arrivals via exponential inter-arrival times.
        std::size_t N_max = std::size_t{1} << j_max;
        std::vector<double> pts(N_max);
        double pos = 0.0;
        for (std::size_t i = 0; i < N_max; ++i) {
            pos += -std::log(1.0 - rng.uniform53());
            pts[i] = pos;
        }
        bool hit = false;
        std::size_t next = 0;
        double min_gap = std::numeric_limits<double>::infinity();
        for (unsigned j = j_min; j <= j_max; ++j) {
            std::size_t N = std::size_t{1} << j;
            for (std::size_t i = std::max<std::size_t>(next, 1); i < N; ++i)
                min_gap = std::min(min_gap, pts[i] - pts[i - 1]);
            next = N;
            if (!hit && static_cast<double>(N) * min_gap <= 1.0 / std::log(static_cast<double>(N))) hit = true;
            if (hit) hits[j - j_min] += 1;
        }
    }
    std::vector<DyadicTrendRow> rows;
    for (unsigned j = j_min; j <= j_max; ++j)
        rows.push_back({std::uint64_t{1} << j, static_cast<double>(hits[j - j_min]) / static_cast<double>(trials)});
    return rows;
}

std::uint64_t mult_table_distinct(std::uint64_t X, std::size_t mem_bound_mb) {
    if (X < 1) fail(Errc::validation, "X must be >= 1");
    std::uint64_t max_prod = X * X;
    std::uint64_t bytes = max_prod / 8 + 1;
    if (bytes > mem_bound_mb * 1024ull * 1024ull)
        fail(Errc::memory_bound, "X = " + std::to_string(X) + " needs " + std::to_string(bytes >> 20) +
                                     " MiB; raise the memory bound");
    std::vector<std::uint64_t> bits(max_prod / 64 + 1, 0);
    for (std::uint64_t u = 1; u <= X; ++u)
        for (std::uint64_t v = u; v <= X; ++v) {
            std::uint64_t p = u * v;
            bits[p >> 6] |= 1ull << (p & 63);
        }
    std::uint64_t count = 0;
    for (std::uint64_t w : bits) count += static_cast<std::uint64_t>(__builtin_popcountll(w));
    return count;
}

double ford_exponent() { return 1.0 - std::log(std::exp(1.0) * std::log(2.0)) / std::log(2.0); }

std::vector<FordRow> ford_exponent_report(std::span<const std::uint64_t> Xs, std::size_t mem_bound_mb) {
    if (Xs.empty()) fail(Errc::validation, "empty X list");
    double c = ford_exponent();
    std::vector<FordRow> rows;
    for (std::size_t i = 0; i < Xs.size(); ++i) {
        if (i > 0 && Xs[i] <= Xs[i - 1]) fail(Errc::validation, "X list must be increasing");
        std::uint64_t X = Xs[i];
        FordRow r;
        r.X = X;
        r.distinct = mult_table_distinct(X, mem_bound_mb);
        r.ratio = static_cast<double>(r.distinct) / (static_cast<double>(X) * static_cast<double>(X));
        double lx = std::log(static_cast<double>(X));
        r.reference = X >= 3 ? std::pow(lx, -c) * std::pow(std::log(lx), -2.0 / 3.0) : 0.0;
        rows.push_back(r);
    }
    return rows;
}

namespace {

// Certified window tests for |p/r - alpha| <= 1/T over positive integers:
// "below" means T p < T alpha r - r, "above" means T p > T alpha r + r.
class QuadrupleCmp {
  public:
    QuadrupleCmp(const Alpha& alpha, const Int& T) : alpha_(alpha), T_(T) {}

    bool below(const Int& p, const Int& r) const {
        if (alpha_.is_exact()) {
            const QuadSurd& s = alpha_.surd();
            // T r (a + b sqrt(d)) - c r - c T p > 0
            Int u = T_ * r * s.a() - s.c() * r - s.c() * T_ * p;
            Int v = T_ * r * s.b();
            return s.is_rational() ? sign_of(u) > 0 : surd_sign(u, v, s.d()) > 0;
        }
        Rat tp(T_ * p);
        if (tp < Rat(T_ * r) * alpha_.lo() - Rat(r)) return true;
        if (tp >= Rat(T_ * r) * alpha_.hi() - Rat(r)) return false;
        fail(Errc::precision_exhausted, "literal alpha cannot certify a quadruple-window bound");
    }

    bool above(const Int& p, const Int& r) const {
        if (alpha_.is_exact()) {
            const QuadSurd& s = alpha_.surd();
            // c T p - T r (a + b sqrt(d)) - c r > 0
            Int u = s.c() * T_ * p - T_ * r * s.a() - s.c() * r;
            Int v = -T_ * r * s.b();
            return s.is_rational() ? sign_of(u) > 0 : surd_sign(u, v, s.d()) > 0;
        }
        Rat tp(T_ * p);
        if (tp > Rat(T_ * r) * alpha_.hi() + Rat(r)) return true;
        if (tp <= Rat(T_ * r) * alpha_.lo() + Rat(r)) return false;
        fail(Errc::precision_exhausted, "literal alpha cannot certify a quadruple-window bound");
    }

  private:
    const Alpha& alpha_;
    Int T_;
};

}  // namespace

QuadrupleResult quadruple_count(const QuadrupleWindow& w) {
    if (w.M < 2) fail(Errc::validation, "M must be >= 2");
    Int M3 = Int(w.M) * Int(w.M) * Int(w.M);
    if (w.T < M3 || w.T > M3 * Int(w.M)) fail(Errc::validation, "T must lie in [M^3, M^4]");
    if (w.alpha.sign() <= 0) fail(Errc::validation, "alpha must be positive");
    std::int64_t lo = w.M, hi = 2 * w.M;
    std::size_t side = static_cast<std::size_t>(hi - lo + 1);
    if (side * side > (1u << 26)) fail(Errc::memory_bound, "window too large for pair enumeration");

    // Distinct products with ordered-pair multiplicities, sorted.
    struct Prod {
        std::int64_t value;
        std::int64_t mult;
        std::int64_t wit_a, wit_b;  ///< one representative factor pair, a <= b
    };
    std::vector<Prod> prods;
    prods.reserve(side * side / 2 + side);
    for (std::int64_t a = lo; a <= hi; ++a)
        for (std::int64_t b = a; b <= hi; ++b) prods.push_back({a * b, a == b ? 1 : 2, a, b});
    std::sort(prods.begin(), prods.end(), [](const Prod& x, const Prod& y) { return x.value < y.value; });
    std::vector<Prod> merged;
    for (const Prod& p : prods) {
        if (!merged.empty() && merged.back().value == p.value)
            merged.back().mult += p.mult;
        else
            merged.push_back(p);
    }
    std::vector<std::uint64_t> prefix(merged.size() + 1, 0);
    for (std::size_t i = 0; i < merged.size(); ++i)
        prefix[i + 1] = prefix[i] + static_cast<std::uint64_t>(merged[i].mult);

    QuadrupleCmp cmp(w.alpha, w.T);
    QuadrupleResult out;
    out.count = 0;
    for (const Prod& r : merged) {
        // "below" holds on a prefix of the sorted values, "above" on a suffix;
        // the admissible numerators are exactly the slice in between.
        auto first = std::partition_point(merged.begin(), merged.end(),
                                          [&](const Prod& p) { return cmp.below(p.value, r.value); });
        auto last = std::partition_point(first, merged.end(),
                                         [&](const Prod& p) { return !cmp.above(p.value, r.value); });
        std::size_t i0 = static_cast<std::size_t>(first - merged.begin());
        std::size_t i1 = static_cast<std::size_t>(last - merged.begin());
        if (i1 > i0) {
            out.count += Int(static_cast<unsigned long>(r.mult)) *
                         Int(static_cast<unsigned long>(prefix[i1] - prefix[i0]));
            if (out.witnesses.size() < 10)
                out.witnesses.push_back({merged[i0].wit_a, merged[i0].wit_b, r.wit_a, r.wit_b});
        }
    }
    return out;
}

std::vector<ReportRow> billiard_vs_poisson_report(const Alpha& alpha, std::span<const std::size_t> Ns,
                                                  std::size_t trials, std::uint64_t seed, unsigned precision_cap) {
    if (Ns.empty()) fail(Errc::validation, "empty N list");
    for (std::size_t i = 1; i < Ns.size(); ++i)
        if (Ns[i] <= Ns[i - 1]) fail(Errc::validation, "N list must be increasing");
    if (Ns.front() < 3) fail(Errc::validation, "need N >= 3 for the k = 2 column");
    std::size_t maxN = Ns.back();
    auto levels = enumerate_spectrum(alpha, maxN, precision_cap);
    LevelOrder ord(alpha, precision_cap);

    std::vector<ReportRow> rows;
    for (std::size_t N : Ns) {
        ReportRow row;
        row.N = static_cast<std::int64_t>(N);
        std::span<const Eigenvalue> prefix_span(levels.data(), N);
        row.billiard_min = min_gap_of(alpha, prefix_span, 1, precision_cap);
        row.billiard_min2 = min_gap_of(alpha, prefix_span, 2, precision_cap);
        row.poisson_quantiles = poisson_min_gap({N, trials, seed, 1}).quantiles;
        row.poisson_median_k2 = poisson_min_gap({N, trials, seed, 2}).quantiles[2];

        if (alpha.is_exact()) {
            double logN = std::log(static_cast<double>(N));
            double scaled = std::pow(10.0, row.billiard_min.gap.log10_magnitude()) * static_cast<double>(N);
            row.log_threshold_event = scaled <= 1.0 / logN;
            double scaled2 = std::pow(10.0, row.billiard_min2.gap.log10_magnitude()) * static_cast<double>(N);
            row.second_gap_floor_event = scaled2 < 1.0 / std::pow(logN, 2.0 / 3.0);
        }

        // Each minimal gap reappears quadrupled: delta_min,2 at the rank of
        // the doubled pair is at most 4 delta_min(N), checked exactly.
        GapRecord prop = propagate_gap(alpha, row.billiard_min);
        Int rank = count_up_to_level(alpha, prop.upper, precision_cap);
        row.propagated_rank = to_i64(rank);
        auto wide = enumerate_spectrum(alpha, static_cast<std::size_t>(row.propagated_rank), precision_cap);
        GapRecord wide2 = min_gap_of(alpha, wide, 2, precision_cap);
        row.propagation_bound_holds =
            ord.cmp_gap(wide2.upper, wide2.lower, prop.upper, prop.lower) <= 0;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace specgap
