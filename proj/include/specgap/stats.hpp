// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "specgap/spectrum.hpp"

namespace specgap {

/// N points uniform on [0, N]; the k-th smallest consecutive gap, scaled by N.
struct PoissonExperiment {
    std::size_t N = 2;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::size_t k = 1;
};

struct PoissonSummary {
    std::vector<double> samples;  ///< one scaled k-th minimal gap per trial
    double mean = 0.0;
    /// p05, p25, p50, p75, p95 of the samples
    std::array<double, 5> quantiles{};
    /// Kolmogorov-Smirnov distance of the samples to 1 - exp(-t)
    double ks_exponential = 0.0;
};

PoissonSummary poisson_min_gap(const PoissonExperiment& exp);

/// Finite rendition of the infinitely-often law: one growing unit-rate
/// Poisson realization per trial, tracking whether N delta_min(N) <= 1/log N
/// happened at any dyadic N so far. The cumulative hit fraction is
/// nondecreasing by construction; its growth is the reportable trend.
struct DyadicTrendRow {
    std::uint64_t N;
    double event_fraction;  ///< fraction of trials with a hit at some N' <= N
};
std::vector<DyadicTrendRow> dyadic_event_trend(std::uint64_t seed, std::size_t trials, unsigned j_min,
                                               unsigned j_max);

/// Exact count of distinct products {u*v : u, v <= X} via a bitmap.
/// MemoryBound when X^2 bits exceed the budget.
std::uint64_t mult_table_distinct(std::uint64_t X, std::size_t mem_bound_mb = 512);

/// c = 1 - log(e log 2)/log 2 = 0.086071...
double ford_exponent();

struct FordRow {
    std::uint64_t X;
    std::uint64_t distinct;
    double ratio;      ///< distinct / X^2
    double reference;  ///< (log X)^-c (log log X)^(-2/3)
};
std::vector<FordRow> ford_exponent_report(std::span<const std::uint64_t> Xs, std::size_t mem_bound_mb = 512);

/// Quadruples n_i in [M, 2M] with |n1 n2 / (n3 n4) - alpha| <= 1/T.
struct QuadrupleWindow {
    std::int64_t M = 2;
    Int T;
    Alpha alpha;
};

struct QuadrupleResult {
    Int count;
    std::vector<std::array<std::int64_t, 4>> witnesses;  ///< up to 10, lexicographic
};

QuadrupleResult quadruple_count(const QuadrupleWindow& w);

/// Billiard minimal gaps against the Poisson baseline, with the propagation
/// check delta_min,2(rank of 4 lambda') <= 4 delta_min(N) done exactly.
struct ReportRow {
    std::int64_t N;
    GapRecord billiard_min;       ///< k = 1
    GapRecord billiard_min2;      ///< k = 2
    std::array<double, 5> poisson_quantiles{};
    double poisson_median_k2 = 0.0;
    bool log_threshold_event = false;   ///< N delta_min <= 1/log N (Poisson would hit i.o.)
    bool second_gap_floor_event = false;  ///< delta_min,2 < 1/(N (log N)^(2/3)) (Poisson eventually never)
    std::int64_t propagated_rank = 0;
    bool propagation_bound_holds = false;  ///< delta_min,2(propagated_rank) <= 4 delta_min(N)
};

std::vector<ReportRow> billiard_vs_poisson_report(const Alpha& alpha, std::span<const std::size_t> Ns,
                                                  std::size_t trials, std::uint64_t seed,
                                                  unsigned precision_cap = 4096);

}  // namespace specgap
