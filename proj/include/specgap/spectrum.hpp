// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "specgap/alpha.hpp"

namespace specgap {

/// Lattice point (m, n) standing for the level alpha m^2 + n^2.
struct Eigenvalue {
    std::int64_t m = 0;
    std::int64_t n = 0;
    QuadSurd level(const Alpha& alpha) const;  ///< exact path
    std::string level_decimal(const Alpha& alpha, int sig_digits = 30) const;
};

/// Exact level comparisons for a fixed alpha, with an int128 fast path when
/// the surd components and coordinates are small enough.
class LevelOrder {
  public:
    explicit LevelOrder(const Alpha& alpha, unsigned precision_cap = 4096);

    /// sign of level(x) - level(y); literal path may raise PrecisionExhausted.
    int cmp(const Eigenvalue& x, const Eigenvalue& y) const;

    /// level(e) <= X for rational X >= 0.
    bool level_le(const Eigenvalue& e, const Rat& X) const;

    /// sign of (level(x) - level(y)) - (level(u) - level(v)): exact gap order.
    int cmp_gap(const Eigenvalue& x, const Eigenvalue& y, const Eigenvalue& u, const Eigenvalue& v) const;

  private:
    const Alpha& alpha_;
    bool fast_ = false;
    std::int64_t fa_ = 0, fb_ = 0, fc_ = 1, fd_ = 1;
    unsigned precision_cap_;
};

/// First N eigenvalues in strictly increasing order.
/// RationalAlpha for rational alpha (the spectrum would have multiplicities).
std::vector<Eigenvalue> enumerate_spectrum(const Alpha& alpha, std::size_t N, unsigned precision_cap = 4096);

/// All eigenvalues with level <= X, in increasing order.
std::vector<Eigenvalue> enumerate_up_to(const Alpha& alpha, const Rat& X, unsigned precision_cap = 4096);

/// #{(m,n) : alpha m^2 + n^2 <= X} by per-m column counting; no enumeration.
Int count_up_to(const Alpha& alpha, const Rat& X);

/// 1-based rank of e in the spectrum, by exact per-column counting.
Int count_up_to_level(const Alpha& alpha, const Eigenvalue& e, unsigned precision_cap = 4096);

struct GapRecord {
    std::int64_t index = 0;  ///< 1-based i with lower = lambda_i
    Eigenvalue lower, upper;
    QuadSurd gap;         ///< exact on the surd path
    QuadSurd scaled_gap;  ///< gap * N
    std::int64_t N = 0;
    std::int64_t k = 1;
    bool consecutive = true;
};

/// k-th smallest of the N-1 consecutive gaps among the first N eigenvalues.
GapRecord min_gap(const Alpha& alpha, std::size_t N, std::size_t k = 1, unsigned precision_cap = 4096);

/// Gap statistics computed from an already enumerated prefix.
GapRecord min_gap_of(const Alpha& alpha, std::span<const Eigenvalue> levels, std::size_t k,
                     unsigned precision_cap = 4096);

struct SweepRow {
    std::int64_t N;
    GapRecord record;
};

/// One row per N, reusing a single enumeration across the increasing list.
std::vector<SweepRow> scaled_gap_sweep(const Alpha& alpha, std::span<const std::size_t> Ns,
                                       unsigned precision_cap = 4096);

/// The (2m, 2n) vs (2m', 2n') record: levels 4*lambda, gap exactly 4x.
/// The returned index is the 1-based rank of the new lower level.
GapRecord propagate_gap(const Alpha& alpha, const GapRecord& g);

}  // namespace specgap
