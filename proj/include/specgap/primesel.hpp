// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "specgap/bigint.hpp"

namespace specgap {

/// Which odd primes are admissible for a selection.
struct PoolPolicy {
    enum class Kind { odd, one_mod4, three_mod4 };
    Kind kind = Kind::odd;
    Int coprime_to = 1;                  ///< exclude primes dividing this
    std::uint64_t pool_bound = 1'000'000;  ///< largest prime the pool may reach
};

struct PrimeSelection {
    std::vector<std::uint64_t> primes;  ///< strictly increasing odd primes
    Rat epsilon;                        ///< target slack
    Rat density;                        ///< exact 1 - prod(1 - 1/l)
    Int product() const;
};

/// Greedy smallest-first selection from the admissible pool until the density
/// enters (1/2 - epsilon, 1/2). Candidates that would push the density to 1/2
/// or beyond are skipped. PoolExhausted when the pool bound is hit first.
PrimeSelection prime_select(const Rat& epsilon, const PoolPolicy& policy = {});

/// Wrap an explicit prime list; validates oddness, distinctness, primality,
/// the coprimality constraint and density < 1/2, deriving a matching epsilon.
PrimeSelection selection_from_list(std::span<const std::uint64_t> primes, const Int& coprime_to = 1);

}  // namespace specgap
