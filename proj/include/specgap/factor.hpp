// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "specgap/bigint.hpp"

namespace specgap {

/// Trial division to trial_limit, then Brent-cycle Pollard rho with a fixed
/// seed. Inputs past max_bits (or rho exhaustion) raise FactorizationTimeout.
struct FactorConfig {
    unsigned long trial_limit = 1'000'000;
    unsigned rho_retries = 64;
    std::uint64_t rho_iteration_cap = 1ULL << 26;
    std::size_t max_bits = 512;
    std::uint64_t seed = 0x5eedbea7f00dULL;
};

/// Prime factorization as (prime, multiplicity), primes increasing.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n, const FactorConfig& cfg = {});

/// All positive divisors, sorted. Throws MemoryBound past max_count.
std::vector<Int> all_divisors(const Int& n, const FactorConfig& cfg = {}, std::size_t max_count = 1u << 22);

/// Deterministic primality (Baillie-PSW backed for large inputs).
bool is_prime(const Int& n);

struct DivisorWitness {
    Int n;
    Int d;  ///< divisor with d <= n/d, maximizing min(d, n/d)
    /// log(min(d,n/d)) / ((1/2) log n), clamped to [0,1]; 1 for n = 1.
    double balance = 0.0;
    std::string balance_decimal() const;  ///< 10 digits after the point
};

DivisorWitness best_divisor(const Int& n, const FactorConfig& cfg = {});

/// Exact sign of balance(n, d) - threshold, via integer powering:
/// balance >= p/q  <=>  min(d, n/d)^(2q) >= n^p.
int balance_cmp(const Int& n, const Int& d, const Rat& threshold);

/// Exact sign of log(d)/log(n) - threshold (d, n >= 2): d^q vs n^p.
int exponent_cmp(const Int& d, const Int& n, const Rat& threshold);

/// log(d)/log(n) as a double, valid for huge operands.
double exponent_of(const Int& d, const Int& n);

struct Desquared {
    Int p;
    Int q;
    int t;  ///< scaling factor in {1,2,3}
};

/// Smallest t in {1,2,3} such that neither t*p nor t*q is a perfect square.
Desquared desquare(const Int& p, const Int& q);

/// n = s^2 * d0 with d0 squarefree; returns (s, d0).
std::pair<Int, Int> squarefree_decompose(const Int& n, const FactorConfig& cfg = {});

}  // namespace specgap
