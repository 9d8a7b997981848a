// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "specgap/alpha.hpp"

namespace specgap {

struct CFExpansion {
    Int a0;
    std::vector<Int> quotients;  ///< partial quotients after a0
    /// (start, length) on the quotient list, detected for quadratic surds.
    std::optional<std::pair<std::size_t, std::size_t>> period;
    bool terminated = false;  ///< finite expansion (rational input)
};

/// First `depth` partial quotients. Exact for the surd path (with period
/// detection); the literal path expands the interval's common prefix and
/// raises PrecisionExhausted once the endpoints disagree.
CFExpansion continued_fraction(const Alpha& alpha, std::size_t depth);

/// |q*alpha - p| and friends; exact surd on the exact path, an interval on
/// the literal path.
struct Quality {
    bool exact = true;
    QuadSurd value;  ///< exact path
    Rat lo, hi;      ///< literal path enclosure of |q*alpha - p|
    std::string decimal(int sig_digits = 30) const;
    double approx() const;
};

struct Approximant {
    Int p;
    Int q;
    Quality quality;         ///< |q*alpha - p|
    Quality scaled_quality;  ///< q * |q*alpha - p|
};

Quality quality_of(const Alpha& alpha, const Int& p, const Int& q);

/// Convergents p_k/q_k; fewer than `count` when a rational alpha terminates.
std::vector<Approximant> convergents(const Alpha& alpha, std::size_t count);

/// Dirichlet pair (a, q): 1 <= q <= Q and 0 < |a - q*alpha| <= 1/Q, via the
/// largest convergent denominator <= Q. RationalAlpha on an exact hit.
Approximant dirichlet_approx(const Alpha& alpha, const Int& Q);

/// Incremental convergent generator (shared by dirichlet and Pell).
class ConvergentStream {
  public:
    explicit ConvergentStream(const Alpha& alpha);
    /// Next convergent, or nullopt when a rational expansion has ended.
    std::optional<Approximant> next();

  private:
    const Alpha& alpha_;
    // Surd-path state
    QuadSurd state_;
    bool exact_ = true;
    bool done_ = false;
    // Literal-path state: interval endpoints
    Rat lo_, hi_;
    Int h_prev_{1}, h_prev2_{0}, k_prev_{0}, k_prev2_{1};
};

}  // namespace specgap
