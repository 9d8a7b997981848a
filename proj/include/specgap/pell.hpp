// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "specgap/bigint.hpp"

namespace specgap {

struct PellSolution {
    Int D;
    Int x;
    Int y;
    bool check() const { return x * x - D * y * y == 1 && y != 0; }
};

/// Least positive solution of x^2 - D y^2 = 1, via the continued fraction of
/// sqrt(D). SquareD when D is a perfect square.
PellSolution pell_fundamental(const Int& D);

/// n-th solution (x_n, y_n) = (T_n(x), y U_{n-1}(x)) from the fundamental (x, y).
PellSolution pell_sequence(const Int& D, std::uint64_t n);

}  // namespace specgap
