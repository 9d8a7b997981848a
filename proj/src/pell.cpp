// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/pell.hpp"

#include "specgap/chebyshev.hpp"
#include "specgap/contfrac.hpp"

namespace specgap {

PellSolution pell_fundamental(const Int& D) {
    if (D < 2) fail(Errc::validation, "pell requires D >= 2");
    if (is_perfect_square(D)) fail(Errc::square_d, "D = " + to_string(D) + " is a perfect square");
    Alpha root = Alpha::exact(QuadSurd::sqrt_of(Rat(D)));
    ConvergentStream stream(root);
    // The first convergent with p^2 - D q^2 = 1 is the fundamental solution.
    while (true) {
        auto ap = stream.next();
        if (!ap) fail(Errc::internal, "pell convergent stream ended");
        if (ap->p * ap->p - D * ap->q * ap->q == 1) return {D, ap->p, ap->q};
    }
}

PellSolution pell_sequence(const Int& D, std::uint64_t n) {
    if (n < 1) fail(Errc::validation, "pell sequence index must be >= 1");
    PellSolution fund = pell_fundamental(D);
    // T_n(x) = v_n(2x)/2 and U_{n-1}(x) = u_{n-1}(2x).
    Int xn = divexact(seq_v(n, 2 * fund.x, -1), Int(2));
    Int yn = fund.y * seq_u(n - 1, 2 * fund.x, -1);
    return {D, xn, yn};
}

}  // namespace specgap
