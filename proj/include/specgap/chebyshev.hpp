// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "specgap/bigint.hpp"

namespace specgap {

/// Integer specializations u_k = U_k(x/2) (s = -1) and their +1-recurrence
/// twins: u_0 = 1, u_1 = x, u_{k+1} = x u_k + s u_{k-1}.
/// Iterative below the fast-path threshold, binary doubling above it.
Int seq_u(std::uint64_t k, const Int& x, int s = -1);

/// v_k = 2 T_k(x/2) for s = -1 (and the +1-recurrence twin): v_0 = 2, v_1 = x.
Int seq_v(std::uint64_t k, const Int& x, int s = -1);

/// 2*T_n(x/2) as an exact integer.
inline Int cheb_T2(std::uint64_t n, const Int& x) { return seq_v(n, x, -1); }

/// U_{n-1}(x/2) as an exact integer; pass k = n-1 directly.
inline Int cheb_U(std::uint64_t k, const Int& x) { return seq_u(k, x, -1); }

/// T_n(x)^2 - (x^2 - 1) U_{n-1}(x)^2 == 1, checked exactly at integer x.
bool verify_pell_poly(std::uint64_t n, const Int& x);

/// 2T_{n+m}(x/2) == 2T_n(x/2) * 2T_m(x/2) - 2T_{n-m}(x/2), n >= m >= 0.
bool verify_composition(std::uint64_t n, std::uint64_t m, const Int& x);

struct SDSSpec {
    enum class Kind { u_halfint, t_halfint_doubled, linear_recurrence };
    Kind kind = Kind::u_halfint;
    Int x = 1;  ///< parameter for the Chebyshev kinds
    Int b = 1;  ///< linear_recurrence: a_{n+1} = b a_n + d a_{n-1}
    Int d = 1;  ///< requires gcd(b, d) = 1
};

/// Term a_n of the linear recurrence SDS (a_0 = 0, a_1 = 1).
Int linear_sds_term(std::uint64_t n, const Int& b, const Int& d);

/// gcd identity of the strong divisibility sequence:
///   u kind:     gcd(U_{n-1}, U_{m-1}) == U_{gcd(n,m)-1}
///   t kind:     gcd(2T_n, 2T_m) == 2T_{gcd(n,m)}   (n, m odd)
///   linear:     gcd(a_n, a_m) == a_{gcd(n,m)}
bool sds_gcd_check(const SDSSpec& spec, std::uint64_t n, std::uint64_t m);

/// lcm of the values, folded pairwise.
Int lcm_divisor(std::span<const Int> values);

struct LcmAudit {
    Int value;
    bool audit_ok;          ///< inclusion-exclusion product identity held
    std::size_t subsets;    ///< number of gcd-lattice terms checked
};

/// lcm plus an exact check of the inclusion-exclusion identity
/// lcm(a_1..a_J) = prod over nonempty S of gcd(a_S)^((-1)^(|S|-1)).
LcmAudit lcm_divisor_audited(std::span<const Int> values);

struct SelftestSuite {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
};

/// The exhaustive identity suites at their acceptance scales.
std::vector<SelftestSuite> selftest_identities();

}  // namespace specgap
