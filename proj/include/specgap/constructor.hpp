// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "specgap/contfrac.hpp"
#include "specgap/factor.hpp"
#include "specgap/primesel.hpp"
#include "specgap/surd.hpp"

namespace specgap {

enum class Provenance { dirichlet, sqrtD_pipeline, general_quadratic, strong_exact, approximant };

const char* provenance_name(Provenance p);

struct CertWitness {
    Int divisor;              ///< certified divisor of the side's integer
    double exponent = 0.0;    ///< log(divisor)/log(side)
    double balance = 0.0;     ///< log(min(div, side/div)) / ((1/2) log side)
};

/// The (m, m', n, n') gap witness: levels alpha m^2 + n^2 and alpha m'^2 + n'^2
/// differ by exactly 4|alpha q - p|.
struct GapCertificate {
    Int m, m_prime, n, n_prime;
    Int q, p;               ///< underlying approximant (after any desquare scaling)
    QuadSurd alpha;
    QuadSurd gap;           ///< exact 4|alpha q - p|
    QuadSurd level_bound;   ///< max of the two levels
    CertWitness wq, wp;     ///< divisor d of q, divisor e of p
    Provenance provenance = Provenance::approximant;
    int desquare_factor = 1;
    bool evenly_divisible = false;  ///< both balances at least 0.45
    bool revalidated = false;
};

/// Re-checks every certificate identity with exact arithmetic and stamps
/// `revalidated`; raises on any violation.
void revalidate(GapCertificate& cert);

/// The divisor-splitting construction: given d | q and e | p with neither side
/// a perfect square of its divisor, m = q/d + d, m' = q/d - d, n = p/e - e,
/// n' = p/e + e.
GapCertificate certificate_from_divisors(const QuadSurd& alpha, const Int& p, const Int& q, const Int& e,
                                         const Int& d, Provenance prov, int desquare_factor = 1);

/// Desquares (p, q), picks balanced divisors of both sides, and assembles the
/// certificate. DegenerateDivisor when a side collapses (square after scaling).
GapCertificate construct_from_approximant(const QuadSurd& alpha, const Int& p, const Int& q,
                                          const FactorConfig& cfg = {});

/// Dirichlet route: Q = ceil(sqrt(N)), (a, q) from dirichlet_approx, pairs
/// m = 2q+1, m' = 2q-1, n = 2a-1, n' = 2a+1; gap = 8|alpha q - a| <= 8/Q.
GapCertificate general_upper_bound(const Alpha& alpha, const Int& N);

/// sqrt(4D) pipeline: for each P, index n = l_1...l_J * P, p_n = 2 x_n,
/// q_n = y_n, divisors from the lcm of the sub-index terms.
std::vector<GapCertificate> construct_sqrtD(const Int& D, const PrimeSelection& primes, std::span<const Int> P_list,
                                            bool audit_lcm = false);

/// alpha(x; a, b, sign, r) = r * ((x + sqrt(x^2 + 4 sign))/2)^a * sqrt(x^2 + 4 sign)^b
struct GeneralQuadraticSpec {
    Int x;
    long a = 0;
    int b = 0;      ///< 0 or 1
    int sign = 1;   ///< +1 or -1
    Rat r = 1;

    /// Normalizes x > 0 (flipping a and r accordingly) and validates.
    GeneralQuadraticSpec normalized() const;
    QuadSurd alpha() const;
    Int discriminant() const { return x * x + 4 * sign; }
};

/// Numerator/denominator integer sequences of the four approximant families,
/// with exact quality against alpha. Emitted from the smallest valid index.
std::vector<Approximant> approximants_general_quadratic(const GeneralQuadraticSpec& spec, std::size_t count);

struct IndexSolution {
    Int L, L_prime;      ///< products of the two prime selections
    Int mu, mu_prime;
    Int m_idx, mp_idx;   ///< m = 2 mu L + 1, m' = mu' L' + 1
    Int b_off;           ///< L m - L' m' = b_off (= a)
};

struct GeneralConstruction {
    std::vector<GapCertificate> certificates;
    std::vector<IndexSolution> indices;
    PrimeSelection sel_one_mod4, sel_three_mod4;
};

/// General-family route: two congruence-restricted prime selections, CRT index
/// solutions, divisors certified through the gcd identities by exact division.
GeneralConstruction construct_general(const GeneralQuadraticSpec& spec, const Rat& eps, std::size_t count);

/// Exact-1/N route for b = 0 and even a: odd indices n, divisors
/// u_{(n-1)/2} | u_n on both sides, strongly evenly divisible.
std::vector<GapCertificate> construct_strong_exact(const GeneralQuadraticSpec& spec, std::size_t count);

}  // namespace specgap
