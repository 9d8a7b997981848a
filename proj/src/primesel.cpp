// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/primesel.hpp"

#include <algorithm>

#include "specgap/factor.hpp"

namespace specgap {

Int PrimeSelection::product() const {
    Int p = 1;
    for (auto l : primes) p *= static_cast<unsigned long>(l);
    return p;
}

namespace {

bool admissible(std::uint64_t p, const PoolPolicy& policy) {
    if (p < 3) return false;
    switch (policy.kind) {
        case PoolPolicy::Kind::odd: break;
        case PoolPolicy::Kind::one_mod4:
            if (p % 4 != 1) return false;
            break;
        case PoolPolicy::Kind::three_mod4:
            if (p % 4 != 3) return false;
            break;
    }
    if (policy.coprime_to != 1 && mpz_divisible_ui_p(policy.coprime_to.get_mpz_t(), static_cast<unsigned long>(p)))
        return false;
    return true;
}

std::uint64_t next_prime(std::uint64_t p) {
    Int q(static_cast<unsigned long>(p));
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    return static_cast<std::uint64_t>(q.get_ui());
}

}  // namespace

PrimeSelection prime_select(const Rat& epsilon, const PoolPolicy& policy) {
    if (sign_of(epsilon) <= 0 || epsilon >= Rat(1, 2))
        fail(Errc::validation, "epsilon must lie in (0, 1/2)");
    PrimeSelection sel;
    sel.epsilon = epsilon;
    Rat survive(1);  // prod (1 - 1/l); density = 1 - survive
    Rat half(1, 2);
    Rat lo = half - epsilon;
    for (std::uint64_t p = 3; p <= policy.pool_bound; p = next_prime(p)) {
        if (!admissible(p, policy)) continue;
        Rat cand = survive * Rat(Int(static_cast<unsigned long>(p - 1)), Int(static_cast<unsigned long>(p)));
        cand.canonicalize();
        Rat cand_density = 1 - cand;
        if (cand_density >= half) continue;  // would overshoot; a larger prime will fit
        survive = cand;
        sel.primes.push_back(p);
        if (cand_density > lo) {
            sel.density = cand_density;
            return sel;
        }
    }
    fail(Errc::pool_exhausted,
         "density window not reached below pool bound " + std::to_string(policy.pool_bound) +
             "; raise the bound");
}

PrimeSelection selection_from_list(std::span<const std::uint64_t> primes, const Int& coprime_to) {
    if (primes.empty()) fail(Errc::validation, "empty prime list");
    PrimeSelection sel;
    Rat survive(1);
    std::uint64_t prev = 0;
    for (std::uint64_t p : primes) {
        if (p <= prev) fail(Errc::validation, "primes must be strictly increasing");
        prev = p;
        if (p < 3 || p % 2 == 0) fail(Errc::validation, std::to_string(p) + " is not an odd prime");
        if (!is_prime(Int(static_cast<unsigned long>(p)))) fail(Errc::validation, std::to_string(p) + " is not prime");
        if (coprime_to != 1 && mpz_divisible_ui_p(coprime_to.get_mpz_t(), static_cast<unsigned long>(p)))
            fail(Errc::validation, std::to_string(p) + " is not coprime to the required base");
        survive *= Rat(Int(static_cast<unsigned long>(p - 1)), Int(static_cast<unsigned long>(p)));
        survive.canonicalize();
        sel.primes.push_back(p);
    }
    sel.density = 1 - survive;
    if (sel.density >= Rat(1, 2)) fail(Errc::validation, "selection density must stay below 1/2");
    // Smallest clean epsilon with 1/2 - eps < density: twice the shortfall.
    sel.epsilon = 2 * (Rat(1, 2) - sel.density);
    sel.epsilon.canonicalize();
    return sel;
}

}  // namespace specgap
