// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/factor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "specgap/rng.hpp"

namespace specgap {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Brent's variant of Pollard rho on 64-bit numbers; returns a nontrivial
// factor of composite odd n, or 0 on failure for this (c, x0).
u64 rho_brent_u64(u64 n, u64 c, u64 x0, u64 iter_cap) {
    u64 y = x0, r = 1, q = 1, g = 1, x = 0, ys = 0;
    u64 it = 0;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = (mulmod64(y, y, n) + c) % n;
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            u64 lim = std::min<u64>(128, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = (mulmod64(y, y, n) + c) % n;
                u64 diff = x > y ? x - y : y - x;
                q = mulmod64(q, diff == 0 ? 1 : diff, n);
            }
            g = std::gcd(q, n);
            k += lim;
            it += lim;
            if (it > iter_cap) return 0;
        }
        r <<= 1;
        if (it > iter_cap) return 0;
    }
    if (g == n) {
        g = 1;
        while (g == 1) {
            ys = (mulmod64(ys, ys, n) + c) % n;
            u64 diff = x > ys ? x - ys : ys - x;
            g = std::gcd(diff == 0 ? n : diff, n);
            if (++it > iter_cap) return 0;
        }
    }
    return g == n ? 0 : g;
}

// Pollard rho on mpz for operands past 64 bits.
Int rho_brent_mpz(const Int& n, const Int& c, const Int& x0, u64 iter_cap) {
    Int y = x0, x, ys, q = 1, g = 1;
    u64 r = 1, it = 0;
    auto step = [&](Int& v) { v = (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) step(y);
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            u64 lim = std::min<u64>(128, r - k);
            for (u64 i = 0; i < lim; ++i) {
                step(y);
                Int diff = x > y ? Int(x - y) : Int(y - x);
                if (sign_of(diff) != 0) q = q * diff % n;
            }
            g = gcd(q, n);
            k += lim;
            it += lim;
            if (it > iter_cap) return 0;
        }
        r <<= 1;
        if (it > iter_cap) return 0;
    }
    if (g == n) {
        g = 1;
        while (g == 1) {
            step(ys);
            Int diff = x > ys ? Int(x - ys) : Int(ys - x);
            g = gcd(sign_of(diff) == 0 ? n : diff, n);
            if (++it > iter_cap) return 0;
        }
    }
    return g == n ? Int(0) : g;
}

void factor_rec(const Int& n, const FactorConfig& cfg, std::vector<Int>& out, int depth) {
    if (n == 1) return;
    if (depth > 128) fail(Errc::factorization_timeout, "factorization recursion too deep");
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    if (is_perfect_square(n)) {
        Int r = isqrt(n);
        factor_rec(r, cfg, out, depth + 1);
        factor_rec(r, cfg, out, depth + 1);
        return;
    }
    CounterRng rng(cfg.seed);
    Int f = 0;
    if (fits_i64(n)) {
        u64 v = static_cast<u64>(to_i64(n));
        for (unsigned att = 0; att < cfg.rho_retries && f == 0; ++att) {
            u64 c = rng.at(2 * att) % (v - 2) + 1;
            u64 x0 = rng.at(2 * att + 1) % (v - 2) + 2;
            u64 g = rho_brent_u64(v, c, x0, cfg.rho_iteration_cap);
            if (g != 0 && g != 1 && g != v) f = Int(static_cast<unsigned long>(g));
        }
    } else {
        for (unsigned att = 0; att < cfg.rho_retries && f == 0; ++att) {
            Int c = Int(static_cast<unsigned long>(rng.at(2 * att) | 1)) % (n - 2) + 1;
            Int x0 = Int(static_cast<unsigned long>(rng.at(2 * att + 1))) % (n - 2) + 2;
            Int g = rho_brent_mpz(n, c, x0, cfg.rho_iteration_cap);
            if (g != 0 && g != 1 && g != n) f = g;
        }
    }
    if (f == 0) fail(Errc::factorization_timeout, "pollard rho exhausted on " + to_string(n));
    factor_rec(f, cfg, out, depth + 1);
    factor_rec(divexact(n, f), cfg, out, depth + 1);
}

}  // namespace

bool is_prime(const Int& n) {
    if (sign_of(n) <= 0) return false;
    if (fits_i64(n)) return is_prime_u64(static_cast<u64>(to_i64(n)));
    return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n, const FactorConfig& cfg) {
    if (sign_of(n) <= 0) fail(Errc::validation, "factorize requires n >= 1");
    if (bit_length(n) > cfg.max_bits)
        fail(Errc::factorization_timeout,
             "operand has " + std::to_string(bit_length(n)) + " bits, cap is " + std::to_string(cfg.max_bits));
    std::vector<Int> primes;
    Int rest = n;
    for (unsigned long p = 2; p <= cfg.trial_limit && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            primes.push_back(Int(p));
            rest = divexact(rest, Int(p));
        }
    }
    if (rest > 1) factor_rec(rest, cfg, primes, 0);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Int, unsigned>> out;
    for (const Int& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

std::vector<Int> all_divisors(const Int& n, const FactorConfig& cfg, std::size_t max_count) {
    auto fac = factorize(n, cfg);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        if (base * (e + 1) > max_count) fail(Errc::memory_bound, "too many divisors");
        Int pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::string DivisorWitness::balance_decimal() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10f", balance);
    return buf;
}

double exponent_of(const Int& d, const Int& n) {
    double ln = log2_of(n);
    if (ln == 0.0) return 1.0;
    return log2_of(d) / ln;
}

DivisorWitness best_divisor(const Int& n, const FactorConfig& cfg) {
    if (sign_of(n) <= 0) fail(Errc::validation, "best_divisor requires n >= 1");
    DivisorWitness w;
    w.n = n;
    if (n == 1) {
        w.d = 1;
        w.balance = 1.0;
        return w;
    }
    Int root = isqrt(n);
    Int best = 1;
    for (const Int& d : all_divisors(n, cfg)) {
        if (d > root) break;
        best = d;
    }
    w.d = best;
    w.balance = best == 1 ? 0.0 : std::clamp(2.0 * exponent_of(best, n), 0.0, 1.0);
    return w;
}

int balance_cmp(const Int& n, const Int& d, const Rat& threshold) {
    if (n == 1) return sign_of(Rat(1) - threshold);
    Int nd = divexact(n, d);
    const Int& mn = d <= nd ? d : nd;
    // balance = 2 log(mn)/log(n); compare with p/q: mn^(2q) vs n^p.
    Rat t = threshold;
    t.canonicalize();
    if (sign_of(t) < 0) return 1;
    unsigned long p = t.get_num().get_ui();
    unsigned long q = t.get_den().get_ui();
    if (!t.get_num().fits_ulong_p() || !t.get_den().fits_ulong_p())
        fail(Errc::validation, "balance threshold too complex");
    Int lhs = pow_ui(mn, 2 * q);
    Int rhs = pow_ui(n, p);
    return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

int exponent_cmp(const Int& d, const Int& n, const Rat& threshold) {
    Rat t = threshold;
    t.canonicalize();
    if (sign_of(t) < 0) return 1;
    if (!t.get_num().fits_ulong_p() || !t.get_den().fits_ulong_p())
        fail(Errc::validation, "exponent threshold too complex");
    unsigned long p = t.get_num().get_ui();
    unsigned long q = t.get_den().get_ui();
    Int lhs = pow_ui(d, q);
    Int rhs = pow_ui(n, p);
    return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

Desquared desquare(const Int& p, const Int& q) {
    if (sign_of(p) <= 0 || sign_of(q) <= 0) fail(Errc::validation, "desquare requires p, q >= 1");
    for (int t = 1; t <= 3; ++t) {
        Int tp = p * t, tq = q * t;
        if (!is_perfect_square(tp) && !is_perfect_square(tq)) return {tp, tq, t};
    }
    // Unreachable: among t=1,2,3 at least one pair is square-free in this sense.
    fail(Errc::internal, "desquare found no admissible factor");
}

std::pair<Int, Int> squarefree_decompose(const Int& n, const FactorConfig& cfg) {
    if (sign_of(n) <= 0) fail(Errc::validation, "squarefree_decompose requires n >= 1");
    Int s = 1, d0 = 1;
    for (const auto& [p, e] : factorize(n, cfg)) {
        if (e / 2 > 0) s *= pow_ui(p, e / 2);
        if (e % 2) d0 *= p;
    }
    return {s, d0};
}

}  // namespace specgap
