// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/specgap.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "specgap/jsonio.hpp"
#include "specgap/version.hpp"

using namespace specgap;

struct sg_alpha {
    Alpha value;
};

namespace {

thread_local std::string g_last_error;

sg_status status_of(Errc c) {
    switch (c) {
        case Errc::precision_exhausted: return SG_ERR_PRECISION;
        case Errc::factorization_timeout: return SG_ERR_FACTOR_TIMEOUT;
        case Errc::pool_exhausted: return SG_ERR_POOL_EXHAUSTED;
        case Errc::memory_bound: return SG_ERR_MEMORY_BOUND;
        case Errc::divisibility_violation: return SG_ERR_DIVISIBILITY;
        case Errc::usage: return SG_ERR_USAGE;
        case Errc::internal: return SG_ERR_INTERNAL;
        default: return SG_ERR_VALIDATION;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
sg_status wrap(char** out, Fn&& fn) {
    if (out == nullptr) {
        g_last_error = "null output pointer";
        return SG_ERR_USAGE;
    }
    *out = nullptr;
    try {
        Json j = fn();
        *out = dup_string(j.dump());
        return SG_OK;
    } catch (const Error& e) {
        g_last_error = std::string(errc_name(e.code())) + ": " + e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = std::string("Internal: ") + e.what();
        return SG_ERR_INTERNAL;
    }
}

const Alpha& deref(const sg_alpha* alpha) {
    if (alpha == nullptr) fail(Errc::usage, "null alpha handle");
    return alpha->value;
}

std::vector<std::size_t> size_list(const int64_t* Ns, size_t n_count) {
    if (Ns == nullptr || n_count == 0) fail(Errc::usage, "empty N list");
    std::vector<std::size_t> out;
    for (size_t i = 0; i < n_count; ++i) {
        if (Ns[i] < 1) fail(Errc::validation, "N entries must be positive");
        out.push_back(static_cast<std::size_t>(Ns[i]));
    }
    return out;
}

}  // namespace

extern "C" {

const char* sg_version(void) { return SPECGAP_VERSION_STRING; }

const char* sg_last_error(void) { return g_last_error.c_str(); }

void sg_string_free(char* s) { std::free(s); }

sg_status sg_alpha_parse(const char* text, sg_alpha** out) {
    if (out == nullptr) return SG_ERR_USAGE;
    *out = nullptr;
    try {
        if (text == nullptr) fail(Errc::usage, "null alpha text");
        auto* handle = new sg_alpha{Alpha::parse(text)};
        *out = handle;
        return SG_OK;
    } catch (const Error& e) {
        g_last_error = std::string(errc_name(e.code())) + ": " + e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = std::string("Internal: ") + e.what();
        return SG_ERR_INTERNAL;
    }
}

void sg_alpha_free(sg_alpha* alpha) { delete alpha; }

sg_status sg_alpha_describe(const sg_alpha* alpha, char** out) {
    return wrap(out, [&] { return to_json(deref(alpha)); });
}

sg_status sg_spectrum(const sg_alpha* alpha, int64_t N, const char* X_decimal, unsigned precision_cap, char** out) {
    return wrap(out, [&] {
        const Alpha& a = deref(alpha);
        std::vector<Eigenvalue> levels;
        if (X_decimal != nullptr) {
            levels = enumerate_up_to(a, parse_rational(X_decimal), precision_cap);
        } else {
            if (N < 1) fail(Errc::validation, "N must be >= 1");
            levels = enumerate_spectrum(a, static_cast<std::size_t>(N), precision_cap);
        }
        return spectrum_json(a, levels);
    });
}

sg_status sg_min_gap(const sg_alpha* alpha, int64_t N, int64_t k, unsigned precision_cap, char** out) {
    return wrap(out, [&] {
        if (N < 2 || k < 1) fail(Errc::validation, "need N >= 2 and k >= 1");
        const Alpha& a = deref(alpha);
        GapRecord g = min_gap(a, static_cast<std::size_t>(N), static_cast<std::size_t>(k), precision_cap);
        Json j = to_json(a, g);
        j["alpha"] = to_json(a);
        return j;
    });
}

sg_status sg_sweep(const sg_alpha* alpha, const int64_t* Ns, size_t n_count, unsigned precision_cap, char** out) {
    return wrap(out, [&] {
        const Alpha& a = deref(alpha);
        auto list = size_list(Ns, n_count);
        auto rows = scaled_gap_sweep(a, list, precision_cap);
        return sweep_json(a, rows);
    });
}

sg_status sg_continued_fraction(const sg_alpha* alpha, int64_t depth, char** out) {
    return wrap(out, [&] {
        if (depth < 1) fail(Errc::validation, "depth must be >= 1");
        const Alpha& a = deref(alpha);
        Json j = to_json(continued_fraction(a, static_cast<std::size_t>(depth)));
        j["alpha"] = to_json(a);
        return j;
    });
}

sg_status sg_convergents(const sg_alpha* alpha, int64_t count, char** out) {
    return wrap(out, [&] {
        if (count < 1) fail(Errc::validation, "count must be >= 1");
        const Alpha& a = deref(alpha);
        Json rows = Json::array();
        for (const Approximant& ap : convergents(a, static_cast<std::size_t>(count))) rows.push_back(to_json(ap));
        Json j;
        j["alpha"] = to_json(a);
        j["rows"] = std::move(rows);
        return j;
    });
}

sg_status sg_dirichlet(const sg_alpha* alpha, const char* Q_decimal, char** out) {
    return wrap(out, [&] {
        if (Q_decimal == nullptr) fail(Errc::usage, "null Q");
        const Alpha& a = deref(alpha);
        Approximant ap = dirichlet_approx(a, parse_int(Q_decimal));
        Json j = to_json(ap);
        j["alpha"] = to_json(a);
        j["Q"] = std::string(Q_decimal);
        return j;
    });
}

sg_status sg_best_divisor(const char* n_decimal, char** out) {
    return wrap(out, [&] {
        if (n_decimal == nullptr) fail(Errc::usage, "null n");
        return to_json(best_divisor(parse_int(n_decimal)));
    });
}

sg_status sg_cheb(const char* kind, int64_t n, const char* x_decimal, char** out) {
    return wrap(out, [&] {
        if (kind == nullptr || x_decimal == nullptr) fail(Errc::usage, "null argument");
        if (n < 0) fail(Errc::validation, "n must be >= 0");
        Int x = parse_int(x_decimal);
        std::string k(kind);
        Json j;
        j["kind"] = k;
        j["n"] = std::to_string(n);
        j["x"] = json_int(x);
        if (k == "T2")
            j["value"] = json_int(cheb_T2(static_cast<std::uint64_t>(n), x));
        else if (k == "U")
            j["value"] = json_int(cheb_U(static_cast<std::uint64_t>(n), x));
        else
            fail(Errc::validation, "kind must be T2 or U");
        return j;
    });
}

sg_status sg_pell(int64_t D, int64_t n, char** out) {
    return wrap(out, [&] {
        if (n < 1) fail(Errc::validation, "n must be >= 1");
        PellSolution fund = pell_fundamental(Int(D));
        Json j;
        j["fundamental"] = to_json(fund);
        if (n > 1) j["solution_n"] = to_json(pell_sequence(Int(D), static_cast<std::uint64_t>(n)));
        j["n"] = std::to_string(n);
        return j;
    });
}

sg_status sg_prime_select(const char* epsilon, const char* policy, const char* coprime_to_decimal,
                          uint64_t pool_bound, char** out) {
    return wrap(out, [&] {
        if (epsilon == nullptr) fail(Errc::usage, "null epsilon");
        PoolPolicy pp;
        std::string pol = policy == nullptr ? "odd" : policy;
        if (pol == "odd")
            pp.kind = PoolPolicy::Kind::odd;
        else if (pol == "1mod4")
            pp.kind = PoolPolicy::Kind::one_mod4;
        else if (pol == "3mod4")
            pp.kind = PoolPolicy::Kind::three_mod4;
        else
            fail(Errc::validation, "policy must be odd, 1mod4 or 3mod4");
        if (coprime_to_decimal != nullptr) pp.coprime_to = parse_int(coprime_to_decimal);
        if (pool_bound != 0) pp.pool_bound = pool_bound;
        Json j = to_json(prime_select(parse_rational(epsilon), pp));
        j["policy"] = pol;
        return j;
    });
}

sg_status sg_construct_dirichlet(const sg_alpha* alpha, int64_t N, char** out) {
    return wrap(out, [&] {
        const Alpha& a = deref(alpha);
        return to_json(general_upper_bound(a, Int(N)));
    });
}

sg_status sg_construct_sqrtd(int64_t D, const uint64_t* primes, size_t n_primes, const int64_t* Ps, size_t n_Ps,
                             int audit_lcm, char** out) {
    return wrap(out, [&] {
        if (primes == nullptr || n_primes == 0) fail(Errc::usage, "empty prime list");
        if (Ps == nullptr || n_Ps == 0) fail(Errc::usage, "empty P list");
        PellSolution fund = pell_fundamental(Int(D));
        PrimeSelection sel = selection_from_list({primes, n_primes}, fund.y);
        std::vector<Int> P_list;
        for (size_t i = 0; i < n_Ps; ++i) P_list.emplace_back(Ps[i]);
        auto certs = construct_sqrtD(Int(D), sel, P_list, audit_lcm != 0);
        Json rows = Json::array();
        for (const GapCertificate& c : certs) rows.push_back(to_json(c));
        Json j;
        j["D"] = std::to_string(D);
        j["selection"] = to_json(sel);
        j["certificates"] = std::move(rows);
        return j;
    });
}

sg_status sg_construct_general(int64_t x, int64_t a, int b, int sign, const char* r_rational,
                               const char* eps_rational, int64_t count, char** out) {
    return wrap(out, [&] {
        if (r_rational == nullptr || eps_rational == nullptr) fail(Errc::usage, "null rational argument");
        if (count < 1) fail(Errc::validation, "count must be >= 1");
        GeneralQuadraticSpec spec{Int(x), static_cast<long>(a), b, sign, parse_rational(r_rational)};
        auto res = construct_general(spec, parse_rational(eps_rational), static_cast<std::size_t>(count));
        return to_json(res);
    });
}

sg_status sg_construct_strong(int64_t x, int64_t a, int sign, const char* r_rational, int64_t count, char** out) {
    return wrap(out, [&] {
        if (r_rational == nullptr) fail(Errc::usage, "null rational argument");
        if (count < 1) fail(Errc::validation, "count must be >= 1");
        GeneralQuadraticSpec spec{Int(x), static_cast<long>(a), 0, sign, parse_rational(r_rational)};
        auto certs = construct_strong_exact(spec, static_cast<std::size_t>(count));
        Json rows = Json::array();
        for (const GapCertificate& c : certs) rows.push_back(to_json(c));
        Json j;
        j["certificates"] = std::move(rows);
        return j;
    });
}

sg_status sg_poisson(int64_t N, int64_t trials, int64_t k, uint64_t seed, char** out) {
    return wrap(out, [&] {
        if (N < 2 || trials < 1 || k < 1) fail(Errc::validation, "need N >= 2, trials >= 1, k >= 1");
        PoissonExperiment exp{static_cast<std::size_t>(N), static_cast<std::size_t>(trials),
                              seed, static_cast<std::size_t>(k)};
        return to_json(poisson_min_gap(exp), exp);
    });
}

sg_status sg_mult_table(const uint64_t* Xs, size_t n_Xs, uint64_t mem_bound_mb, char** out) {
    return wrap(out, [&] {
        if (Xs == nullptr || n_Xs == 0) fail(Errc::usage, "empty X list");
        std::vector<std::uint64_t> list(Xs, Xs + n_Xs);
        auto rows = ford_exponent_report(list, mem_bound_mb == 0 ? 512 : mem_bound_mb);
        return to_json(rows);
    });
}

sg_status sg_quadruples(const sg_alpha* alpha, int64_t M, int64_t te_num, int64_t te_den, unsigned precision_cap,
                        char** out) {
    return wrap(out, [&] {
        if (te_den < 1) fail(Errc::validation, "bad exponent");
        const Alpha& a = deref(alpha);
        QuadrupleWindow w;
        w.M = M;
        w.alpha = a;
        // T = floor(M^(num/den)) = floor((M^num)^(1/den))
        if (M < 2) fail(Errc::validation, "M must be >= 2");
        w.T = iroot(pow_ui(Int(M), static_cast<unsigned long>(te_num)), static_cast<unsigned long>(te_den));
        (void)precision_cap;
        return to_json(quadruple_count(w), w);
    });
}

sg_status sg_report(const sg_alpha* alpha, const int64_t* Ns, size_t n_count, int64_t trials, uint64_t seed,
                    unsigned precision_cap, char** out) {
    return wrap(out, [&] {
        if (trials < 1) fail(Errc::validation, "trials must be >= 1");
        const Alpha& a = deref(alpha);
        auto list = size_list(Ns, n_count);
        auto rows = billiard_vs_poisson_report(a, list, static_cast<std::size_t>(trials), seed, precision_cap);
        return report_json(a, rows);
    });
}

sg_status sg_selftest(char** out) {
    return wrap(out, [&] { return to_json(selftest_identities()); });
}

}  // extern "C"
