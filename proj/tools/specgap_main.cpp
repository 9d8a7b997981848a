// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
//
// specgap: spectra, minimal gaps and gap certificates for the rectangular
// billiard {alpha m^2 + n^2}. Thin shell over the C API: parse flags, call
// one library entry point, wrap the JSON payload in a run manifest.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "specgap/specgap.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitFactorTimeout = 4;
constexpr int kExitInternal = 70;

int exit_code(sg_status s) {
    switch (s) {
        case SG_OK: return kExitOk;
        case SG_ERR_USAGE: return kExitUsage;
        case SG_ERR_VALIDATION:
        case SG_ERR_POOL_EXHAUSTED:
        case SG_ERR_MEMORY_BOUND: return kExitValidation;
        case SG_ERR_PRECISION: return kExitPrecision;
        case SG_ERR_FACTOR_TIMEOUT: return kExitFactorTimeout;
        case SG_ERR_DIVISIBILITY:
        case SG_ERR_INTERNAL: return kExitInternal;
    }
    return kExitInternal;
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// FNV-1a over the payload bytes; must match the library's convention.
std::string checksum(const std::string& payload) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Output {
    std::string format = "json";
    std::string command_line;
    std::string alpha;
    std::optional<std::uint64_t> seed;
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

std::string scalar(const Json& v) { return v.is_string() ? csv_escape(v.get<std::string>()) : v.dump(); }

// Lossy tabular view: first array-of-objects becomes header+rows.
std::string to_csv(const Json& data) {
    const Json* table = nullptr;
    if (data.is_array() && !data.empty() && data.front().is_object()) table = &data;
    if (!table && data.is_object())
        for (const auto& [key, value] : data.items())
            if (value.is_array() && !value.empty() && value.front().is_object()) {
                table = &value;
                break;
            }
    std::string out;
    if (table) {
        std::vector<std::string> cols;
        for (const auto& [key, value] : table->front().items())
            if (value.is_primitive()) cols.push_back(key);
        for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
        out += "\n";
        for (const Json& row : *table) {
            for (std::size_t i = 0; i < cols.size(); ++i) {
                if (i) out += ",";
                if (row.contains(cols[i]) && row.at(cols[i]).is_primitive()) out += scalar(row.at(cols[i]));
            }
            out += "\n";
        }
        return out;
    }
    out = "key,value\n";
    if (data.is_object())
        for (const auto& [key, value] : data.items())
            if (value.is_primitive()) out += csv_escape(key) + "," + scalar(value) + "\n";
    return out;
}

int emit(const Output& opts, sg_status status, char* payload) {
    if (status != SG_OK) {
        Json err;
        err["error"] = sg_last_error();
        err["status"] = static_cast<int>(status);
        std::cerr << err.dump() << "\n";
        sg_string_free(payload);
        return exit_code(status);
    }
    std::string body(payload);
    sg_string_free(payload);
    Json manifest;
    manifest["command"] = opts.command_line;
    if (!opts.alpha.empty()) manifest["alpha"] = opts.alpha;
    if (opts.seed) manifest["seed"] = std::to_string(*opts.seed);
    manifest["version"] = sg_version();
    manifest["timestamp"] = iso_timestamp();
    manifest["format"] = opts.format;

    if (opts.format == "csv") {
        std::string csv = to_csv(Json::parse(body));
        manifest["payload_checksum"] = checksum(csv);
        std::cout << csv;
        std::cerr << Json{{"manifest", manifest}}.dump() << "\n";
        return kExitOk;
    }
    manifest["payload_checksum"] = checksum(body);
    Json out;
    out["manifest"] = std::move(manifest);
    out["data"] = Json::parse(body);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

struct AlphaHandle {
    sg_alpha* ptr = nullptr;
    ~AlphaHandle() { sg_alpha_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "specgap: minimal gaps in the spectrum {alpha m^2 + n^2} of a rectangular billiard.\n"
        "Alpha grammar: sqrt:p[/q] | surd:a,b,c,d | dec:<decimal> | golden2\n"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.footer(
        "Exit codes: 0 ok, 1 usage, 2 validation (incl. rational alpha, pool/memory bounds),\n"
        "3 precision exhausted (literal alpha out of certified digits), 4 factorization timeout,\n"
        "70 internal (including an exact-divisibility violation, which would falsify the\n"
        "gcd identities and is treated as a bug signal).\n"
        "JSON is canonical; --format csv is a lossy 30-digit convenience view (manifest on stderr).");

    std::string format = "json";
    unsigned precision_cap = 4096;
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--precision-cap", precision_cap, "bits cap for certified refinement")->capture_default_str();

    std::string alpha_text;
    std::int64_t N = 0, k = 1, depth = 32, count = 10, D = 2, M = 50, trials = 0, P_x = 1, P_a = 0;
    int spec_b = 0, spec_sign = 1;
    std::string Q = "10", n_text = "12", cheb_kind = "T2", cheb_x = "3", eps = "1/5", r_text = "1";
    std::string policy = "odd", coprime_to, T_exp = "3";
    std::uint64_t seed = 0, pool_bound = 1'000'000, mem_bound = 512;
    std::vector<std::int64_t> N_list, P_list;
    std::vector<std::uint64_t> primes, X_list;
    bool audit = false;
    std::string X_cutoff;

    auto* c_spectrum = app.add_subcommand("spectrum", "first N eigenvalues in increasing order");
    c_spectrum->add_option("--alpha", alpha_text)->required();
    c_spectrum->add_option("--N", N, "how many eigenvalues");
    c_spectrum->add_option("--X", X_cutoff, "alternative: all levels <= X");

    auto* c_mingap = app.add_subcommand("mingap", "k-th smallest consecutive gap among the first N levels");
    c_mingap->add_option("--alpha", alpha_text)->required();
    c_mingap->add_option("--N", N)->required();
    c_mingap->add_option("--k", k)->capture_default_str();

    auto* c_sweep = app.add_subcommand("sweep", "table of N, delta_min(N), N*delta_min(N)");
    c_sweep->add_option("--alpha", alpha_text)->required();
    c_sweep->add_option("--N-list", N_list, "increasing N values")->required()->delimiter(',');

    auto* c_cf = app.add_subcommand("cf", "continued fraction expansion");
    c_cf->add_option("--alpha", alpha_text)->required();
    c_cf->add_option("--depth", depth)->capture_default_str();

    auto* c_conv = app.add_subcommand("convergents", "continued fraction convergents with exact quality");
    c_conv->add_option("--alpha", alpha_text)->required();
    c_conv->add_option("--count", count)->capture_default_str();

    auto* c_dir = app.add_subcommand("dirichlet", "Dirichlet approximation with q <= Q");
    c_dir->add_option("--alpha", alpha_text)->required();
    c_dir->add_option("--Q", Q)->capture_default_str();

    auto* c_div = app.add_subcommand("divisor", "most balanced divisor of n");
    c_div->add_option("--n", n_text)->required();

    auto* c_cheb = app.add_subcommand("cheb", "integer Chebyshev specializations");
    c_cheb->add_option("--kind", cheb_kind, "T2 (= 2T_n(x/2)) or U (= U_n(x/2))")->capture_default_str();
    c_cheb->add_option("--n", N)->required();
    c_cheb->add_option("--x", cheb_x)->capture_default_str();

    auto* c_pell = app.add_subcommand("pell", "fundamental and n-th Pell solutions");
    c_pell->add_option("--D", D)->required();
    c_pell->add_option("--n", k, "sequence index (1 = fundamental)")->capture_default_str();

    auto* c_psel = app.add_subcommand("primeselect", "greedy prime selection into the density window");
    c_psel->add_option("--epsilon", eps)->capture_default_str();
    c_psel->add_option("--policy", policy, "odd | 1mod4 | 3mod4")->capture_default_str();
    c_psel->add_option("--coprime-to", coprime_to);
    c_psel->add_option("--pool-bound", pool_bound)->capture_default_str();

    auto* c_con = app.add_subcommand("construct", "gap certificates");
    c_con->require_subcommand(1);
    auto* c_con_dir = c_con->add_subcommand("dirichlet", "universal N^(-1/2) route");
    c_con_dir->add_option("--alpha", alpha_text)->required();
    c_con_dir->add_option("--N", N)->required();
    auto* c_con_sqrtd = c_con->add_subcommand("sqrtD", "sqrt(4D) pipeline over Pell/Chebyshev sequences");
    c_con_sqrtd->add_option("--D", D)->required();
    c_con_sqrtd->add_option("--primes", primes, "odd primes, e.g. 3,5")->required()->delimiter(',');
    c_con_sqrtd->add_option("--P", P_list, "odd cofactors coprime to the primes")->required()->delimiter(',');
    c_con_sqrtd->add_flag("--audit", audit, "verify the lcm inclusion-exclusion identity");
    auto* c_con_gen = c_con->add_subcommand("general", "general quadratic family alpha(x;a,b,sign,r)");
    c_con_gen->add_option("--x", P_x)->required();
    c_con_gen->add_option("--a", P_a)->required();
    c_con_gen->add_option("--b", spec_b)->check(CLI::IsMember({0, 1}))->capture_default_str();
    c_con_gen->add_option("--sign", spec_sign)->check(CLI::IsMember({-1, 1}))->capture_default_str();
    c_con_gen->add_option("--r", r_text)->capture_default_str();
    c_con_gen->add_option("--eps", eps)->capture_default_str();
    c_con_gen->add_option("--count", count)->capture_default_str();
    auto* c_con_strong = c_con->add_subcommand("strong", "exact-1/N route (b = 0, even a)");
    c_con_strong->add_option("--x", P_x)->required();
    c_con_strong->add_option("--a", P_a)->required();
    c_con_strong->add_option("--sign", spec_sign)->capture_default_str();
    c_con_strong->add_option("--r", r_text)->capture_default_str();
    c_con_strong->add_option("--count", count)->capture_default_str();

    auto* c_poisson = app.add_subcommand("poisson", "scaled k-th minimal gap of uniform points");
    c_poisson->add_option("--N", N)->required();
    c_poisson->add_option("--trials", trials)->required();
    c_poisson->add_option("--k", k)->capture_default_str();
    c_poisson->add_option("--seed", seed)->required();

    double side_constant = 1.0;
    auto* c_mult = app.add_subcommand("multtable", "distinct products in the X-by-X multiplication table");
    c_mult->add_option("--X", X_list, "side lengths")->delimiter(',');
    c_mult->add_option("--N", N, "alternative: side X = ceil(C sqrt(N))");
    c_mult->add_option("--C", side_constant, "window constant for the --N form")->capture_default_str();
    c_mult->add_option("--mem-bound-mb", mem_bound)->capture_default_str();

    auto* c_quad = app.add_subcommand("quadruples", "count |n1 n2/(n3 n4) - alpha| <= 1/T in [M, 2M]");
    c_quad->add_option("--alpha", alpha_text)->required();
    c_quad->add_option("--M", M)->capture_default_str();
    c_quad->add_option("--T-exp", T_exp, "exponent e in T = floor(M^e), rational in [3, 4]")->capture_default_str();

    auto* c_report = app.add_subcommand("report", "billiard minimal gaps against the Poisson baseline");
    c_report->add_option("--alpha", alpha_text)->required();
    c_report->add_option("--N-list", N_list)->required()->delimiter(',');
    c_report->add_option("--trials", trials)->required();
    c_report->add_option("--seed", seed)->required();

    auto* c_self = app.add_subcommand("selftest", "exhaustive identity suites; nonzero exit on any failure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    Output opts;
    opts.format = format;
    opts.alpha = alpha_text;
    for (int i = 0; i < argc; ++i) opts.command_line += std::string(i ? " " : "") + argv[i];
    if (c_poisson->parsed() || c_report->parsed()) opts.seed = seed;

    AlphaHandle alpha;
    if (!alpha_text.empty()) {
        sg_status s = sg_alpha_parse(alpha_text.c_str(), &alpha.ptr);
        if (s != SG_OK) return emit(opts, s, nullptr);
    }

    char* payload = nullptr;
    sg_status status = SG_ERR_USAGE;
    if (c_spectrum->parsed()) {
        status = sg_spectrum(alpha.ptr, N, X_cutoff.empty() ? nullptr : X_cutoff.c_str(), precision_cap, &payload);
    } else if (c_mingap->parsed()) {
        status = sg_min_gap(alpha.ptr, N, k, precision_cap, &payload);
    } else if (c_sweep->parsed()) {
        status = sg_sweep(alpha.ptr, N_list.data(), N_list.size(), precision_cap, &payload);
    } else if (c_cf->parsed()) {
        status = sg_continued_fraction(alpha.ptr, depth, &payload);
    } else if (c_conv->parsed()) {
        status = sg_convergents(alpha.ptr, count, &payload);
    } else if (c_dir->parsed()) {
        status = sg_dirichlet(alpha.ptr, Q.c_str(), &payload);
    } else if (c_div->parsed()) {
        status = sg_best_divisor(n_text.c_str(), &payload);
    } else if (c_cheb->parsed()) {
        status = sg_cheb(cheb_kind.c_str(), N, cheb_x.c_str(), &payload);
    } else if (c_pell->parsed()) {
        status = sg_pell(D, k, &payload);
    } else if (c_psel->parsed()) {
        status = sg_prime_select(eps.c_str(), policy.c_str(), coprime_to.empty() ? nullptr : coprime_to.c_str(),
                                 pool_bound, &payload);
    } else if (c_con_dir->parsed()) {
        status = sg_construct_dirichlet(alpha.ptr, N, &payload);
    } else if (c_con_sqrtd->parsed()) {
        status = sg_construct_sqrtd(D, primes.data(), primes.size(), P_list.data(), P_list.size(), audit ? 1 : 0,
                                    &payload);
    } else if (c_con_gen->parsed()) {
        status = sg_construct_general(P_x, P_a, spec_b, spec_sign, r_text.c_str(), eps.c_str(), count, &payload);
    } else if (c_con_strong->parsed()) {
        status = sg_construct_strong(P_x, P_a, spec_sign, r_text.c_str(), count, &payload);
    } else if (c_poisson->parsed()) {
        status = sg_poisson(N, trials, k, seed, &payload);
    } else if (c_mult->parsed()) {
        if (N > 0)
            X_list.push_back(static_cast<std::uint64_t>(std::ceil(side_constant * std::sqrt(static_cast<double>(N)))));
        std::sort(X_list.begin(), X_list.end());
        X_list.erase(std::unique(X_list.begin(), X_list.end()), X_list.end());
        status = sg_mult_table(X_list.data(), X_list.size(), mem_bound, &payload);
    } else if (c_quad->parsed()) {
        auto slash = T_exp.find('/');
        std::int64_t te_num = 3, te_den = 1;
        try {
            if (slash == std::string::npos) {
                auto dot = T_exp.find('.');
                if (dot == std::string::npos) {
                    te_num = std::stoll(T_exp);
                    te_den = 1;
                } else {
                    std::string frac = T_exp.substr(dot + 1);
                    te_den = 1;
                    for (std::size_t i = 0; i < frac.size(); ++i) te_den *= 10;
                    te_num = std::stoll(T_exp.substr(0, dot)) * te_den + std::stoll(frac);
                }
            } else {
                te_num = std::stoll(T_exp.substr(0, slash));
                te_den = std::stoll(T_exp.substr(slash + 1));
            }
        } catch (const std::exception&) {
            std::cerr << R"({"error":"bad --T-exp"})" << "\n";
            return kExitUsage;
        }
        status = sg_quadruples(alpha.ptr, M, te_num, te_den, precision_cap, &payload);
    } else if (c_report->parsed()) {
        status = sg_report(alpha.ptr, N_list.data(), N_list.size(), trials, seed, precision_cap, &payload);
    } else if (c_self->parsed()) {
        status = sg_selftest(&payload);
        if (status == SG_OK) {
            Json j = Json::parse(payload);
            int rc = emit(opts, status, payload);
            if (rc != kExitOk) return rc;
            return j["ok"].get<bool>() ? kExitOk : kExitInternal;
        }
    }
    return emit(opts, status, payload);
}
