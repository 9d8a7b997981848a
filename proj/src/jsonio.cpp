// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include "specgap/jsonio.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>

namespace specgap {

Json json_int(const Int& v) { return v.get_str(); }

Json json_surd(const QuadSurd& s, int sig_digits) {
    Json j;
    j["decimal"] = s.decimal(sig_digits);
    j["a"] = json_int(s.a());
    j["b"] = json_int(s.b());
    j["c"] = json_int(s.c());
    j["d"] = json_int(s.d());
    return j;
}

Json json_quality(const Quality& q, int sig_digits) {
    Json j;
    j["decimal"] = q.decimal(sig_digits);
    if (q.exact) {
        j["exact"] = json_surd(q.value, sig_digits);
    } else {
        j["interval"] = {{"lo", to_string(q.lo)}, {"hi", to_string(q.hi)}};
    }
    return j;
}

Json to_json(const Alpha& alpha) {
    Json j;
    j["grammar"] = alpha.grammar();
    j["path"] = alpha.is_exact() ? "exact" : "literal";
    j["decimal"] = alpha.decimal(30);
    if (alpha.is_exact()) j["surd"] = json_surd(alpha.surd());
    if (!alpha.is_exact()) j["radius"] = to_string(alpha.radius());
    return j;
}

Json to_json(const CFExpansion& cf) {
    Json j;
    j["a0"] = json_int(cf.a0);
    Json qs = Json::array();
    for (const Int& q : cf.quotients) qs.push_back(json_int(q));
    j["partial_quotients"] = std::move(qs);
    j["terminated"] = cf.terminated;
    if (cf.period) {
        j["period"] = {{"start", cf.period->first}, {"length", cf.period->second}};
    }
    return j;
}

Json to_json(const Approximant& ap) {
    Json j;
    j["p"] = json_int(ap.p);
    j["q"] = json_int(ap.q);
    j["quality"] = json_quality(ap.quality);
    j["scaled_quality"] = json_quality(ap.scaled_quality);
    // Measured q (log q)^(1+eps) |q alpha - p| with eps = 1/10; diagnostic
    // only, the almost-all refinement has no finite check.
    if (ap.q >= 2) {
        double lq = log10_of(ap.q) * 2.302585092994046;
        double diag = ap.scaled_quality.approx() * std::pow(lq, 1.1);
        if (std::isfinite(diag)) j["log_refined_quality"] = diag;
    }
    return j;
}

Json to_json(const DivisorWitness& w) {
    Json j;
    j["n"] = json_int(w.n);
    j["d"] = json_int(w.d);
    j["cofactor"] = json_int(divexact(w.n, w.d));
    j["balance"] = w.balance_decimal();
    return j;
}

Json to_json(const PellSolution& s) {
    Json j;
    j["D"] = json_int(s.D);
    j["x"] = json_int(s.x);
    j["y"] = json_int(s.y);
    j["digits_x"] = std::to_string(s.x.get_str().size());
    return j;
}

Json to_json(const PrimeSelection& sel) {
    Json j;
    Json ps = Json::array();
    for (auto p : sel.primes) ps.push_back(std::to_string(p));
    j["primes"] = std::move(ps);
    j["epsilon"] = to_string(sel.epsilon);
    j["density"] = to_string(sel.density);
    j["density_decimal"] = QuadSurd(sel.density).decimal(12);
    return j;
}

Json spectrum_json(const Alpha& alpha, std::span<const Eigenvalue> levels) {
    Json j;
    j["alpha"] = to_json(alpha);
    Json rows = Json::array();
    std::int64_t i = 1;
    for (const Eigenvalue& e : levels) {
        Json r;
        r["i"] = std::to_string(i++);
        r["m"] = std::to_string(e.m);
        r["n"] = std::to_string(e.n);
        r["level"] = e.level_decimal(alpha);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const Alpha& alpha, const GapRecord& g) {
    Json j;
    j["N"] = std::to_string(g.N);
    j["k"] = std::to_string(g.k);
    j["index"] = std::to_string(g.index);
    j["m"] = std::to_string(g.lower.m);
    j["n"] = std::to_string(g.lower.n);
    j["m2"] = std::to_string(g.upper.m);
    j["n2"] = std::to_string(g.upper.n);
    j["lower_level"] = g.lower.level_decimal(alpha);
    j["upper_level"] = g.upper.level_decimal(alpha);
    j["consecutive"] = g.consecutive;
    if (alpha.is_exact()) {
        j["gap_decimal"] = g.gap.decimal(30);
        j["scaled_gap"] = g.scaled_gap.decimal(30);
        j["gap"] = json_surd(g.gap);
    }
    return j;
}

Json sweep_json(const Alpha& alpha, std::span<const SweepRow> rows) {
    Json j;
    j["alpha"] = to_json(alpha);
    Json rr = Json::array();
    for (const SweepRow& row : rows) {
        Json r = to_json(alpha, row.record);
        r["N"] = std::to_string(row.N);
        rr.push_back(std::move(r));
    }
    j["rows"] = std::move(rr);
    return j;
}

Json to_json(const GapCertificate& c) {
    Json j;
    j["provenance"] = provenance_name(c.provenance);
    j["m"] = json_int(c.m);
    j["m_prime"] = json_int(c.m_prime);
    j["n"] = json_int(c.n);
    j["n_prime"] = json_int(c.n_prime);
    j["q"] = json_int(c.q);
    j["p"] = json_int(c.p);
    j["alpha"] = json_surd(c.alpha);
    j["gap"] = json_surd(c.gap);
    j["level_bound"] = json_surd(c.level_bound);
    auto witness = [](const CertWitness& w) {
        Json wj;
        wj["divisor"] = json_int(w.divisor);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10f", w.exponent);
        wj["exponent"] = buf;
        std::snprintf(buf, sizeof buf, "%.10f", w.balance);
        wj["balance"] = buf;
        return wj;
    };
    j["witness_q"] = witness(c.wq);
    j["witness_p"] = witness(c.wp);
    j["desquare_factor"] = std::to_string(c.desquare_factor);
    j["evenly_divisible"] = c.evenly_divisible;
    j["revalidated"] = c.revalidated;
    return j;
}

Json to_json(const GeneralConstruction& g) {
    Json j;
    Json certs = Json::array();
    for (const GapCertificate& c : g.certificates) certs.push_back(to_json(c));
    j["certificates"] = std::move(certs);
    Json idx = Json::array();
    for (const IndexSolution& s : g.indices) {
        Json r;
        r["L"] = json_int(s.L);
        r["L_prime"] = json_int(s.L_prime);
        r["mu"] = json_int(s.mu);
        r["mu_prime"] = json_int(s.mu_prime);
        r["m_idx"] = json_int(s.m_idx);
        r["mp_idx"] = json_int(s.mp_idx);
        r["b_off"] = json_int(s.b_off);
        idx.push_back(std::move(r));
    }
    j["index_solutions"] = std::move(idx);
    if (!g.sel_one_mod4.primes.empty()) {
        j["selection_1mod4"] = to_json(g.sel_one_mod4);
        j["selection_3mod4"] = to_json(g.sel_three_mod4);
    }
    return j;
}

Json to_json(const PoissonSummary& s, const PoissonExperiment& exp) {
    Json j;
    j["N"] = std::to_string(exp.N);
    j["trials"] = std::to_string(exp.trials);
    j["k"] = std::to_string(exp.k);
    j["seed"] = std::to_string(exp.seed);
    j["rng"] = "splitmix64-counter";
    j["mean"] = s.mean;
    j["quantiles"] = {{"p05", s.quantiles[0]},
                      {"p25", s.quantiles[1]},
                      {"p50", s.quantiles[2]},
                      {"p75", s.quantiles[3]},
                      {"p95", s.quantiles[4]}};
    j["ks_exponential"] = s.ks_exponential;
    j["samples"] = s.samples;
    return j;
}

Json to_json(std::span<const FordRow> rows) {
    Json j;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", ford_exponent());
    j["ford_c"] = buf;
    Json rr = Json::array();
    for (const FordRow& r : rows) {
        Json row;
        row["X"] = std::to_string(r.X);
        row["distinct"] = std::to_string(r.distinct);
        row["ratio"] = r.ratio;
        row["reference"] = r.reference;
        rr.push_back(std::move(row));
    }
    j["rows"] = std::move(rr);
    return j;
}

Json to_json(const QuadrupleResult& r, const QuadrupleWindow& w) {
    Json j;
    j["M"] = std::to_string(w.M);
    j["T"] = json_int(w.T);
    j["alpha"] = to_json(w.alpha);
    j["count"] = json_int(r.count);
    Json ws = Json::array();
    for (const auto& q : r.witnesses)
        ws.push_back({std::to_string(q[0]), std::to_string(q[1]), std::to_string(q[2]), std::to_string(q[3])});
    j["witnesses"] = std::move(ws);
    return j;
}

Json report_json(const Alpha& alpha, std::span<const ReportRow> rows) {
    Json j;
    j["alpha"] = to_json(alpha);
    Json rr = Json::array();
    for (const ReportRow& r : rows) {
        Json row;
        row["N"] = std::to_string(r.N);
        row["billiard_min"] = to_json(alpha, r.billiard_min);
        row["billiard_min2"] = to_json(alpha, r.billiard_min2);
        row["poisson_quantiles"] = {{"p05", r.poisson_quantiles[0]},
                                    {"p25", r.poisson_quantiles[1]},
                                    {"p50", r.poisson_quantiles[2]},
                                    {"p75", r.poisson_quantiles[3]},
                                    {"p95", r.poisson_quantiles[4]}};
        row["poisson_median_k2"] = r.poisson_median_k2;
        row["log_threshold_event"] = r.log_threshold_event;
        row["second_gap_floor_event"] = r.second_gap_floor_event;
        row["propagated_rank"] = std::to_string(r.propagated_rank);
        row["propagation_bound_holds"] = r.propagation_bound_holds;
        rr.push_back(std::move(row));
    }
    j["rows"] = std::move(rr);
    return j;
}

Json to_json(std::span<const SelftestSuite> suites) {
    Json j;
    Json rr = Json::array();
    std::uint64_t failures = 0;
    for (const SelftestSuite& s : suites) {
        Json row;
        row["suite"] = s.name;
        row["cases"] = std::to_string(s.cases);
        row["failures"] = std::to_string(s.failures);
        failures += s.failures;
        rr.push_back(std::move(row));
    }
    j["suites"] = std::move(rr);
    j["total_failures"] = std::to_string(failures);
    j["ok"] = failures == 0;
    return j;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string scalar_to_csv(const Json& v) {
    if (v.is_string()) return csv_escape(v.get<std::string>());
    return v.dump();
}

}  // namespace

std::string json_to_csv(const Json& data) {
    // Find the primary table: the first array-of-objects value.
    const Json* table = nullptr;
    if (data.is_array())
        table = &data;
    else if (data.is_object()) {
        for (const auto& [key, value] : data.items()) {
            if (value.is_array() && !value.empty() && value.front().is_object()) {
                table = &value;
                break;
            }
        }
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
                if (row.contains(cols[i])) out += scalar_to_csv(row.at(cols[i]));
            }
            out += "\n";
        }
        return out;
    }
    // Fallback: key,value lines of the top-level scalars.
    out = "key,value\n";
    if (data.is_object()) {
        for (const auto& [key, value] : data.items())
            if (value.is_primitive()) out += csv_escape(key) + "," + scalar_to_csv(value) + "\n";
    } else {
        out += "value," + scalar_to_csv(data) + "\n";
    }
    return out;
}

std::string payload_checksum(const std::string& payload) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016" PRIx64, h);
    return buf;
}

}  // namespace specgap
