// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the shared-library surface exactly as an external consumer would:
// C header only, JSON out, error codes for every failure path.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include "specgap/specgap.h"

using Json = nlohmann::json;

namespace {

struct Alpha {
    sg_alpha* ptr = nullptr;
    explicit Alpha(const char* text) { REQUIRE(sg_alpha_parse(text, &ptr) == SG_OK); }
    ~Alpha() { sg_alpha_free(ptr); }
};

Json take(char* payload) {
    REQUIRE(payload != nullptr);
    Json j = Json::parse(payload);
    sg_string_free(payload);
    return j;
}

}  // namespace

TEST_CASE("version and alpha lifecycle") {
    CHECK(std::string(sg_version()) == "0.1.0");
    Alpha a("sqrt:2");
    char* out = nullptr;
    REQUIRE(sg_alpha_describe(a.ptr, &out) == SG_OK);
    Json j = take(out);
    CHECK(j["path"] == "exact");
    CHECK(j["decimal"].get<std::string>().substr(0, 6) == "1.4142");
}

TEST_CASE("alpha parse failures set the error message") {
    sg_alpha* p = nullptr;
    CHECK(sg_alpha_parse("nonsense", &p) == SG_ERR_VALIDATION);
    CHECK(p == nullptr);
    CHECK(std::string(sg_last_error()).find("grammar") != std::string::npos);
    CHECK(sg_alpha_parse(nullptr, &p) == SG_ERR_USAGE);
}

TEST_CASE("spectrum and mingap through the C surface") {
    Alpha a("sqrt:2");
    char* out = nullptr;
    REQUIRE(sg_spectrum(a.ptr, 3, nullptr, 4096, &out) == SG_OK);
    Json s = take(out);
    REQUIRE(s["rows"].size() == 3);
    CHECK(s["rows"][2]["m"] == "2");
    CHECK(s["rows"][2]["n"] == "1");

    REQUIRE(sg_min_gap(a.ptr, 1000, 1, 4096, &out) == SG_OK);
    Json g = take(out);
    CHECK(g["m"] == "1");
    CHECK(g["n"] == "12");
    CHECK(g["scaled_gap"].get<std::string>().substr(0, 7) == "7.14267");
}

TEST_CASE("rational alpha is a validation error") {
    Alpha a("sqrt:4");
    char* out = nullptr;
    CHECK(sg_spectrum(a.ptr, 3, nullptr, 4096, &out) == SG_ERR_VALIDATION);
    CHECK(out == nullptr);
    CHECK(std::string(sg_last_error()).find("RationalAlpha") != std::string::npos);
}

TEST_CASE("literal alpha precision exhaustion surfaces as SG_ERR_PRECISION") {
    Alpha a("dec:1.41");
    char* out = nullptr;
    CHECK(sg_spectrum(a.ptr, 5000, nullptr, 4096, &out) == SG_ERR_PRECISION);
}

TEST_CASE("continued fraction, convergents, dirichlet, divisor") {
    Alpha a("sqrt:2");
    char* out = nullptr;
    REQUIRE(sg_continued_fraction(a.ptr, 5, &out) == SG_OK);
    Json cf = take(out);
    CHECK(cf["a0"] == "1");
    CHECK(cf["partial_quotients"][0] == "2");
    CHECK(cf["period"]["start"] == 1);
    CHECK(cf["period"]["length"] == 1);

    REQUIRE(sg_convergents(a.ptr, 4, &out) == SG_OK);
    Json cv = take(out);
    CHECK(cv["rows"][3]["p"] == "17");
    CHECK(cv["rows"][3]["q"] == "12");

    REQUIRE(sg_dirichlet(a.ptr, "10", &out) == SG_OK);
    Json d = take(out);
    CHECK(d["q"] == "5");
    CHECK(d["p"] == "7");

    REQUIRE(sg_best_divisor("12", &out) == SG_OK);
    Json dv = take(out);
    CHECK(dv["d"] == "3");
}

TEST_CASE("cheb and pell endpoints") {
    char* out = nullptr;
    REQUIRE(sg_cheb("T2", 5, "3", &out) == SG_OK);
    CHECK(take(out)["value"] == "123");
    REQUIRE(sg_cheb("U", 2, "3", &out) == SG_OK);
    CHECK(take(out)["value"] == "8");
    CHECK(sg_cheb("V", 2, "3", &out) == SG_ERR_VALIDATION);

    REQUIRE(sg_pell(2, 2, &out) == SG_OK);
    Json p = take(out);
    CHECK(p["fundamental"]["x"] == "3");
    CHECK(p["fundamental"]["y"] == "2");
    CHECK(p["solution_n"]["x"] == "17");
    CHECK(p["solution_n"]["y"] == "12");
    CHECK(sg_pell(49, 1, &out) == SG_ERR_VALIDATION);  // square D
}

TEST_CASE("prime selection endpoint") {
    char* out = nullptr;
    REQUIRE(sg_prime_select("0.0001", "odd", nullptr, 0, &out) == SG_OK);
    Json sel = take(out);
    REQUIRE(sel["primes"].size() == 4);
    CHECK(sel["primes"][3] == "257");
    CHECK(sg_prime_select("0.0001", "odd", nullptr, 7, &out) == SG_ERR_POOL_EXHAUSTED);
}

TEST_CASE("construct endpoints deliver revalidated certificates") {
    Alpha a("sqrt:2");
    char* out = nullptr;
    REQUIRE(sg_construct_dirichlet(a.ptr, 100, &out) == SG_OK);
    Json c = take(out);
    CHECK(c["revalidated"] == true);
    CHECK(c["m"] == "11");

    std::uint64_t primes[] = {3, 5};
    std::int64_t Ps[] = {7};
    REQUIRE(sg_construct_sqrtd(2, primes, 2, Ps, 1, 1, &out) == SG_OK);
    Json sq = take(out);
    REQUIRE(sq["certificates"].size() == 1);
    CHECK(sq["certificates"][0]["revalidated"] == true);
    CHECK(sq["certificates"][0]["provenance"] == "sqrtD_pipeline");

    REQUIRE(sg_construct_strong(1, 2, 1, "1", 3, &out) == SG_OK);
    Json st = take(out);
    REQUIRE(st["certificates"].size() == 3);
    CHECK(st["certificates"][0]["q"] == "3");
    CHECK(st["certificates"][0]["revalidated"] == true);

    REQUIRE(sg_construct_general(1, 1, 0, 1, "1", "1/3", 1, &out) == SG_OK);
    Json ge = take(out);
    CHECK(ge["certificates"].size() == 1);
    CHECK(ge["index_solutions"].size() == 1);
}

TEST_CASE("statistics endpoints") {
    char* out = nullptr;
    REQUIRE(sg_poisson(100, 16, 1, 99, &out) == SG_OK);
    Json p = take(out);
    CHECK(p["samples"].size() == 16);
    CHECK(p["rng"] == "splitmix64-counter");

    std::uint64_t Xs[] = {10, 100};
    REQUIRE(sg_mult_table(Xs, 2, 64, &out) == SG_OK);
    Json m = take(out);
    CHECK(m["rows"][0]["distinct"] == "42");  // distinct products up to 10x10
    CHECK(m["ford_c"] == "0.086071");

    Alpha a("sqrt:2");
    REQUIRE(sg_quadruples(a.ptr, 12, 3, 1, 4096, &out) == SG_OK);
    Json q = take(out);
    CHECK(q["T"] == "1728");
    CHECK(q["count"].is_string());  // exact integers are decimal strings

    std::int64_t Ns[] = {50};
    REQUIRE(sg_report(a.ptr, Ns, 1, 8, 7, 4096, &out) == SG_OK);
    Json r = take(out);
    CHECK(r["rows"][0]["propagation_bound_holds"] == true);
}

TEST_CASE("selftest endpoint") {
    char* out = nullptr;
    REQUIRE(sg_selftest(&out) == SG_OK);
    Json j = take(out);
    CHECK(j["ok"] == true);
    CHECK(j["total_failures"] == "0");
}
