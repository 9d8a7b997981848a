// Copyright 2026 the specgap developers
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "specgap/spectrum.hpp"

using namespace specgap;

namespace {

// Independent oracle: double loop over a safe box, exact comparison sort.
std::vector<Eigenvalue> brute_spectrum(const Alpha& alpha, std::size_t N) {
    LevelOrder ord(alpha, 4096);
    // Box: level(m, 1) <= level(bound, 1) grows in m, so take the first N of
    // column heads as a safe m range; same for n.
    std::vector<Eigenvalue> all;
    std::int64_t box = static_cast<std::int64_t>(4 * std::sqrt(static_cast<double>(N)) + 32);
    for (std::int64_t m = 1; m <= box; ++m)
        for (std::int64_t n = 1; n <= box; ++n) all.push_back({m, n});
    std::sort(all.begin(), all.end(), [&](const Eigenvalue& x, const Eigenvalue& y) { return ord.cmp(x, y) < 0; });
    all.resize(N);
    return all;
}

}  // namespace

TEST_CASE("first three levels for sqrt(2)") {
    Alpha a = Alpha::parse("sqrt:2");
    auto s = enumerate_spectrum(a, 3);
    REQUIRE(s.size() == 3);
    CHECK(s[0].m == 1);
    CHECK(s[0].n == 1);
    CHECK(s[1].m == 1);
    CHECK(s[1].n == 2);
    CHECK(s[2].m == 2);
    CHECK(s[2].n == 1);
    CHECK(s[0].level_decimal(a, 10) == "2.414213562");
    CHECK(s[1].level_decimal(a, 10) == "5.414213562");
    CHECK(s[2].level_decimal(a, 10) == "6.656854249");
}

TEST_CASE("single smallest eigenvalue is (1,1)") {
    for (const char* g : {"sqrt:2", "sqrt:3", "golden2", "sqrt:7/5"}) {
        Alpha a = Alpha::parse(g);
        auto s = enumerate_spectrum(a, 1);
        REQUIRE(s.size() == 1);
        CHECK(s[0].m == 1);
        CHECK(s[0].n == 1);
    }
}

TEST_CASE("enumeration is strictly increasing and matches the brute force") {
    for (const char* g : {"sqrt:2", "sqrt:3", "golden2"}) {
        Alpha a = Alpha::parse(g);
        auto fast = enumerate_spectrum(a, 1500);
        auto slow = brute_spectrum(a, 1500);
        LevelOrder ord(a);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) {
            CHECK(fast[i].m == slow[i].m);
            CHECK(fast[i].n == slow[i].n);
            if (i > 0) CHECK(ord.cmp(fast[i - 1], fast[i]) < 0);
        }
    }
}

TEST_CASE("rational alpha is rejected") {
    CHECK_THROWS_AS(enumerate_spectrum(Alpha::parse("sqrt:4"), 5), Error);
    try {
        enumerate_spectrum(Alpha::parse("sqrt:9/4"), 5);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::rational_alpha);
    }
}

TEST_CASE("literal alpha enumerates while certifiable") {
    Alpha lit = Alpha::parse("dec:1.4142135623730950488016887242097");
    auto s = enumerate_spectrum(lit, 200);
    Alpha exact = Alpha::parse("sqrt:2");
    auto ref = enumerate_spectrum(exact, 200);
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].m == ref[i].m);
        CHECK(s[i].n == ref[i].n);
    }
    // Far too few digits cannot order deep levels.
    Alpha coarse = Alpha::parse("dec:1.41");
    CHECK_THROWS_AS(enumerate_spectrum(coarse, 5000), Error);
}

TEST_CASE("counting works on the literal path while certifiable") {
    Alpha lit = Alpha::parse("dec:1.414213562373095");
    Alpha exact = Alpha::parse("sqrt:2");
    CHECK(count_up_to(lit, Rat(500)) == count_up_to(exact, Rat(500)));
    auto a = enumerate_up_to(lit, Rat(200));
    auto b = enumerate_up_to(exact, Rat(200));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK((a[i].m == b[i].m && a[i].n == b[i].n));
}

TEST_CASE("weyl count at modest scale") {
    // #levels <= X within 1% of pi X / (4 sqrt(alpha)) already at X = 20000.
    Alpha a = Alpha::parse("sqrt:2");
    Int got = count_up_to(a, Rat(20'000));
    double expect = 3.14159265358979 * 20'000 / (4.0 * std::pow(2.0, 0.25));
    CHECK(std::abs(got.get_d() - expect) / expect < 0.01);
    // And the count agrees exactly with the enumeration.
    auto levels = enumerate_up_to(a, Rat(20'000));
    CHECK(Int(static_cast<long>(levels.size())) == got);
}

TEST_CASE("count_up_to_level gives the exact rank") {
    Alpha a = Alpha::parse("sqrt:2");
    auto s = enumerate_spectrum(a, 120);
    CHECK(count_up_to_level(a, s[0]) == 1);
    CHECK(count_up_to_level(a, s[59]) == 60);
    CHECK(count_up_to_level(a, s[119]) == 120);
}

TEST_CASE("min gap for sqrt(2) at N = 3") {
    Alpha a = Alpha::parse("sqrt:2");
    GapRecord g = min_gap(a, 3, 1);
    // Gaps are 3 and 3 sqrt2 - 3 ~ 1.2426; the smaller is the surd one.
    QuadSurd expect = QuadSurd::sqrt_of(Rat(2)) * QuadSurd(Int(3)) - QuadSurd(Int(3));
    CHECK(g.gap == expect);
    CHECK(g.index == 2);
    GapRecord g2 = min_gap(a, 3, 2);
    CHECK(g2.gap == QuadSurd(Int(3)));
    CHECK_THROWS_AS(min_gap(a, 3, 3), Error);  // N = k leaves too few gaps
    CHECK_THROWS_AS(min_gap(a, 2, 2), Error);
}

TEST_CASE("min gap ranks are nondecreasing and k = 1 matches a rescan") {
    Alpha a = Alpha::parse("golden2");
    auto levels = enumerate_spectrum(a, 400);
    LevelOrder ord(a);
    GapRecord g1 = min_gap_of(a, levels, 1);
    for (std::size_t k = 2; k <= 6; ++k) {
        GapRecord gk = min_gap_of(a, levels, k);
        CHECK(ord.cmp_gap(gk.upper, gk.lower, g1.upper, g1.lower) >= 0);
    }
    // Oracle re-scan for the minimum.
    std::size_t best = 0;
    for (std::size_t i = 1; i + 1 < levels.size(); ++i)
        if (ord.cmp_gap(levels[i + 1], levels[i], levels[best + 1], levels[best]) < 0) best = i;
    CHECK(g1.index == static_cast<std::int64_t>(best + 1));
}

TEST_CASE("scaled gap sweep reuses one enumeration") {
    Alpha a = Alpha::parse("sqrt:2");
    std::vector<std::size_t> Ns{100, 316, 1000};
    auto rows = scaled_gap_sweep(a, Ns);
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 0; i < Ns.size(); ++i) {
        GapRecord direct = min_gap(a, Ns[i], 1);
        CHECK(rows[i].record.gap == direct.gap);
        CHECK(rows[i].record.scaled_gap == direct.gap * QuadSurd(Int(static_cast<long>(Ns[i]))));
    }
    std::vector<std::size_t> single{2};
    auto one = scaled_gap_sweep(a, single);
    REQUIRE(one.size() == 1);
    CHECK(one[0].record.gap == QuadSurd(Int(3)));  // gap of the first two levels
}

TEST_CASE("gap propagation quadruples exactly") {
    Alpha a = Alpha::parse("sqrt:2");
    GapRecord g = min_gap(a, 3, 2);  // the (1,1)-(1,2) gap of size 3
    GapRecord p = propagate_gap(a, g);
    CHECK(p.lower.m == 2);
    CHECK(p.lower.n == 2);
    CHECK(p.upper.m == 2);
    CHECK(p.upper.n == 4);
    CHECK(p.gap == QuadSurd(Int(12)));
    // Output levels are members of the spectrum, by exact reconstruction.
    CHECK(p.lower.level(a) == a.surd() * QuadSurd(Int(4)) + QuadSurd(Int(4)));
    // Iterating multiplies the gap by 4^j.
    GapRecord pp = propagate_gap(a, p);
    CHECK(pp.gap == QuadSurd(Int(48)));
    GapRecord ppp = propagate_gap(a, pp);
    CHECK(ppp.gap == g.gap * QuadSurd(Int(64)));
    // The returned index is the exact rank of the doubled lower level.
    auto s = enumerate_spectrum(a, 50);
    LevelOrder ord(a);
    Int rank = 0;
    for (const auto& e : s)
        if (ord.cmp(e, p.lower) <= 0) ++rank;
    CHECK(rank == p.index);
}
