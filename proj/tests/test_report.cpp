#include "ssp/errors.hpp"
#include "ssp/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace ssp;

TEST_CASE("text tables") {
    std::istringstream in(
        "# label a1 a2 a3 a4 a6 conductor tamagawa torsion\n"
        "11A 0 -1 1 -10 -20 11 5 5\n"
        "17A 1 -1 1 -1 -14 17 4 4\n"
        "\n"
        "43A 0 1 1 0 0 43\n");
    auto recs = parse_table(in);
    REQUIRE(recs.size() == 3);
    CHECK(recs[0].label == "11A");
    CHECK(recs[1].a[4] == -14);
    CHECK(recs[1].tamagawa == 4);
    CHECK_FALSE(recs[2].tamagawa);
    CHECK(recs[2].line == 5);
}

TEST_CASE("malformed records name their line") {
    std::istringstream in("11A 0 -1 1 -10 -20 11\n17A 1 -1 x -1 -14 17\n");
    try {
        parse_table(in);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::istringstream short_line("11A 0 -1 1\n");
    CHECK_THROWS_AS(parse_table(short_line), Error);
}

TEST_CASE("duplicate labels: last wins with a warning") {
    std::istringstream in("11A 0 -1 1 -10 -20 11\n11A 0 -1 1 -7820 -263580 11\n");
    std::vector<std::string> warnings;
    auto recs = parse_table(in, &warnings);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].a[3] == -7820);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("duplicate") != std::string::npos);
}

TEST_CASE("JSON tables") {
    std::istringstream in(R"([{"label": "17A", "a": [1, -1, 1, -1, -14], "conductor": 17, "tamagawa": 4}])");
    auto recs = parse_table(in);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].conductor == 17);
    std::istringstream bad(R"([{"label": "17A", "a": [1, 2], "conductor": 17}])");
    CHECK_THROWS_AS(parse_table(bad), Error);
}

TEST_CASE("built-in curves are consistent") {
    for (const auto& r : builtin_curves()) {
        auto E = derive_invariants(r.a[0], r.a[1], r.a[2], r.a[3], r.a[4], r.conductor, r.label);
        CHECK_MESSAGE(E.disc != 0, r.label);
        // bad primes divide the discriminant
        for (auto [q, e] : factor(r.conductor)) CHECK_MESSAGE(vp(E.disc, q) > 0, r.label);
    }
    CHECK(builtin_curve("1909A"));
    CHECK_FALSE(builtin_curve("9999Z"));
}

TEST_CASE("configuration checks") {
    RunConfig c;
    c.label = "17A";
    c.p = 3;
    CHECK_NOTHROW(validate(c));
    c.p = 4;
    CHECK_THROWS_AS(validate(c), Error);
    c.p = 3;
    c.depth = 1;
    CHECK_THROWS_AS(validate(c), Error);
    c.depth = 3;
    c.ainvs = std::array<Int, 5>{0, 1, 1, 0, 0};
    CHECK_THROWS_AS(validate(c), Error);
    CHECK(exit_code_for(ErrorKind::PrecisionTooLow) == 4);
    CHECK(exit_code_for(ErrorKind::DepthInsufficient) == 2);
    CHECK(exit_code_for(ErrorKind::NotSupersingular) == 3);
}

TEST_CASE("pipeline on 17A at 3") {
    RunConfig c;
    c.label = "17A";
    c.p = 3;
    c.depth = 3;
    auto r = run(c);
    CHECK(r.exit_code == 0);
    CHECK(r.errors.empty());
    REQUIRE(r.verdict);
    CHECK(r.verdict->status == CpStatus::CP);
    auto j = to_json(r);
    CHECK(j["schema"] == 1);
    CHECK(j.contains("surjectivity"));
    // deterministic output
    CHECK(to_json(run(c)).dump() == j.dump());
    CHECK(to_text(r).find("CP") != std::string::npos);
}

TEST_CASE("pipeline errors set the exit code") {
    RunConfig c;
    c.label = "17A";
    c.p = 5;
    auto r = run(c);
    CHECK(r.exit_code == 3);
    CHECK(r.partial);
    CHECK_FALSE(r.errors.empty());
    c.p = 3;
    c.label = "nope";
    CHECK(run(c).exit_code == 3);
    // shallow depth: 17A(-167) does not stabilize at depth 2
    RunConfig d;
    d.label = "17A";
    d.p = 3;
    d.twist = -167;
    d.depth = 2;
    auto s = run(d);
    CHECK(s.exit_code == 2);
}

TEST_CASE("symbol cache round trip") {
    std::string path = "ssp_cache_test.json";
    std::remove(path.c_str());
    auto E = derive_invariants(std::array<i64, 5>{1, -1, 1, -1, -14}, 17, "17A");
    SymbolCache first(path);
    auto a = first.get_or_compute(E);
    CHECK_FALSE(first.hit());
    SymbolCache second(path);
    auto b = second.get_or_compute(E);
    CHECK(second.hit());
    CHECK(a->plus.scaling() == b->plus.scaling());
    for (i64 k = 1; k < 30; ++k) CHECK(a->plus.evaluate(k, 31) == b->plus.evaluate(k, 31));
    std::remove(path.c_str());
}
