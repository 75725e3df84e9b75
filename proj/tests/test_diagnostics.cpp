#include "ssp/diagnostics.hpp"
#include "ssp/errors.hpp"

#include <doctest.h>

using namespace ssp;

namespace {

const std::array<i64, 5> k17A{1, -1, 1, -1, -14};
const std::array<i64, 5> k142C{1, -1, 0, -1, -3};

struct Case {
    MazurTateFamily fam;
    IwasawaProfile prof;
    SurjectivityVerdict surj;
};

Case make(std::array<i64, 5> a, i64 N, i64 p, i64 d, int depth) {
    auto E = derive_invariants(a, N);
    auto fam = build_family(make_context(E, p, d), depth);
    auto T = d == 1 ? E : quadratic_twist(E, d, p);
    return {fam, partial_profile(fam), serre_check(T, p)};
}

const RuleOutcome& rule(const Verdict& v, const std::string& name) {
    for (const auto& r : v.rules)
        if (r.rule == name) return r;
    FAIL("missing rule " << name);
    return v.rules.front();
}

// rank-1 shaped profile with P_1 = 0, built by hand
IwasawaProfile synthetic(int lt_plus, int lt_minus) {
    IwasawaProfile prof;
    prof.p = 3;
    prof.ap = 0;
    prof.levels = {{0, true, 0, 0}, {1, true, 0, 0}, {2, false, 0, lt_plus + 2}, {3, false, 0, lt_minus + 6}};
    prof.M = {0, 0, 2, 6};
    prof.plus = {true, 2, 0, lt_plus, Rat(lt_plus) - Rat(1, 4), ""};
    prof.minus = {true, 3, 0, lt_minus, Rat(lt_minus) - Rat(3, 4), ""};
    return prof;
}

}  // namespace

TEST_CASE("labels") {
    CHECK(std::string(cp_label(CpStatus::CP)) == "CP");
    CHECK(std::string(cp_label(CpStatus::StarCPRank)) == "*CP-rang");
    CHECK(std::string(cp_label(CpStatus::DoubleStarCP)) == "**CP");
    CHECK(std::string(cp_label(CpStatus::StarCPTam)) == "*CP-tam");
    CHECK(std::string(cp_label(CpStatus::Inconclusive)).empty());
    CHECK(std::string(cp_name(CpStatus::Inconclusive)) == "inconclusive");
}

TEST_CASE("unit special value") {
    auto c = make(k17A, 17, 3, 1, 3);
    auto v = verdict_rank0(c.prof, c.fam, 0, c.surj);
    CHECK(v.status == CpStatus::CP);
    CHECK(v.sha_exponent == 0);
    CHECK(v.decisive()->rule == "unit-special-value");
}

TEST_CASE("distinct lambda tilde with and without the Tamagawa valuation") {
    auto c = make(k17A, 17, 3, 373, 3);
    auto v = verdict_rank0(c.prof, c.fam, 0, c.surj);
    CHECK(v.status == CpStatus::CP);
    CHECK(v.sha_exponent == 2);
    CHECK(rule(v, "distinct-lambda-tilde").fired);
    CHECK_FALSE(v.proof_sketch.empty());
    auto u = verdict_rank0(c.prof, c.fam, std::nullopt, c.surj);
    CHECK(u.status == CpStatus::CP);
    CHECK_FALSE(u.sha_exponent);
    CHECK(u.sha_upper_bound == 2);
    // without surjectivity the Kato-based rule does not fire
    auto w = verdict_rank0(c.prof, c.fam, 0, SurjectivityVerdict{});
    CHECK_FALSE(rule(w, "distinct-lambda-tilde").fired);
    for (const auto& h : rule(w, "distinct-lambda-tilde").hypotheses)
        if (h.name == "rho_p surjective") CHECK_FALSE(h.holds);
}

TEST_CASE("parity adjustment of the Sha exponent") {
    auto c = make(k142C, 142, 3, 461, 3);
    auto v = verdict_rank0(c.prof, c.fam, 0, c.surj);
    CHECK(v.status == CpStatus::CP);
    CHECK(v.sha_exponent == 2);  // mu_0 = 3 is lowered to the square value
    CHECK(v.sha_parity_adjusted);
}

TEST_CASE("lambda tilde equal to two") {
    auto c = make(k142C, 142, 3, -211, 3);
    auto unknown = verdict_rank0(c.prof, c.fam, std::nullopt, c.surj);
    CHECK(unknown.status == CpStatus::StarCPTam);
    auto known = verdict_rank0(c.prof, c.fam, 1, c.surj);
    CHECK(known.status == CpStatus::CP);
    CHECK(rule(known, "lambda-tilde-two").fired);
    CHECK(known.sha_exponent == 2);
}

TEST_CASE("inconclusive rows keep the full trail") {
    auto c = make(k142C, 142, 3, 485, 3);
    auto v = diagnose(c.prof, c.fam, std::nullopt, std::nullopt, std::nullopt, std::nullopt, c.surj);
    CHECK(v.status == CpStatus::Inconclusive);
    CHECK(v.decisive() == nullptr);
    CHECK(v.rules.size() >= 4);
    CHECK(v.sha_upper_bound);
}

TEST_CASE("rank one: star without the derivative") {
    auto c = make(k17A, 17, 3, -239, 3);
    auto v = diagnose(c.prof, c.fam, std::nullopt, std::nullopt, std::nullopt, std::nullopt, c.surj);
    CHECK(v.status == CpStatus::StarCP);
    CHECK(rule(v, "mu-one-pattern").fired);
}

TEST_CASE("rank one rules on synthetic profiles") {
    SurjectivityVerdict surj;
    surj.status = SurjectivityStatus::Surjective;
    surj.reasons.push_back({"cube", 17, 4, ""});
    auto dstar = verdict_rank1(synthetic(5, 3), std::nullopt, std::nullopt, std::nullopt, surj);
    CHECK(dstar.status == CpStatus::DoubleStarCP);
    auto rank2 = verdict_rank1(synthetic(2, 4), std::nullopt, std::nullopt, std::nullopt, surj);
    CHECK(rank2.status == CpStatus::StarCPRank);
    auto one = verdict_rank1(synthetic(1, 3), std::nullopt, std::nullopt, std::nullopt, surj);
    CHECK(one.status == CpStatus::StarCP);
    auto none = verdict_rank1(synthetic(5, 7), std::nullopt, std::nullopt, std::nullopt, surj);
    CHECK(none.status == CpStatus::Inconclusive);
}

TEST_CASE("higher rank with a rank hint") {
    auto c = make(std::array<i64, 5>{0, 0, 1, -4, 2}, 1909, 3, 1, 2);
    auto hinted = diagnose(c.prof, c.fam, std::nullopt, std::nullopt, 0, 2, c.surj);
    CHECK(hinted.status == CpStatus::CP);
    auto plain = diagnose(c.prof, c.fam, std::nullopt, std::nullopt, 0, std::nullopt, c.surj);
    CHECK(plain.status == CpStatus::StarCPRank);
}

TEST_CASE("slope check needs points") {
    LeadingTerm lt;
    lt.order = 1;
    lt.reported = {PadicNum::from_int(7, 7, 6), PadicNum::from_int(49, 7, 6)};
    CHECK_THROWS_AS(regulator_slope_check({}, lt, make_frobenius(7, 0)), Error);
}
