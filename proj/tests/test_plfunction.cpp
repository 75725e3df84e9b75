#include "ssp/errors.hpp"
#include "ssp/plfunction.hpp"

#include <doctest.h>

using namespace ssp;

namespace {

const std::array<i64, 5> k17A{1, -1, 1, -1, -14};
const std::array<i64, 5> k43A{0, 1, 1, 0, 0};

std::shared_ptr<const SymbolPair> syms17() {
    static auto s = std::make_shared<const SymbolPair>(normalized_symbols(derive_invariants(k17A, 17)));
    return s;
}

MeasureContext ctx17(i64 d = 1) { return make_context(derive_invariants(k17A, 17), 3, d, 0, 25, syms17()); }

}  // namespace

TEST_CASE("Frobenius on the de Rham module") {
    for (auto [p, ap] : std::vector<std::pair<i64, i64>>{{3, 0}, {5, 0}, {3, 3}, {2, -2}}) {
        auto f = make_frobenius(p, ap);
        // phi^2 - (a_p / p) phi + 1/p = 0
        Mat2 phi2 = mul(f.matrix, f.matrix);
        Mat2 lhs = phi2 - scale(f.matrix, Rat(int_from(ap)) / p);
        CHECK(lhs == scale(identity2(), Rat(-1) / p));
        DpRat w{1, 0};
        DpRat a = phi_power_apply(f, 3, w), b = act(f.matrix, act(f.matrix, act(f.matrix, w)));
        CHECK(a.u == b.u);
        CHECK(a.v == b.v);
        // the Euler operator composed with its factors is the identity
        Mat2 E = euler_operator(f);
        Mat2 left = identity2() - f.matrix;
        Mat2 right = identity2() - scale(inverse(f.matrix), Rat(1) / p);
        CHECK(mul(left, E) == right);
    }
    auto [X, Y] = xy_coordinates(DpRat{Rat(2), Rat(9)}, 3);
    CHECK(X == 2);
    CHECK(Y == -3);
}

TEST_CASE("Mazur-Tate polynomials of 17A at 3") {
    auto ctx = ctx17();
    auto fam = build_family(ctx, 3);
    for (int n = 0; n <= 3; ++n) CHECK(degree(fam.polys[static_cast<size_t>(n)]) < ipow(3, n));
    auto c = check_family(fam);
    CHECK(c.levels_checked == 2);
    CHECK(c.base_relation);
    // the exact family and the branch-0 p-adic family agree
    auto pad = mazur_tate_branch(ctx, 2);
    const auto& ex = fam.polys[2];
    for (size_t i = 0; i < ex.size(); ++i) CHECK(pad[i].congruent(PadicNum::from_rat(ex[i], 3, 25), 20));
    auto bad = fam;
    bad.polys[2][0] += 3;
    CHECK_THROWS_AS(check_family(bad), Error);
}

TEST_CASE("twisted polynomial of 40A(-379)") {
    auto E = derive_invariants(std::array<i64, 5>{0, 0, 0, -7, -6}, 40);
    auto fam = build_family(make_context(E, 3, -379), 2);
    const auto& P1 = fam.polys[1];
    REQUIRE(P1.size() == 2);
    CHECK(P1[0] == P1[1]);
    CHECK(vp(P1[0], 3) == 2);
    CHECK_THROWS_AS(make_context(E, 3, -380), Error);
}

TEST_CASE("special values and derivatives") {
    auto F = derive_invariants(k43A, 43);
    auto ctx = make_context(F, 7);
    auto v0 = special_value(ctx, 0, 1);
    CHECK(v0.value.u.is_zero());
    CHECK(v0.value.v.is_zero());
    auto c17 = ctx17();
    auto s = special_value(c17, 0, 2);
    CHECK_FALSE(s.value.u.is_zero());
    CHECK_THROWS_AS(leading_term(c17, 1, 2), Error);
    auto lt0 = leading_term(c17, 0, 1);
    CHECK(lt0.certification == "exact");
}

TEST_CASE("p-adic logarithm table") {
    i64 p = 5;
    int K = 8;
    LogTable lt(p, K);
    u64 mod = lt.modulus();
    CHECK(mod == static_cast<u64>(ipow(p, K)));
    // log(1 + p) from its series, to precision p^K
    Rat series = 0;
    Rat pw = 1;
    for (int j = 1; j < 40; ++j) {
        pw *= p;
        series += (j % 2 ? Rat(1) : Rat(-1)) * pw / j;
    }
    CHECK(PadicNum::from_int(Int(static_cast<unsigned long>(lt.log(1 + p))), p, K).congruent(PadicNum::from_rat(series, p, K + 4), K));
    for (u64 a : {2, 3, 7, 11, 123})
        for (u64 b : {3, 4, 13}) CHECK(lt.log(a * b) == (lt.log(a) + lt.log(b)) % mod);
    CHECK(lt.log(mod - 1) == 0);  // log(-1) = 0
}
