#include "ssp/modsym.hpp"

#include <doctest.h>

#include <cmath>

using namespace ssp;

namespace {

// number of points of P^1(Z/N): N prod (1 + 1/q)
i64 psi(i64 N) {
    i64 r = N;
    for (auto [q, e] : factor(N)) r = r / q * (q + 1);
    return r;
}

// genus of X_0(N) for the levels used below, from the standard formula
int genus_x0(i64 N) {
    i64 mu = psi(N);
    int nu2 = 1, nu3 = 1;
    for (auto [q, e] : factor(N)) {
        nu2 *= (q == 2) ? (e == 1 ? 1 : 0) : 1 + kronecker(-4, q);
        nu3 *= (q == 3) ? (e == 1 ? 1 : 0) : 1 + kronecker(-3, q);
    }
    i64 cusps = 0;
    for (i64 d = 1; d <= N; ++d)
        if (N % d == 0) cusps += [&] {
            i64 g = gcd64(d, N / d), t = 0;
            for (i64 u = 1; u <= g; ++u)
                if (gcd64(u, g) == 1) ++t;
            return t;
        }();
    return static_cast<int>(std::lround(1 + mu / 12.0 - nu2 / 4.0 - nu3 / 3.0 - cusps / 2.0));
}

}  // namespace

TEST_CASE("P1 list") {
    for (i64 N : {11, 17, 37, 40, 142}) {
        P1List p1(N);
        CHECK(static_cast<i64>(p1.size()) == psi(N));
        CHECK(p1_count(N) == psi(N));
        for (size_t i = 0; i < p1.size(); ++i) {
            auto [c, d] = p1.rep(i);
            CHECK(p1.index(c, d) == static_cast<int>(i));
            if (N % 3 != 0) CHECK(p1.index(3 * c, 3 * d) == static_cast<int>(i));
        }
    }
}

TEST_CASE("Heilbronn matrices have the right determinant") {
    for (i64 l : {2, 3, 5, 7}) {
        auto H = heilbronn_merel(l);
        CHECK(!H.empty());
        for (auto [a, b, c, d] : H) CHECK(a * d - b * c == l);
    }
}

TEST_CASE("cuspidal dimension equals the genus") {
    for (i64 N : {11, 17, 37, 43}) {
        int g = genus_x0(N);
        for (int s : {1, -1}) CHECK(build_space(N, s).cuspidal_dim == g);
    }
}

TEST_CASE("Hecke operators commute and see supersingularity") {
    auto S = build_space(17, 1);
    auto T2 = hecke_operator_cuspidal(S, 2), T3 = hecke_operator_cuspidal(S, 3);
    REQUIRE(T2.size() == 1);
    CHECK(T2[0][0] == -1);
    CHECK(T3[0][0] == 0);
    auto S43 = build_space(43, 1);
    auto A = hecke_operator(S43, 2), B = hecke_operator(S43, 3);
    size_t n = A.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat ab = 0, ba = 0;
            for (size_t k = 0; k < n; ++k) ab += A[i][k] * B[k][j], ba += B[i][k] * A[k][j];
            CHECK(ab == ba);
        }
}

TEST_CASE("normalized symbols") {
    auto E = derive_invariants(std::array<i64, 5>{1, -1, 1, -1, -14}, 17);
    auto s = normalized_symbols(E);
    CHECK(s.plus.evaluate(0, 1) == Rat(1, 4));
    CHECK(vp(s.plus.evaluate(0, 1), 3) == 0);
    auto F = derive_invariants(std::array<i64, 5>{0, 1, 1, 0, 0}, 43);
    auto t = normalized_symbols(F);
    CHECK(t.plus.evaluate(0, 1) == 0);
    // x(a/b) is 3-integral for denominators prime to 17
    for (i64 b : {3, 9, 27, 81})
        for (i64 a = 1; a < b; ++a)
            if (a % 3 != 0) CHECK(vp(s.plus.evaluate(a, b), 3) >= 0);
    // Hecke relation: sum_k x((r + k)/q) + x(q r) = a_q x(r)
    for (i64 q : {2, 3, 5}) {
        i64 aq = count_points_mod(E, q);
        for (auto [u, v] : std::vector<std::pair<i64, i64>>{{1, 7}, {3, 11}, {5, 13}}) {
            Rat lhs = s.plus.evaluate(q * u, v);
            for (i64 k = 0; k < q; ++k) lhs += s.plus.evaluate(u + k * v, q * v);
            CHECK(lhs == s.plus.evaluate(u, v) * aq);
        }
    }
}

TEST_CASE("twisted symbol values carry the character") {
    auto E = derive_invariants(std::array<i64, 5>{1, -1, 1, -1, -14}, 17);
    auto s = normalized_symbols(E);
    i64 d = -167, den = 9 * 167;
    for (i64 a : {1, 2, 4, 5, 7}) CHECK(twisted_symbol_value(s, d, a, den) == kronecker(d, a) * s.minus.evaluate(a, den));
}
