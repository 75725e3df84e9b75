#include "ssp/curve.hpp"
#include "ssp/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace ssp;

namespace {

const std::array<i64, 5> k11A{0, -1, 1, -10, -20};
const std::array<i64, 5> k17A{1, -1, 1, -1, -14};
const std::array<i64, 5> k37A{0, 0, 1, -1, 0};
const std::array<i64, 5> k43A{0, 1, 1, 0, 0};

// a_l by summing Legendre symbols of the discriminant of the quadratic in y
i64 naive_trace(const std::array<i64, 5>& a, i64 l) {
    i64 s = 0;
    for (i64 x = 0; x < l; ++x) {
        i64 b = (a[0] * x + a[2]) % l;
        i64 c = (((x * x % l) * x + a[1] * x % l * x + a[3] * x + a[4]) % l + l) % l;
        i64 d = ((b * b + 4 * c) % l + l) % l;
        s += legendre(d, l);
    }
    return -s;
}

}  // namespace

TEST_CASE("invariants of 11A and 17A") {
    auto E = derive_invariants(k11A, 11);
    CHECK(E.disc == -161051);
    CHECK(E.c4 == 496);
    Rat j(E.j_num, E.j_den);
    j.canonicalize();
    CHECK(j == Rat(-122023936) / 161051);
    CHECK(derive_invariants(k17A, 17).disc == -83521);
    CHECK_THROWS_AS(derive_invariants(std::array<i64, 5>{0, 0, 0, 0, 0}), Error);
}

TEST_CASE("Hecke eigenvalues match the q-expansions") {
    std::vector<i64> e11{1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1, -2, 4};
    std::vector<i64> e37{1, -2, -3, 2, -2, 6, -1, 0, 6, 4, -5, -6, -2};
    auto a = hecke_coefficients(derive_invariants(k11A, 11), 13);
    auto b = hecke_coefficients(derive_invariants(k37A, 37), 13);
    for (int n = 1; n <= 13; ++n) {
        CHECK(a[static_cast<size_t>(n)] == e11[static_cast<size_t>(n - 1)]);
        CHECK(b[static_cast<size_t>(n)] == e37[static_cast<size_t>(n - 1)]);
    }
}

TEST_CASE("point counts agree with a Legendre-symbol count") {
    for (auto [a, N] : std::vector<std::pair<std::array<i64, 5>, i64>>{{k11A, 11}, {k17A, 17}, {k37A, 37}, {k43A, 43}}) {
        auto E = derive_invariants(a, N);
        for (i64 l : primes_up_to(200)) {
            if (l == 2 || N % l == 0) continue;
            CHECK(count_points_mod(E, l) == naive_trace(a, l));
            CHECK(std::abs(count_points_mod(E, l)) <= 2 * static_cast<i64>(std::sqrt(static_cast<double>(l))) + 1);
        }
    }
}

TEST_CASE("supersingular primes") {
    CHECK(is_supersingular(derive_invariants(k17A, 17), 3));
    CHECK(is_supersingular(derive_invariants(k43A, 43), 7));
    CHECK(is_supersingular(derive_invariants(k37A, 37), 17));
    CHECK(is_supersingular(derive_invariants(k37A, 37), 19));
    CHECK_FALSE(is_supersingular(derive_invariants(k11A, 11), 3));
    CHECK_FALSE(is_supersingular(derive_invariants(k17A, 17), 5));
}

TEST_CASE("quadratic twist traces") {
    auto E = derive_invariants(k17A, 17);
    auto T = quadratic_twist(E, 373, 3);
    CHECK(T.conductor == 17 * 373 * 373);
    for (i64 l : primes_up_to(100)) {
        if (l == 2 || l == 3 || l == 17 || l == 373) continue;
        CHECK(count_points_mod(T, l) == kronecker(373, l) * count_points_mod(E, l));
    }
    CHECK(is_supersingular(T, 3));
    CHECK_THROWS_AS(quadratic_twist(E, 12, 3), Error);
}

TEST_CASE("group law on 43A") {
    auto E = derive_invariants(k43A, 43);
    auto P = CurvePoint::affine(0, 0);
    CHECK(on_curve(E, P));
    auto P2 = add(E, P, P), P3 = add(E, P2, P);
    CHECK(on_curve(E, P3));
    CHECK(add(E, add(E, P, P2), P3).x == add(E, P, add(E, P2, P3)).x);
    auto Q = multiply(E, P, 8);
    CHECK(Q.x == Rat(11, 49));
    CHECK(abs(Q.y.get_den()) == 343);
    CHECK(add(E, P, negate(E, P)).infinity);
}

TEST_CASE("formal logarithm") {
    auto E = derive_invariants(k17A, 17);
    auto c = formal_log(E, 3, 6);
    REQUIRE(c.size() >= 4);
    CHECK(c[1] == 1);
    CHECK(c[2] == Rat(1, 2));  // a1 / 2
    CHECK(c[3] == 0);          // (a1^2 + a2) / 3
    auto F = derive_invariants(k43A, 43);
    auto pl = point_log(F, 7, CurvePoint::affine(0, 0), 6);
    CHECK(pl.multiplier == 8);
    CHECK(pl.log_np.congruent(PadicNum::from_int(28, 7, 6), 2));
}

TEST_CASE("periods and central values") {
    RealPrecision guard(128);
    auto E = derive_invariants(k11A, 11);
    auto per = real_periods(E);
    CHECK(abs(per.omega_plus - Real("1.26920930427955342168879461675")) < Real("1e-25"));
    Real ratio = twisted_l_value(E, 1) / per.omega_plus;
    CHECK(abs(ratio - Real("0.2")) < Real("1e-20"));
    auto F = derive_invariants(k17A, 17);
    CHECK(abs(twisted_l_value(F, 1) / real_periods(F).omega_plus - Real("0.25")) < Real("1e-20"));
    CHECK(twisted_root_number(F, 1) == 1);
    CHECK(twisted_root_number(derive_invariants(k43A, 43), 1) == -1);
}
