#include "ssp/errors.hpp"
#include "ssp/galois.hpp"

#include <doctest.h>

using namespace ssp;

TEST_CASE("43A at 7 is surjective with a squarefree conductor") {
    auto E = derive_invariants(std::array<i64, 5>{0, 1, 1, 0, 0}, 43);
    auto v = serre_check(E, 7);
    CHECK(v.status == SurjectivityStatus::Surjective);
    REQUIRE_FALSE(v.reasons.empty());
    CHECK(v.reasons[0].criterion == "squarefree");
    CHECK(std::string(status_name(v.status)) == "Surjective");
}

TEST_CASE("1952C at 3 has a cube discriminant and stays inconclusive") {
    auto E = derive_invariants(std::array<i64, 5>{0, 0, 0, -332, 2752}, 1952);
    CHECK(E.disc == -929714176);
    auto v = serre_check(E, 3);
    CHECK(v.status == SurjectivityStatus::Inconclusive);
    CHECK(v.reasons.empty());
}

TEST_CASE("17A twists at 3 fire with a witness") {
    auto E = derive_invariants(std::array<i64, 5>{1, -1, 1, -1, -14}, 17);
    auto v = serre_check(E, 3);
    CHECK(v.status == SurjectivityStatus::Surjective);
    REQUIRE_FALSE(v.reasons.empty());
    CHECK(v.reasons[0].criterion == "cube");
    CHECK(v.reasons[0].ell == 17);
    CHECK(v.reasons[0].value % 3 != 0);
    for (i64 d : {373, -167, -239}) {
        auto T = quadratic_twist(E, d, 3);
        auto w = serre_check(T, 3);
        CHECK(w.status == SurjectivityStatus::Surjective);
        for (const auto& r : w.reasons) {
            CHECK(!r.criterion.empty());
            if (r.criterion == "frobenius") CHECK(r.value % 3 != 0);
        }
    }
}

TEST_CASE("ordinary primes are rejected") {
    auto E = derive_invariants(std::array<i64, 5>{1, -1, 1, -1, -14}, 17);
    CHECK_THROWS_AS(serre_check(E, 5), Error);
}
