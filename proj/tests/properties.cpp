#include "property_checks.hpp"

#include <doctest.h>

using namespace ssp::props;

namespace {
void expect(const Outcome& o, int min_cases) {
    INFO(o.detail);
    CHECK(o.ok);
    CHECK(o.cases >= min_cases);
}
}  // namespace

TEST_CASE("measure distribution relation") { expect(distribution_relation(100, 20240601), 100); }

TEST_CASE("family recurrences and base relation") { expect(recurrences(), 10); }

TEST_CASE("modular symbol parity") { expect(symbol_parity(50, 7), 50); }

TEST_CASE("lambda and mu add under multiplication") { expect(lambda_mu_additivity(200, 11), 200); }

TEST_CASE("resultant against roots of unity") { expect(resultant_oracle(50, 13), 50); }

TEST_CASE("Riemann sums congruent for congruent exponents") { expect(riemann_congruence(10), 10); }

TEST_CASE("growth exponent is an integer") { expect(growth_integrality(), 13); }
