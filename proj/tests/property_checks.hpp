#pragma once

#include "ssp/iwasawa.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ssp::props {

struct Outcome {
    bool ok = true;
    int cases = 0;
    std::string detail;
};

// curves and families shared by the property suites
struct Corpus {
    struct Entry {
        std::string name;
        MeasureContext ctx;
        int depth = 0;
    };
    std::vector<Entry> entries;
    static const Corpus& get();
};

Outcome distribution_relation(int cases, unsigned seed);
Outcome recurrences();
Outcome symbol_parity(int cases, unsigned seed);
Outcome lambda_mu_additivity(int cases, unsigned seed);
Outcome resultant_oracle(int cases, unsigned seed);
Outcome riemann_congruence(int pairs);
Outcome growth_integrality();

}  // namespace ssp::props
