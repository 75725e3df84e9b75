#pragma once

#include "ssp/curve.hpp"

#include <string>
#include <vector>

namespace ssp {

enum class SurjectivityStatus { Surjective, Inconclusive };

struct SerreReason {
    std::string criterion;  // "cube", "squarefree", "multiplicative", "frobenius", "semistable"
    i64 ell = 0;            // witness prime (0 when not applicable)
    i64 value = 0;          // witness valuation or trace
    std::string detail;
};

struct SurjectivityVerdict {
    SurjectivityStatus status = SurjectivityStatus::Inconclusive;
    std::vector<SerreReason> reasons;
};

// throws NotSupersingular
SurjectivityVerdict serre_check(const WeierstrassCurve& E, i64 p, i64 ell_bound = 1000);

const char* status_name(SurjectivityStatus s);

}  // namespace ssp
