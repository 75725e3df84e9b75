#pragma once

#include "ssp/plfunction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ssp {

struct LevelRecord {
    int n = 0;
    bool zero = false;
    int mu = 0;
    int lambda = 0;
};

// index 0 is the even parity (+), index 1 the odd parity (-)
struct ParityData {
    bool stabilized = false;
    int onset = -1;       // n_eps
    int mu = 0;
    int lambda_tilde = 0;
    Rat lambda;           // lambda_tilde - 1/(p+1) or lambda_tilde - p/(p+1)
    std::string reason;
};

struct IwasawaProfile {
    i64 p = 0;
    i64 ap = 0;
    std::vector<LevelRecord> levels;
    ParityData plus, minus;
    std::vector<Rat> M;  // M_n for the computed levels
    int sign = 0;        // analytic sign, 0 when unknown
    bool sign_inferred = false;

    const ParityData& parity(int n) const { return n % 2 == 0 ? plus : minus; }
    bool stabilized() const { return plus.stabilized && minus.stabilized; }
};

Rat m_bound(i64 p, int n);

// throws DepthInsufficient (stabilization not certified) or UnsupportedPattern
IwasawaProfile profile(const MazurTateFamily& fam, int sign = 0);
// same analysis, leaving unstabilized parities marked instead of throwing
IwasawaProfile partial_profile(const MazurTateFamily& fam, int sign = 0);

struct GrowthModel {
    i64 p = 0;
    int mu_plus = 0, mu_minus = 0;
    Rat lambda_plus, lambda_minus;
};

GrowthModel growth_model(const IwasawaProfile& prof);
Rat growth_exponent_rational(const GrowthModel& g, int n);
// A_n; throws NotStabilized if it is not an integer
Int growth_exponent(const GrowthModel& g, int n);

struct ShaGrowth {
    GrowthModel model;
    int n0 = 0;
    int base_term = 0;               // ord_p P_0
    std::vector<ResultantVal> layers;  // ord_p of prod P_j(zeta - 1) over primitive p^j-th roots, j = 1..depth
    int tam_val = 0;
    bool determined = false;         // every layer up to n0 finite
    Rat offset;                      // ord Sha(Q_n) = A_n + offset for n >= n0
    std::string formula;
    std::vector<std::pair<int, Int>> table;         // from the formula, n0 <= n <= 12
    std::vector<std::pair<int, Int>> direct;        // sum of computed layers, n <= depth
};

ShaGrowth sha_growth(const IwasawaProfile& prof, const MazurTateFamily& fam, int tam_val, int rank_s = 0);

enum class XiStatus { Coprime, SharedFactor };

struct XiCoprimality {
    XiStatus status = XiStatus::Coprime;
    int multiplicity = 0;
    ResultantVal resultant;
    bool by_degree = false;
};

XiCoprimality xi_coprimality(const MazurTateFamily& fam, int n);

// "p | mu0 | mu1,lam1 | ... | CP | lt- | lt+"
std::string annexe_row(const IwasawaProfile& prof, const std::string& cp, int max_level = 4);

}  // namespace ssp
