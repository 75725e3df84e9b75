#pragma once

#include "ssp/curve.hpp"
#include "ssp/galois.hpp"
#include "ssp/iwasawa.hpp"
#include "ssp/plfunction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ssp {

enum class CpStatus { CP, StarCP, StarCPRank, DoubleStarCP, StarCPTam, Inconclusive };

// Annexe-style label: "CP", "*CP", "*CP-rang", "**CP", "*CP-tam", "" for inconclusive
const char* cp_label(CpStatus s);
const char* cp_name(CpStatus s);

struct Hypothesis {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct RuleOutcome {
    std::string rule;
    bool fired = false;
    CpStatus status = CpStatus::Inconclusive;
    std::vector<Hypothesis> hypotheses;
    std::string conclusion;
};

struct Verdict {
    CpStatus status = CpStatus::Inconclusive;
    std::vector<RuleOutcome> rules;  // every rule evaluated, in order
    std::optional<int> sha_exponent;  // ord_p #Sha(E/Q)(p)
    std::optional<int> sha_upper_bound;
    bool sha_parity_adjusted = false;
    std::optional<GrowthModel> growth;
    std::vector<std::string> rank_statements;
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;
    std::vector<std::string> proof_sketch;

    const RuleOutcome* decisive() const;
};

struct PointData {
    CurvePoint point;
    PointLog log;
};

// Rank-0 case: P_0 != 0. tam_val is ord_p Tam(E) when known.
Verdict verdict_rank0(const IwasawaProfile& prof, const MazurTateFamily& fam, std::optional<int> tam_val,
                      const SurjectivityVerdict& surj);

// Rank-1 case: P_0 == 0. leading is the order-1 leading term when computed; point a generator of
// a subgroup of E(Q) of index prime to p.
Verdict verdict_rank1(const IwasawaProfile& prof, const std::optional<LeadingTerm>& leading,
                      const std::optional<PointData>& point, std::optional<int> tam_val,
                      const SurjectivityVerdict& surj);

// user_rank: asserted lower bound for the rank of E(Q)
Verdict verdict_higher_rank(const IwasawaProfile& prof, const std::optional<LeadingTerm>& leading,
                            std::optional<int> user_rank, const SurjectivityVerdict& surj);

// Runs the applicable verdicts and keeps the strongest conclusion, merging the trails.
Verdict diagnose(const IwasawaProfile& prof, const MazurTateFamily& fam, const std::optional<LeadingTerm>& leading,
                 const std::optional<PointData>& point, std::optional<int> tam_val, std::optional<int> user_rank,
                 const SurjectivityVerdict& surj);

enum class SlopeStatus { ConsistentRank, RankExceeds };

struct PointSlope {
    PadicNum log;                  // log_{omega_E} of the point
    std::optional<int> sha_exponent;  // ord Z_2 - 2 ord(log P / p) - ord_p Tam
};

struct SlopeCheck {
    SlopeStatus status = SlopeStatus::ConsistentRank;
    PadicNum leading_slope;  // Y / X of the reported leading term, basis (omega, -p phi omega)
    std::vector<PointSlope> points;
    std::vector<PadicNum> log_ratios;  // log P_i / log P_0, invariant under common scaling
    std::string detail;
};

// throws InsufficientData without points or a nonzero leading term
SlopeCheck regulator_slope_check(const std::vector<PointLog>& points, const LeadingTerm& leading,
                                 const FrobeniusData& frob, int tam_val = 0);

}  // namespace ssp
