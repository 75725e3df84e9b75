#pragma once

#include "ssp/diagnostics.hpp"
#include "ssp/errors.hpp"
#include "ssp/galois.hpp"
#include "ssp/iwasawa.hpp"
#include "ssp/plfunction.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ssp {

struct CurveRecord {
    std::string label;
    std::array<Int, 5> a;
    i64 conductor = 0;
    std::optional<i64> tamagawa;
    std::optional<i64> torsion;
    int line = 0;
};

// `label a1 a2 a3 a4 a6 conductor [tamagawa] [torsion]` per line, `#` comments, or a JSON array of
// objects with the same keys. Duplicate labels: the last record wins and a warning is recorded.
std::vector<CurveRecord> parse_table(std::istream& in, std::vector<std::string>* warnings = nullptr);
std::vector<CurveRecord> ingest_table(const std::string& path, std::vector<std::string>* warnings = nullptr);

// curves quoted in the examples of the literature this tool reproduces
const std::vector<CurveRecord>& builtin_curves();
std::optional<CurveRecord> builtin_curve(const std::string& label);

struct RunConfig {
    std::string label;
    std::optional<std::array<Int, 5>> ainvs;
    i64 conductor = 0;
    i64 p = 0;
    i64 twist = 1;
    int depth = 3;
    int precision = 0;  // 0: max(25, depth + 4)
    std::optional<int> riemann_depth;
    std::vector<std::pair<Rat, Rat>> points;  // on the twisted model when twist != 1
    std::optional<i64> tamagawa;              // Tamagawa product of the (twisted) curve
    std::optional<int> sign;
    std::optional<int> rank_hint;
    std::string format = "json";
    std::string cache;

    int effective_precision() const { return precision > 0 ? precision : std::max(25, depth + 4); }
};

// throws InvalidConfig
void validate(const RunConfig& cfg);

struct Report {
    RunConfig config;
    std::optional<WeierstrassCurve> curve;
    std::optional<WeierstrassCurve> twisted;
    i64 ap = 0;
    std::optional<int> tam_val;
    std::optional<SurjectivityVerdict> surjectivity;
    std::optional<MazurTateFamily> family;
    std::optional<FamilyCheck> checks;
    std::optional<IwasawaProfile> profile;
    std::string row;
    std::optional<ShaGrowth> growth;
    std::optional<LeadingTerm> leading;
    std::vector<PointData> points;
    std::optional<SlopeCheck> slope;
    std::optional<Verdict> verdict;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool partial = false;
    int exit_code = 0;
};

int exit_code_for(ErrorKind k);

// never throws for module errors: they are recorded in the report and set the exit code
Report run(const RunConfig& cfg);

nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

// JSON cache of normalized modular symbols keyed by a-invariants and conductor
class SymbolCache {
public:
    explicit SymbolCache(std::string path);
    std::shared_ptr<const SymbolPair> get_or_compute(const WeierstrassCurve& E);
    bool hit() const { return hit_; }

private:
    std::string path_;
    bool hit_ = false;
};

}  // namespace ssp
