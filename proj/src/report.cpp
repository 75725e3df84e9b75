#include "ssp/report.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace ssp {

using nlohmann::json;

namespace {

Int parse_int(const std::string& tok, int line, const char* what) {
    Int v;
    if (tok.empty() || v.set_str(tok, 10) != 0)
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad " + what + " '" + tok + "'");
    return v;
}

i64 to_i64(const Int& v, int line, const char* what) {
    if (!v.fits_slong_p())
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what + " out of range");
    return v.get_si();
}

CurveRecord record_from_json(const json& j, int line) {
    CurveRecord r;
    r.line = line;
    try {
        r.label = j.at("label").get<std::string>();
        const json& a = j.at("a");
        if (!a.is_array() || a.size() != 5) throw Error(ErrorKind::ParseError, "expected five a-invariants");
        for (size_t i = 0; i < 5; ++i)
            r.a[i] = parse_int(a[i].is_string() ? a[i].get<std::string>() : a[i].dump(), line, "a-invariant");
        r.conductor = j.at("conductor").get<i64>();
        if (j.contains("tamagawa")) r.tamagawa = j["tamagawa"].get<i64>();
        if (j.contains("torsion")) r.torsion = j["torsion"].get<i64>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, "record " + std::to_string(line) + ": " + e.what());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError && std::string(e.what()).find("line") != std::string::npos) throw;
        throw Error(ErrorKind::ParseError, "record " + std::to_string(line) + ": " + e.what());
    }
    return r;
}

void add_record(std::vector<CurveRecord>& out, std::map<std::string, size_t>& seen, CurveRecord r,
                std::vector<std::string>* warnings) {
    if (r.conductor <= 0)
        throw Error(ErrorKind::ParseError, "line " + std::to_string(r.line) + ": conductor must be positive");
    auto it = seen.find(r.label);
    if (it != seen.end()) {
        if (warnings)
            warnings->push_back("line " + std::to_string(r.line) + ": duplicate label " + r.label +
                                " replaces line " + std::to_string(out[it->second].line));
        out[it->second] = std::move(r);
        return;
    }
    seen[r.label] = out.size();
    out.push_back(std::move(r));
}

}  // namespace

std::vector<CurveRecord> parse_table(std::istream& in, std::vector<std::string>* warnings) {
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<CurveRecord> out;
    std::map<std::string, size_t> seen;
    size_t first = all.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && all[first] == '[') {
        json doc;
        try {
            doc = json::parse(all);
        } catch (const json::parse_error& e) {
            throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
        }
        int idx = 0;
        for (const json& j : doc) add_record(out, seen, record_from_json(j, ++idx), warnings);
        return out;
    }
    std::istringstream lines(all);
    std::string text;
    int line = 0;
    while (std::getline(lines, text)) {
        ++line;
        auto hash = text.find('#');
        if (hash != std::string::npos) text.resize(hash);
        std::istringstream ss(text);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() < 7 || tok.size() > 9)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": expected 7 to 9 fields, got " +
                                                   std::to_string(tok.size()));
        CurveRecord r;
        r.line = line;
        r.label = tok[0];
        for (int i = 0; i < 5; ++i) r.a[i] = parse_int(tok[1 + i], line, "a-invariant");
        r.conductor = to_i64(parse_int(tok[6], line, "conductor"), line, "conductor");
        if (tok.size() > 7) r.tamagawa = to_i64(parse_int(tok[7], line, "tamagawa"), line, "tamagawa");
        if (tok.size() > 8) r.torsion = to_i64(parse_int(tok[8], line, "torsion"), line, "torsion");
        add_record(out, seen, std::move(r), warnings);
    }
    return out;
}

std::vector<CurveRecord> ingest_table(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    return parse_table(in, warnings);
}

const std::vector<CurveRecord>& builtin_curves() {
    static const std::vector<CurveRecord> table = [] {
        std::istringstream in(R"(
11A   0 -1 1 -10 -20   11
14A   1 0 1 4 -6       14
17A   1 -1 1 -1 -14    17
24A   0 -1 0 -4 4      24
34A   1 0 0 -3 1       34
37A   0 0 1 -1 0       37
38A   1 0 1 9 90       38
40A   0 0 0 -7 -6      40
43A   0 1 1 0 0        43
46A   1 -1 0 -10 -12   46
52A   0 0 0 1 -10      52
53A   1 -1 1 0 0       53
62A   1 -1 1 -1 1      62
70A   1 -1 1 2 -3      70
73A   1 -1 0 4 -3      73
84A   0 1 0 7 0        84
91A   0 0 1 1 0        91
91B   0 1 1 -7 5       91
94A   1 -1 1 0 -1      94
98A   1 1 0 -25 -111   98
106B  1 1 0 -7 5       106
124B  0 0 0 -17 -27    124
142C  1 -1 0 -1 -3     142
145A  1 -1 1 -3 2      145
1909A 0 0 1 -4 2       1909
1952C 0 0 0 -332 2752  1952
)");
        return parse_table(in);
    }();
    return table;
}

std::optional<CurveRecord> builtin_curve(const std::string& label) {
    for (const CurveRecord& r : builtin_curves())
        if (r.label == label) return r;
    return std::nullopt;
}

void validate(const RunConfig& cfg) {
    auto bad = [](const std::string& m) { throw Error(ErrorKind::InvalidConfig, m); };
    if (cfg.label.empty() && !cfg.ainvs) bad("a curve label or a-invariants are required");
    if (cfg.p < 3 || !is_prime(static_cast<u64>(cfg.p))) bad("p must be an odd prime");
    if (cfg.depth < 2) bad("depth must be at least 2");
    if (cfg.effective_precision() < cfg.depth + 4) bad("precision must be at least depth + 4");
    if (cfg.riemann_depth && *cfg.riemann_depth < 1) bad("Riemann depth must be positive");
    if (cfg.sign && *cfg.sign != 1 && *cfg.sign != -1) bad("sign must be +1 or -1");
    if (cfg.rank_hint && *cfg.rank_hint < 0) bad("rank hint must be nonnegative");
    if (cfg.format != "json" && cfg.format != "text") bad("format must be json or text");
    if (cfg.ainvs && cfg.conductor <= 0) bad("a conductor is required with explicit a-invariants");
}

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::PrecisionExhausted:
        case ErrorKind::PrecisionTooLow:
            return 4;
        case ErrorKind::RecurrenceViolated:
        case ErrorKind::OrderNotCertified:
        case ErrorKind::DepthInsufficient:
        case ErrorKind::UnsupportedPattern:
        case ErrorKind::NotStabilized:
        case ErrorKind::InsufficientData:
        case ErrorKind::ZeroDivisor:
            return 2;
        default:
            return 3;
    }
}

// ---- symbol cache ----

SymbolCache::SymbolCache(std::string path) : path_(std::move(path)) {}

namespace {

std::string curve_key(const WeierstrassCurve& E) {
    std::ostringstream s;
    s << E.a1 << "," << E.a2 << "," << E.a3 << "," << E.a4 << "," << E.a6 << ";" << E.conductor;
    return s.str();
}

std::string values_hash(const std::vector<i64>& v, const Rat& scaling) {
    std::size_t h = std::hash<std::string>{}(scaling.get_str());
    for (i64 x : v) h = h * 1000003u ^ std::hash<i64>{}(x);
    std::ostringstream s;
    s << std::hex << h;
    return s.str();
}

json symbol_json(const EigenSymbol& s) {
    return json{{"values", s.generator_values()},
                {"scaling", s.scaling().get_str()},
                {"hash", values_hash(s.generator_values(), s.scaling())}};
}

std::optional<EigenSymbol> symbol_from_json(const json& j, std::shared_ptr<const P1List> p1, int sign) {
    auto values = j.at("values").get<std::vector<i64>>();
    Rat scaling(j.at("scaling").get<std::string>());
    scaling.canonicalize();
    if (values.size() != p1->size()) return std::nullopt;
    if (j.at("hash").get<std::string>() != values_hash(values, scaling)) return std::nullopt;
    EigenSymbol s = eigensymbol_from_values(std::move(p1), sign, std::move(values));
    s.set_scaling(scaling);
    return s;
}

}  // namespace

std::shared_ptr<const SymbolPair> SymbolCache::get_or_compute(const WeierstrassCurve& E) {
    hit_ = false;
    json doc = json::object();
    {
        std::ifstream in(path_);
        if (in) {
            try {
                doc = json::parse(in);
            } catch (const json::parse_error&) {
                doc = json::object();
            }
        }
    }
    if (!doc.is_object() || doc.value("schema", 0) != 1) doc = json{{"schema", 1}, {"curves", json::object()}};
    std::string key = curve_key(E);
    if (doc["curves"].contains(key)) {
        try {
            const json& c = doc["curves"][key];
            auto p1 = std::make_shared<P1List>(E.conductor);
            auto plus = symbol_from_json(c.at("plus"), p1, 1);
            auto minus = symbol_from_json(c.at("minus"), p1, -1);
            if (plus && minus) {
                hit_ = true;
                return std::make_shared<SymbolPair>(SymbolPair{*plus, *minus});
            }
        } catch (const json::exception&) {
        }
    }
    auto syms = std::make_shared<SymbolPair>(normalized_symbols(E));
    doc["curves"][key] = json{{"label", E.label}, {"plus", symbol_json(syms->plus)}, {"minus", symbol_json(syms->minus)}};
    std::ofstream out(path_);
    if (out) out << doc.dump() << "\n";
    return syms;
}

// ---- pipeline ----

namespace {

void fail(Report& r, const Error& e, const std::string& stage) {
    r.errors.push_back(stage + ": " + e.what());
    r.exit_code = std::max(r.exit_code, exit_code_for(e.kind()));
    r.partial = true;
}

}  // namespace

Report run(const RunConfig& cfg) {
    Report r;
    r.config = cfg;
    try {
        validate(cfg);
    } catch (const Error& e) {
        fail(r, e, "config");
        return r;
    }
    i64 p = cfg.p;
    std::optional<i64> tamagawa = cfg.tamagawa;
    try {
        if (cfg.ainvs) {
            const auto& a = *cfg.ainvs;
            r.curve = derive_invariants(a[0], a[1], a[2], a[3], a[4], cfg.conductor,
                                        cfg.label.empty() ? "custom" : cfg.label);
        } else {
            auto rec = builtin_curve(cfg.label);
            if (!rec) throw Error(ErrorKind::InvalidConfig, "unknown curve label " + cfg.label);
            const auto& a = rec->a;
            r.curve = derive_invariants(a[0], a[1], a[2], a[3], a[4], rec->conductor, rec->label);
            if (!tamagawa && cfg.twist == 1) tamagawa = rec->tamagawa;
        }
        if (!is_supersingular(*r.curve, p))
            throw Error(ErrorKind::NotSupersingular, "p = " + std::to_string(p) + " is not supersingular");
        r.twisted = cfg.twist == 1 ? *r.curve : quadratic_twist(*r.curve, cfg.twist, p);
    } catch (const Error& e) {
        fail(r, e, "curve");
        return r;
    }
    if (tamagawa) r.tam_val = vp(*tamagawa, p);

    try {
        r.surjectivity = serre_check(*r.twisted, p);
    } catch (const Error& e) {
        fail(r, e, "galois");
    }

    std::optional<MeasureContext> ctx;
    try {
        std::shared_ptr<const SymbolPair> syms;
        if (!cfg.cache.empty()) {
            SymbolCache cache(cfg.cache);
            syms = cache.get_or_compute(*r.curve);
        }
        ctx = make_context(*r.curve, p, cfg.twist, 0, cfg.effective_precision(), syms);
        r.ap = ctx->ap();
        r.family = build_family(*ctx, cfg.depth);
    } catch (const Error& e) {
        fail(r, e, "symbols");
        return r;
    }
    try {
        r.checks = check_family(*r.family);
    } catch (const Error& e) {
        fail(r, e, "recurrence");
    }

    int sign = cfg.sign.value_or(0);
    r.profile = partial_profile(*r.family, sign);
    if (!r.profile->stabilized()) {
        r.partial = true;
        std::string why = !r.profile->plus.stabilized ? r.profile->plus.reason : r.profile->minus.reason;
        r.errors.push_back("iwasawa: DepthInsufficient: " + why);
    } else {
        try {
            r.profile = profile(*r.family, sign);
        } catch (const Error& e) {
            fail(r, e, "iwasawa");
        }
    }
    if (sign == 0 && r.profile->sign != 0) sign = r.profile->sign;

    bool p0_zero = r.profile->levels.at(0).zero;
    try {
        if (r.profile->stabilized())
            r.growth = sha_growth(*r.profile, *r.family, r.tam_val.value_or(0), p0_zero ? 1 : 0);
    } catch (const Error& e) {
        fail(r, e, "growth");
    }

    try {
        if (!p0_zero) {
            r.leading = leading_term(*ctx, 0, 1, sign);
        } else if (cfg.riemann_depth) {
            int order = cfg.rank_hint && *cfg.rank_hint >= 1 ? *cfg.rank_hint : (sign > 0 ? 2 : 1);
            for (; order <= 4; ++order) {
                LeadingTerm L = leading_term(*ctx, order, *cfg.riemann_depth, sign);
                bool vanishes = L.value.u.is_zero() && L.value.v.is_zero();
                if (!vanishes) {
                    r.leading = L;
                    break;
                }
                r.warnings.push_back("derivative of order " + std::to_string(order) +
                                     " vanishes to the working precision");
            }
        }
    } catch (const Error& e) {
        fail(r, e, "leading term");
    }

    for (const auto& [x, y] : cfg.points) {
        CurvePoint P = CurvePoint::affine(x, y);
        try {
            if (!on_curve(*r.twisted, P))
                throw Error(ErrorKind::InvalidConfig, "point (" + x.get_str() + ", " + y.get_str() +
                                                          ") is not on the model");
            r.points.push_back({P, point_log(*r.twisted, p, P, cfg.effective_precision())});
        } catch (const Error& e) {
            fail(r, e, "points");
        }
    }
    if (r.leading && r.leading->order == 1 && !r.points.empty()) {
        std::vector<PointLog> logs;
        for (const auto& pd : r.points) logs.push_back(pd.log);
        try {
            r.slope = regulator_slope_check(logs, *r.leading, ctx->frob, r.tam_val.value_or(0));
        } catch (const Error& e) {
            fail(r, e, "slope");
        }
    }

    SurjectivityVerdict surj = r.surjectivity.value_or(SurjectivityVerdict{});
    std::optional<PointData> point;
    if (!r.points.empty()) point = r.points.front();
    r.verdict = diagnose(*r.profile, *r.family, r.leading, point, r.tam_val, cfg.rank_hint, surj);
    r.row = annexe_row(*r.profile, cp_label(r.verdict->status));
    if (r.verdict->status == CpStatus::Inconclusive) r.exit_code = std::max(r.exit_code, 2);
    return r;
}

// ---- serialization ----

namespace {

json padic_json(const PadicNum& x) {
    json j{{"value", x.str()}, {"prec", x.prec()}};
    j["val"] = x.is_zero() ? json(nullptr) : json(x.val());
    return j;
}

json dp_json(const DpVector& v) {
    auto [X, Y] = xy_coordinates(v);
    return json{{"omega", padic_json(v.u)}, {"phi_omega", padic_json(v.v)}, {"X", padic_json(X)}, {"Y", padic_json(Y)}};
}

json poly_json(const QPoly& f) {
    std::vector<std::string> c;
    for (const Rat& x : f) c.push_back(x.get_str());
    return json{{"coefficients", c}, {"display", to_string(f)}};
}

json hyp_json(const Hypothesis& h) { return json{{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}}; }

json verdict_json(const Verdict& v) {
    json rules = json::array();
    for (const RuleOutcome& r : v.rules) {
        json hs = json::array();
        for (const auto& h : r.hypotheses) hs.push_back(hyp_json(h));
        rules.push_back(json{{"rule", r.rule},
                             {"fired", r.fired},
                             {"status", cp_name(r.status)},
                             {"hypotheses", hs},
                             {"conclusion", r.conclusion}});
    }
    json j{{"status", cp_name(v.status)},
           {"rules", rules},
           {"rank_statements", v.rank_statements},
           {"assumptions", v.assumptions},
           {"notes", v.notes},
           {"proof_sketch", v.proof_sketch},
           {"sha_parity_adjusted", v.sha_parity_adjusted}};
    j["sha_exponent"] = v.sha_exponent ? json(*v.sha_exponent) : json(nullptr);
    j["sha_upper_bound"] = v.sha_upper_bound ? json(*v.sha_upper_bound) : json(nullptr);
    const RuleOutcome* d = v.decisive();
    j["decisive_rule"] = d ? json(d->rule) : json(nullptr);
    return j;
}

json parity_json(const ParityData& d) {
    json j{{"stabilized", d.stabilized}, {"reason", d.reason}};
    if (d.stabilized) {
        j["onset"] = d.onset;
        j["mu"] = d.mu;
        j["lambda_tilde"] = d.lambda_tilde;
        j["lambda"] = d.lambda.get_str();
    }
    return j;
}

json curve_json(const WeierstrassCurve& E) {
    std::vector<std::string> a;
    for (const Int& x : E.ainvs()) a.push_back(x.get_str());
    return json{{"label", E.label},
                {"ainvs", a},
                {"conductor", E.conductor},
                {"discriminant", E.disc.get_str()},
                {"j", Rat(E.j_num, E.j_den).get_str()}};
}

std::string pairs_str(const std::vector<std::pair<int, Int>>& t) {
    std::ostringstream s;
    for (size_t i = 0; i < t.size(); ++i) s << (i ? ", " : "") << t[i].first << ":" << t[i].second;
    return s.str();
}

}  // namespace

json to_json(const Report& r) {
    json j;
    j["schema"] = 1;
    j["config"] = json{{"label", r.config.label},
                       {"p", r.config.p},
                       {"twist", r.config.twist},
                       {"depth", r.config.depth},
                       {"precision", r.config.effective_precision()}};
    j["config"]["riemann_depth"] = r.config.riemann_depth ? json(*r.config.riemann_depth) : json(nullptr);
    j["config"]["rank_hint"] = r.config.rank_hint ? json(*r.config.rank_hint) : json(nullptr);
    j["config"]["sign"] = r.config.sign ? json(*r.config.sign) : json(nullptr);
    if (r.curve) j["curve"] = curve_json(*r.curve);
    if (r.twisted && r.config.twist != 1) j["twisted_model"] = curve_json(*r.twisted);
    j["a_p"] = r.ap;
    j["tamagawa_valuation"] = r.tam_val ? json(*r.tam_val) : json(nullptr);
    if (r.surjectivity) {
        json reasons = json::array();
        for (const auto& s : r.surjectivity->reasons)
            reasons.push_back(json{{"criterion", s.criterion}, {"ell", s.ell}, {"value", s.value}, {"detail", s.detail}});
        j["surjectivity"] = json{{"status", status_name(r.surjectivity->status)}, {"witnesses", reasons}};
    }
    if (r.family) {
        json polys = json::array();
        for (const QPoly& f : r.family->polys) polys.push_back(poly_json(f));
        j["family"] = json{{"depth", r.family->depth}, {"polys", polys}};
        if (r.checks)
            j["family"]["checks"] = json{{"recurrence_levels", r.checks->levels_checked},
                                         {"base_relation", r.checks->base_relation}};
    }
    if (r.profile) {
        json levels = json::array();
        for (const auto& L : r.profile->levels) {
            json l{{"n", L.n}, {"zero", L.zero}};
            if (!L.zero) {
                l["mu"] = L.mu;
                l["lambda"] = L.lambda;
            }
            levels.push_back(l);
        }
        j["profile"] = json{{"levels", levels},
                            {"plus", parity_json(r.profile->plus)},
                            {"minus", parity_json(r.profile->minus)},
                            {"sign", r.profile->sign},
                            {"sign_inferred", r.profile->sign_inferred},
                            {"row", r.row}};
    }
    if (r.growth) {
        const ShaGrowth& g = *r.growth;
        json layers = json::array();
        for (const auto& l : g.layers) layers.push_back(l.infinite ? json(nullptr) : json(l.val));
        json table = json::object(), direct = json::object();
        for (const auto& [n, v] : g.table) table[std::to_string(n)] = v.get_str();
        for (const auto& [n, v] : g.direct) direct[std::to_string(n)] = v.get_str();
        j["growth"] = json{{"lambda_plus", g.model.lambda_plus.get_str()},
                           {"lambda_minus", g.model.lambda_minus.get_str()},
                           {"n0", g.n0},
                           {"base_term", g.base_term},
                           {"layers", layers},
                           {"determined", g.determined},
                           {"offset", g.offset.get_str()},
                           {"formula", g.formula},
                           {"table", table},
                           {"direct", direct}};
    }
    if (r.leading) {
        const LeadingTerm& L = *r.leading;
        j["leading_term"] = json{{"order", L.order},
                                 {"value", dp_json(L.value)},
                                 {"euler_modified", dp_json(L.euler_modified)},
                                 {"reported", dp_json(L.reported)},
                                 {"omega_component", padic_json(L.omega_component)},
                                 {"error_exponent", L.error_exponent},
                                 {"lower_orders_exact", L.lower_orders_exact},
                                 {"certification", L.certification}};
    }
    if (!r.points.empty()) {
        json pts = json::array();
        for (const auto& pd : r.points)
            pts.push_back(json{{"x", pd.point.x.get_str()},
                               {"y", pd.point.y.get_str()},
                               {"multiplier", pd.log.multiplier},
                               {"log_multiple", padic_json(pd.log.log_np)},
                               {"log", padic_json(pd.log.log_p)}});
        j["points"] = pts;
    }
    if (r.slope) {
        json pts = json::array();
        for (const auto& s : r.slope->points)
            pts.push_back(json{{"log", padic_json(s.log)},
                               {"sha_exponent", s.sha_exponent ? json(*s.sha_exponent) : json(nullptr)}});
        j["slope_check"] = json{{"status", r.slope->status == SlopeStatus::ConsistentRank ? "ConsistentRank"
                                                                                          : "RankExceeds"},
                                {"leading_slope", padic_json(r.slope->leading_slope)},
                                {"points", pts},
                                {"detail", r.slope->detail}};
    }
    if (r.verdict) j["verdict"] = verdict_json(*r.verdict);
    j["errors"] = r.errors;
    j["warnings"] = r.warnings;
    j["partial"] = r.partial;
    j["exit_code"] = r.exit_code;
    return j;
}

std::string to_text(const Report& r) {
    std::ostringstream s;
    if (r.curve) {
        s << "curve " << r.curve->label << " [";
        auto a = r.curve->ainvs();
        for (size_t i = 0; i < 5; ++i) s << (i ? "," : "") << a[i];
        s << "] conductor " << r.curve->conductor;
        if (r.config.twist != 1) s << ", twist " << r.config.twist;
        s << ", p = " << r.config.p << ", a_p = " << r.ap << "\n";
    }
    if (r.surjectivity) {
        s << "rho_p: " << status_name(r.surjectivity->status);
        for (const auto& w : r.surjectivity->reasons)
            s << " [" << w.criterion << (w.ell ? " l=" + std::to_string(w.ell) : std::string()) << "]";
        s << "\n";
    }
    if (r.family) {
        size_t shown = std::min<size_t>(r.family->polys.size(), 3);
        for (size_t n = 0; n < shown; ++n) s << "P_" << n << " = " << to_string(r.family->polys[n]) << "\n";
        if (shown < r.family->polys.size())
            s << "(P_" << shown << " .. P_" << r.family->polys.size() - 1 << " in the JSON report)\n";
    }
    if (r.profile) {
        s << "p | mu0 | mu1,l1 | mu2,l2 | mu3,l3 | mu4,l4 | CP | lt- | lt+\n" << r.row << "\n";
        if (r.profile->stabilized())
            s << "lambda+ = " << r.profile->plus.lambda << ", lambda- = " << r.profile->minus.lambda << "\n";
    }
    if (r.growth) {
        s << "ord_p Sha(E/Q_n) = " << r.growth->formula << "  (n >= " << r.growth->n0 << ")\n";
        s << "  table " << pairs_str(r.growth->table) << "\n";
        s << "  direct " << pairs_str(r.growth->direct) << "\n";
    }
    if (r.leading) {
        auto [X, Y] = xy_coordinates(r.leading->reported);
        s << "leading term (order " << r.leading->order << ", " << r.leading->certification
          << "): X = " << X.str() << ", Y = " << Y.str() << "\n";
    }
    for (const auto& pd : r.points)
        s << "log(" << pd.log.multiplier << "P) = " << pd.log.log_np.str() << "\n";
    if (r.verdict) {
        const Verdict& v = *r.verdict;
        s << "verdict: " << cp_name(v.status);
        if (const RuleOutcome* d = v.decisive()) s << " (" << d->rule << ")";
        s << "\n";
        if (v.sha_exponent) s << "  ord_p Sha(E/Q)(p) = " << *v.sha_exponent << "\n";
        if (v.sha_upper_bound) s << "  ord_p Sha(E/Q)(p) <= " << *v.sha_upper_bound << "\n";
        for (const auto& x : v.rank_statements) s << "  " << x << "\n";
        for (const auto& x : v.assumptions) s << "  assumes: " << x << "\n";
        for (const auto& x : v.notes) s << "  note: " << x << "\n";
    }
    for (const auto& e : r.errors) s << "error: " << e << "\n";
    for (const auto& w : r.warnings) s << "warning: " << w << "\n";
    return s.str();
}

}  // namespace ssp
