#include "ssp/diagnostics.hpp"

#include "ssp/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ssp {

const char* cp_label(CpStatus s) {
    switch (s) {
        case CpStatus::CP: return "CP";
        case CpStatus::StarCP: return "*CP";
        case CpStatus::StarCPRank: return "*CP-rang";
        case CpStatus::DoubleStarCP: return "**CP";
        case CpStatus::StarCPTam: return "*CP-tam";
        case CpStatus::Inconclusive: return "";
    }
    return "";
}

const char* cp_name(CpStatus s) {
    return s == CpStatus::Inconclusive ? "inconclusive" : cp_label(s);
}

namespace {

// strength order used when several rules fire
int rank_of(CpStatus s) {
    switch (s) {
        case CpStatus::CP: return 5;
        case CpStatus::StarCP: return 4;
        case CpStatus::StarCPRank: return 3;
        case CpStatus::DoubleStarCP: return 2;
        case CpStatus::StarCPTam: return 1;
        case CpStatus::Inconclusive: return 0;
    }
    return 0;
}

std::string str(int v) { return std::to_string(v); }

std::optional<int> lt(const IwasawaProfile& prof, int eps) {
    const ParityData& d = eps == 0 ? prof.plus : prof.minus;
    if (!d.stabilized) return std::nullopt;
    return d.lambda_tilde;
}

std::string lt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("?"); }

void add(RuleOutcome& r, const std::string& name, bool holds, const std::string& detail = "") {
    r.hypotheses.push_back({name, holds, detail});
}

bool all_hold(const RuleOutcome& r) {
    return std::all_of(r.hypotheses.begin(), r.hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

std::string surj_detail(const SurjectivityVerdict& s) {
    if (s.reasons.empty()) return "no criterion applies";
    const SerreReason& r = s.reasons.front();
    return r.criterion + (r.ell ? " at " + std::to_string(r.ell) : std::string());
}

void settle(Verdict& v) {
    v.status = CpStatus::Inconclusive;
    for (const RuleOutcome& r : v.rules)
        if (r.fired && rank_of(r.status) > rank_of(v.status)) v.status = r.status;
}

void attach_growth(Verdict& v, const IwasawaProfile& prof) {
    if (!prof.stabilized()) return;
    if (prof.ap != 0 && prof.plus.mu != prof.minus.mu) return;
    v.growth = growth_model(prof);
}

int even_floor(int x) { return x >= 0 ? x - (x % 2) : -((-x + 1) / 2 * 2); }

}  // namespace

const RuleOutcome* Verdict::decisive() const {
    const RuleOutcome* best = nullptr;
    for (const RuleOutcome& r : rules)
        if (r.fired && r.status == status && !best) best = &r;
    return best;
}

Verdict verdict_rank0(const IwasawaProfile& prof, const MazurTateFamily& fam, std::optional<int> tam_val,
                      const SurjectivityVerdict& surj) {
    Verdict v;
    const QPoly& P0 = fam.polys.at(0);
    LambdaMu lm0 = lambda_mu(P0, fam.ctx.p);
    if (lm0.zero) {
        v.notes.push_back("P_0 vanishes: the rank-0 rules do not apply");
        return v;
    }
    int mu0 = lm0.mu;
    i64 p = prof.p;
    bool surjective = surj.status == SurjectivityStatus::Surjective;
    auto lp = lt(prof, 0), lm = lt(prof, 1);
    bool both = lp && lm;
    int tam = tam_val.value_or(0);

    {
        RuleOutcome r;
        r.rule = "unit-special-value";
        add(r, "mu_0 = 0", mu0 == 0, "mu_0 = " + str(mu0));
        r.fired = all_hold(r);
        r.status = CpStatus::CP;
        r.conclusion = "L(E,1)/Omega_E is a p-adic unit: Sha(E/Q)(p) is trivial and the cofactor is a unit";
        v.rules.push_back(r);
        if (r.fired) v.sha_exponent = 0;
    }
    {
        RuleOutcome r;
        r.rule = "distinct-lambda-tilde";
        add(r, "rho_p surjective", surjective, surj_detail(surj));
        add(r, "mu_0 <= 2", mu0 <= 2, "mu_0 = " + str(mu0));
        add(r, "lambda-tilde stabilized", both, "lt- = " + lt_str(lm) + ", lt+ = " + lt_str(lp));
        add(r, "lt+ != lt-", both && *lp != *lm);
        r.fired = all_hold(r);
        r.status = CpStatus::CP;
        r.conclusion = "main conjecture holds and Sha(E/Q)(p) has the predicted order";
        if (r.fired) {
            v.proof_sketch.push_back("E(Q) and Sha(E/Q)(p) are finite since L(E,1) != 0; E(Q)_tors is prime to p");
            v.proof_sketch.push_back("if the cofactor g were not a unit, the bound ord Sha <= mu_0 - ord Tam <= 2 and "
                                     "the square order of Sha would force Q_0 to be a unit");
            v.proof_sketch.push_back("Q_0 a unit gives lt'+ = lt'- = 0, hence lt+ = lt- (" + lt_str(lp) +
                                     " vs " + lt_str(lm) + "), a contradiction; so g is a unit");
            // finiteness along the tower
            bool tower = true, checked = true;
            for (size_t k = 2; k < prof.levels.size() + 2; ++k) {
                const LevelRecord& prev = prof.levels[k - 2];
                if (!prev.zero && prev.mu == 0) continue;
                if (k >= prof.levels.size()) {
                    checked = false;
                    break;
                }
                const LevelRecord& L = prof.levels[k];
                Int bound = int_from(ipow(p, static_cast<int>(k) - 1) * (p - 1));
                if (L.zero || !(Rat(L.lambda) - prof.M[k] < Rat(bound))) tower = false;
            }
            if (checked && tower)
                v.rank_statements.push_back("E(Q_inf) = 0 and Sha(E/Q_n)(p) is finite for every n");
        }
        v.rules.push_back(r);
    }
    {
        RuleOutcome r;
        r.rule = "lambda-tilde-two";
        add(r, "a_p = 0", prof.ap == 0, "a_p = " + std::to_string(prof.ap));
        add(r, "lt+ = 2 or lt- = 2", (lp && *lp == 2) || (lm && *lm == 2),
            "lt- = " + lt_str(lm) + ", lt+ = " + lt_str(lp));
        bool distinct = both && *lp != *lm;
        bool tam_div = tam_val && *tam_val >= 1;
        add(r, "lt+ != lt- or ord_p Tam >= 1", distinct || tam_div,
            tam_val ? "ord_p Tam = " + str(*tam_val) : "ord_p Tam unknown");
        r.fired = all_hold(r);
        r.status = CpStatus::CP;
        r.conclusion = "main conjecture holds and Sha(E/Q)(p) has the predicted order";
        if (r.fired) {
            v.proof_sketch.push_back("0 <= lambda(g) <= lt = 2 with lambda(g) even; lambda(g) = 2 would force mu'_0 = 0, "
                                     "excluded by p | Tam or by lt+ != lt-");
        }
        v.rules.push_back(r);
    }
    {
        RuleOutcome r;
        r.rule = "tamagawa-forced";
        add(r, "a_p = 0", prof.ap == 0);
        add(r, "lt+ = lt- = 2", lp && lm && *lp == 2 && *lm == 2);
        add(r, "mu_0 odd", mu0 % 2 == 1, "mu_0 = " + str(mu0));
        add(r, "ord_p Tam unknown", !tam_val);
        r.fired = all_hold(r);
        r.status = CpStatus::StarCPTam;
        r.conclusion = "main conjecture holds once p | Tam(E) is checked (forced by the odd mu_0)";
        v.rules.push_back(r);
    }

    settle(v);
    int bound = mu0 - tam;
    if (v.status == CpStatus::CP && !v.sha_exponent) {
        if (tam_val) {
            int e = even_floor(bound);
            v.sha_parity_adjusted = e != bound;
            v.sha_exponent = e;
            v.notes.push_back("Sha(E/Q)(p) has order p^" + str(e) + " (mu_0 - ord_p Tam = " + str(bound) +
                              (v.sha_parity_adjusted ? ", lowered to the square value" : "") + ")");
        } else {
            v.sha_upper_bound = even_floor(mu0);
            v.assumptions.push_back("ord_p Tam(E) unknown: the Sha exponent is stated as an upper bound");
        }
    } else if (!v.sha_exponent) {
        v.sha_upper_bound = even_floor(bound);
        v.notes.push_back("upper bound only: ord_p Sha(E/Q)(p) <= mu_0 - ord_p Tam = " + str(bound));
    }
    v.rank_statements.insert(v.rank_statements.begin(), "E(Q) is finite");
    attach_growth(v, prof);
    return v;
}

namespace {

bool leading_nonzero(const std::optional<LeadingTerm>& L) {
    if (!L) return false;
    auto [X, Y] = xy_coordinates(L->reported);
    // nonvanishing modulo Fil^0: the phi(omega) coordinate carries the pairing with omega
    return !Y.is_zero();
}

std::string leading_detail(const std::optional<LeadingTerm>& L) {
    if (!L) return "not computed";
    auto [X, Y] = xy_coordinates(L->reported);
    return "order " + str(L->order) + ", Y = " + Y.str() + " (" + L->certification + ")";
}

void rank1_rule(Verdict& v, RuleOutcome r, bool modular_ok, bool surjective, bool lnz) {
    if (modular_ok && surjective) {
        r.fired = true;
        r.status = lnz ? CpStatus::CP : CpStatus::StarCP;
        r.conclusion = lnz ? "main conjecture holds and the Selmer rank over Q is 1"
                           : "main conjecture holds provided L'_{p,omega}(E,1) != 0";
    }
    v.rules.push_back(r);
}

}  // namespace

Verdict verdict_rank1(const IwasawaProfile& prof, const std::optional<LeadingTerm>& leading,
                      const std::optional<PointData>& point, std::optional<int> tam_val,
                      const SurjectivityVerdict& surj) {
    Verdict v;
    if (prof.levels.empty() || !prof.levels[0].zero) {
        v.notes.push_back("P_0 does not vanish: the rank-1 rules do not apply");
        return v;
    }
    i64 p = prof.p;
    bool surjective = surj.status == SurjectivityStatus::Surjective;
    auto lp = lt(prof, 0), lm = lt(prof, 1);
    bool lnz = leading_nonzero(leading) && leading->order == 1;

    {
        RuleOutcome r;
        r.rule = "lambda-tilde-one";
        bool mu_zero = prof.plus.stabilized && prof.minus.stabilized && prof.plus.mu == 0 && prof.minus.mu == 0;
        bool one = (lp && *lp == 1) || (lm && *lm == 1);
        add(r, "rho_p surjective", surjective, surj_detail(surj));
        add(r, "mu+ = mu- = 0", mu_zero);
        add(r, "lt+ = 1 or lt- = 1", one, "lt- = " + lt_str(lm) + ", lt+ = " + lt_str(lp));
        add(r, "L'_{p,omega}(E,1) != 0", lnz, leading_detail(leading));
        r.conclusion = "modular hypotheses fail";
        rank1_rule(v, r, mu_zero && one, surjective, lnz);
    }
    {
        RuleOutcome r;
        r.rule = "mu-one-pattern";
        add(r, "rho_p surjective", surjective, surj_detail(surj));
        add(r, "a_p = 0", prof.ap == 0, "a_p = " + std::to_string(prof.ap));
        bool found = false;
        std::string witness = "no k";
        for (size_t k = 1; k + 2 < prof.levels.size() && !found; ++k) {
            const LevelRecord& Lk = prof.levels[k];
            const LevelRecord& Lk2 = prof.levels[k + 2];
            if (Lk.zero || Lk.mu != 1 || Lk2.zero || Lk2.mu != 0) continue;
            if (Rat(Lk.lambda) != 1 + prof.M[k]) continue;
            auto same = lt(prof, static_cast<int>(k % 2)), other = lt(prof, static_cast<int>((k + 1) % 2));
            if (!same || !other) continue;
            // lt of the parity of k minus lt of the other parity, against M_{k+1}
            Rat gap = Rat(*same - *other);
            if (gap >= m_bound(p, static_cast<int>(k) + 1)) {
                found = true;
                witness = "k = " + std::to_string(k);
            }
        }
        add(r, "exists k: mu_k = 1, mu_{k+2} = 0, lambda_k = 1 + M_k, lt gap >= M_{k+1}", found, witness);
        add(r, "L'_{p,omega}(E,1) != 0", lnz, leading_detail(leading));
        r.conclusion = "modular hypotheses fail";
        rank1_rule(v, r, prof.ap == 0 && found, surjective, lnz);
    }
    {
        RuleOutcome r;
        r.rule = "lambda-tilde-p";
        bool mu1_inf = prof.levels.size() > 1 && prof.levels[1].zero;
        add(r, "P_1 = 0", mu1_inf);
        add(r, "lt- = p", lm && *lm == p, "lt- = " + lt_str(lm));
        r.fired = all_hold(r);
        r.status = CpStatus::DoubleStarCP;
        r.conclusion = "main conjecture holds provided L*_{p,omega}(E,1) != 0 and [L'_p, omega~] != 0 mod xi_1";
        v.rules.push_back(r);
    }
    {
        RuleOutcome r;
        r.rule = "lambda-tilde-two-rank";
        add(r, "lt+ = 2 or lt- = 2", (lp && *lp == 2) || (lm && *lm == 2),
            "lt- = " + lt_str(lm) + ", lt+ = " + lt_str(lp));
        r.fired = all_hold(r);
        r.status = CpStatus::StarCPRank;
        r.conclusion = "main conjecture holds provided L*_{p,omega}(E,1) != 0 and rank E(Q) >= 2";
        v.rules.push_back(r);
    }

    settle(v);
    if (v.status == CpStatus::CP || v.status == CpStatus::StarCP) {
        v.rank_statements.push_back(v.status == CpStatus::CP ? "the p-Selmer rank over Q is 1"
                                                             : "the p-Selmer rank over Q is 1 once L' != 0");
        if (point) {
            v.assumptions.push_back("the supplied point generates a subgroup of E(Q) of index prime to p");
            if (leading && lnz) {
                auto [X, Y] = xy_coordinates(leading->reported);
                PadicNum lg = point->log.log_p;
                if (!lg.is_zero()) {
                    // Z_2 = (p+1-a_p)^2 Y / p and p + 1 - a_p is a unit
                    int e = Y.val() + 1 - 2 * lg.val() - tam_val.value_or(0);
                    v.sha_exponent = e;
                    if (e % 2 != 0) v.notes.push_back("odd Sha exponent: inconsistent with a square order");
                    v.notes.push_back("ord_p Sha(E/Q)(p) = ord Z_2 - 2 ord(log P / p) - ord_p Tam = " + str(e));
                    v.rank_statements.push_back("E(Q) has rank 1 and Sha(E/Q)(p) is finite");
                }
            }
        } else {
            v.notes.push_back("no point supplied: Sha(E/Q)(p) is divisible, hence trivial once E(Q) is shown infinite");
        }
    }
    attach_growth(v, prof);
    return v;
}

Verdict verdict_higher_rank(const IwasawaProfile& prof, const std::optional<LeadingTerm>& leading,
                            std::optional<int> user_rank, const SurjectivityVerdict& surj) {
    (void)surj;
    Verdict v;
    auto lp = lt(prof, 0), lm = lt(prof, 1);
    RuleOutcome r;
    r.rule = "lambda-tilde-rank";
    add(r, "rank E(Q) >= r supplied", user_rank.has_value(), user_rank ? "r = " + str(*user_rank) : "no rank hint");
    int rr = user_rank.value_or(-1);
    add(r, "lt+ = r or lt- = r", (lp && *lp == rr) || (lm && *lm == rr),
        "lt- = " + lt_str(lm) + ", lt+ = " + lt_str(lp));
    r.fired = all_hold(r);
    r.status = CpStatus::CP;
    r.conclusion = "main conjecture holds, E(Q) has rank exactly r and Sha(E/Q)(p) is finite";
    v.rules.push_back(r);
    settle(v);
    if (user_rank) v.assumptions.push_back("rank E(Q) >= " + str(*user_rank) + " supplied by user");
    if (r.fired) {
        v.rank_statements.push_back("rank E(Q) = " + str(rr));
        v.rank_statements.push_back("Sha(E/Q)(p) is finite");
    } else if (user_rank && lp && lm && rr > std::max(*lp, *lm)) {
        v.notes.push_back("asserted rank exceeds both lambda-tilde values");
    }
    if (leading) {
        if (leading_nonzero(leading))
            v.notes.push_back("leading term of order " + str(leading->order) +
                              " is nonzero: consistent with the nonvanishing conjecture");
    }
    attach_growth(v, prof);
    return v;
}

Verdict diagnose(const IwasawaProfile& prof, const MazurTateFamily& fam, const std::optional<LeadingTerm>& leading,
                 const std::optional<PointData>& point, std::optional<int> tam_val, std::optional<int> user_rank,
                 const SurjectivityVerdict& surj) {
    bool p0_zero = prof.levels.empty() ? lambda_mu(fam.polys.at(0), fam.ctx.p).zero : prof.levels[0].zero;
    if (!p0_zero) return verdict_rank0(prof, fam, tam_val, surj);
    std::optional<LeadingTerm> l1;
    if (leading && leading->order == 1) l1 = leading;
    Verdict v = verdict_rank1(prof, l1, point, tam_val, surj);
    if (user_rank) {
        Verdict h = verdict_higher_rank(prof, leading, user_rank, surj);
        for (auto& r : h.rules) v.rules.push_back(r);
        for (auto& s : h.assumptions) v.assumptions.push_back(s);
        for (auto& s : h.notes) v.notes.push_back(s);
        CpStatus before = v.status;
        settle(v);
        if (v.status == CpStatus::CP && before != CpStatus::CP) {
            v.rank_statements = h.rank_statements;
            v.sha_exponent.reset();
        } else {
            for (auto& s : h.rank_statements) v.rank_statements.push_back(s);
        }
    }
    if (leading && leading->order >= 2 && leading_nonzero(leading))
        v.notes.push_back("leading term of order " + str(leading->order) + " is nonzero (" + leading->certification +
                          ")");
    return v;
}

SlopeCheck regulator_slope_check(const std::vector<PointLog>& points, const LeadingTerm& leading,
                                 const FrobeniusData& frob, int tam_val) {
    (void)frob;
    if (points.empty()) throw Error(ErrorKind::InsufficientData, "no point logarithm supplied");
    auto [X, Y] = xy_coordinates(leading.reported);
    if (X.is_zero() && Y.is_zero()) throw Error(ErrorKind::InsufficientData, "leading term vanishes to precision");
    SlopeCheck out;
    i64 p = X.p();
    out.leading_slope = X.is_zero() ? PadicNum(p, 0) : Y / X;
    bool exceeds = false;
    for (const PointLog& pl : points) {
        PointSlope s;
        s.log = pl.log_p;
        if (!pl.log_p.is_zero() && !Y.is_zero()) {
            int e = Y.val() + 1 - 2 * pl.log_p.val() - tam_val;
            s.sha_exponent = e;
            if (e < 0) exceeds = true;
        }
        out.points.push_back(s);
    }
    const PadicNum& base = points.front().log_p;
    for (const PointLog& pl : points)
        if (!base.is_zero()) out.log_ratios.push_back(pl.log_p / base);
    if (Y.is_zero()) {
        out.status = SlopeStatus::RankExceeds;
        out.detail = "the Euler-modified leading term lies in Fil^0 to the working precision";
    } else if (exceeds) {
        out.status = SlopeStatus::RankExceeds;
        out.detail = "the omega-direction of the leading term is too small for a rank-1 group generated by the points";
    } else {
        out.status = SlopeStatus::ConsistentRank;
        out.detail = "leading-term slope and point logarithms are consistent with rank 1";
    }
    return out;
}

}  // namespace ssp
