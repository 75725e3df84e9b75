#include "ssp/iwasawa.hpp"

#include "ssp/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ssp {

namespace {

Int pw(i64 p, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= int_from(p);
    return r;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

void analyse_parity(const IwasawaProfile& prof, int eps, ParityData& out) {
    i64 p = prof.p;
    int best = kInfVal, onset = -1;
    for (const auto& L : prof.levels)
        if (L.n % 2 == eps && !L.zero && L.mu < best) {
            best = L.mu;
            onset = L.n;
        }
    if (onset < 0) {
        out.reason = "every computed level of this parity vanishes";
        return;
    }
    const LevelRecord& L = prof.levels[static_cast<size_t>(onset)];
    bool ok = false;
    if (L.mu == 0) {
        ok = true;
        out.reason = "mu_" + std::to_string(onset) + " = 0";
    } else if (onset + 2 < static_cast<int>(prof.levels.size())) {
        const LevelRecord& N = prof.levels[static_cast<size_t>(onset + 2)];
        Int step = pw(p, onset) * int_from(p - 1);
        if (!N.zero && N.mu == L.mu && Int(N.lambda) == Int(L.lambda) + step) {
            ok = true;
            out.reason = "levels " + std::to_string(onset) + " and " + std::to_string(onset + 2) + " follow the progression";
        }
    }
    if (!ok) {
        out.reason = "mu_" + std::to_string(onset) + " = " + std::to_string(L.mu) + " is not certified minimal";
        return;
    }
    out.stabilized = true;
    out.onset = onset;
    out.mu = L.mu;
    Rat lt = Rat(L.lambda) - m_bound(p, onset);
    out.lambda_tilde = static_cast<int>(lt.get_num().get_si());
    Rat shift = eps == 0 ? Rat(1, static_cast<unsigned long>(p + 1)) : Rat(int_from(p), int_from(p + 1));
    out.lambda = lt - shift;
}

}  // namespace

Rat m_bound(i64 p, int n) {
    Int pn = pw(p, n);
    Rat r = n % 2 == 0 ? Rat(pn - 1) : Rat(pn - int_from(p));
    return r / Rat(int_from(p + 1));
}

IwasawaProfile partial_profile(const MazurTateFamily& fam, int sign) {
    IwasawaProfile prof;
    prof.p = fam.ctx.p;
    prof.ap = fam.ctx.ap();
    for (int n = 0; n <= fam.depth; ++n) {
        LambdaMu lm = lambda_mu(fam.polys[static_cast<size_t>(n)], prof.p);
        LevelRecord r;
        r.n = n;
        r.zero = lm.zero;
        r.mu = lm.zero ? kInfVal : lm.mu;
        r.lambda = lm.zero ? 0 : lm.lambda;
        prof.levels.push_back(r);
        prof.M.push_back(m_bound(prof.p, n));
    }
    prof.sign = sign;
    if (sign == 0 && fam.ctx.y_int(0, 0) != 0) {
        prof.sign = 1;
        prof.sign_inferred = true;
    }
    analyse_parity(prof, 0, prof.plus);
    analyse_parity(prof, 1, prof.minus);
    return prof;
}

IwasawaProfile profile(const MazurTateFamily& fam, int sign) {
    if (fam.depth < 2) throw Error(ErrorKind::DepthInsufficient, "profile needs depth at least 2");
    IwasawaProfile prof = partial_profile(fam, sign);
    if (!prof.plus.stabilized)
        throw Error(ErrorKind::DepthInsufficient, "even levels: " + prof.plus.reason);
    if (!prof.minus.stabilized)
        throw Error(ErrorKind::DepthInsufficient, "odd levels: " + prof.minus.reason);
    if (prof.ap != 0 && prof.plus.mu != prof.minus.mu)
        throw Error(ErrorKind::UnsupportedPattern, "a_p != 0 with mu_+ != mu_-");
    return prof;
}

GrowthModel growth_model(const IwasawaProfile& prof) {
    if (!prof.stabilized()) throw Error(ErrorKind::NotStabilized, "growth model needs a stabilized profile");
    GrowthModel g;
    g.p = prof.p;
    g.mu_plus = prof.plus.mu;
    g.mu_minus = prof.minus.mu;
    g.lambda_plus = prof.plus.lambda;
    g.lambda_minus = prof.minus.lambda;
    return g;
}

Rat growth_exponent_rational(const GrowthModel& g, int n) {
    i64 p = g.p;
    Rat P(int_from(p)), P1(int_from(p + 1));
    Rat a = (Rat(pw(p, 2 * (n / 2) + 1)) - P) / P1 * Rat(g.mu_plus);
    Rat b = (Rat(pw(p, 2 * ((n + 1) / 2))) - 1) / P1 * Rat(g.mu_minus);
    Rat c = P / Rat(int_from(p * p - 1)) * (Rat(pw(p, n)) - 1);
    return a + b + c + g.lambda_plus * Rat(n / 2) + g.lambda_minus * Rat((n + 1) / 2);
}

Int growth_exponent(const GrowthModel& g, int n) {
    Rat a = growth_exponent_rational(g, n);
    if (a.get_den() != 1) throw Error(ErrorKind::NotStabilized, "A_" + std::to_string(n) + " = " + a.get_str() + " is not an integer");
    return a.get_num();
}

ShaGrowth sha_growth(const IwasawaProfile& prof, const MazurTateFamily& fam, int tam_val, int rank_s) {
    ShaGrowth out;
    out.model = growth_model(prof);
    out.tam_val = tam_val;
    i64 p = prof.p;
    int depth = fam.depth;
    for (int j = 1; j <= depth; ++j)
        out.layers.push_back(fam.polys[static_cast<size_t>(j)].empty() ? ResultantVal{true, 0}
                                                                         : resultant_valuation(fam.polys[static_cast<size_t>(j)], xi_poly(p, j), p));
    auto level_ok = [&](int j) {
        const LevelRecord& L = prof.levels[static_cast<size_t>(j)];
        const ParityData& d = prof.parity(j);
        if (L.zero || L.mu != d.mu || j < d.onset) return false;
        if (Int(L.lambda) >= pw(p, j - 1) * int_from(p - 1)) return false;
        return Rat(L.lambda) - m_bound(p, j) == Rat(d.lambda_tilde);
    };
    int n0 = depth;
    while (n0 > 0 && level_ok(n0)) --n0;
    out.n0 = n0;
    const LevelRecord& L0 = prof.levels[0];
    out.base_term = L0.zero ? 0 : L0.mu;
    out.determined = !L0.zero && rank_s == 0;
    Rat low = Rat(out.base_term) - Rat(tam_val);
    for (int j = 1; j <= n0; ++j) {
        if (out.layers[static_cast<size_t>(j - 1)].infinite) out.determined = false;
        else low += Rat(out.layers[static_cast<size_t>(j - 1)].val);
    }
    out.offset = low - growth_exponent_rational(out.model, n0);

    std::ostringstream f;
    const GrowthModel& g = out.model;
    Rat c = Rat(int_from(p)) / Rat(int_from(p * p - 1));
    if (g.mu_plus) f << g.mu_plus << "(" << p << "^(2floor(n/2)+1) - " << p << ")/" << p + 1 << " + ";
    if (g.mu_minus) f << g.mu_minus << "(" << p << "^(2floor((n+1)/2)) - 1)/" << p + 1 << " + ";
    f << c.get_num() << "(" << p << "^n - 1)/" << c.get_den();
    f << " + (" << rat_str(g.lambda_plus) << ")floor(n/2) + (" << rat_str(g.lambda_minus) << ")floor((n+1)/2)";
    if (out.determined) {
        if (out.offset != 0) f << (out.offset > 0 ? " + " : " - ") << rat_str(abs(out.offset));
        if (g.mu_plus == 0 && g.mu_minus == 0 && prof.plus.lambda_tilde == 0 && prof.minus.lambda_tilde == 0 && out.offset == 0)
            f << " = floor(" << c.get_num() << "*" << p << "^n/" << c.get_den() << " - n/2)";
    } else {
        f << " + nu";
    }
    out.formula = f.str();
    if (out.determined) {
        for (int n = n0; n <= 12; ++n) {
            Rat v = growth_exponent_rational(g, n) + out.offset;
            if (v.get_den() != 1) throw Error(ErrorKind::NotStabilized, "growth formula is not integral at n = " + std::to_string(n));
            out.table.emplace_back(n, v.get_num());
        }
        Rat acc = Rat(out.base_term) - Rat(tam_val);
        out.direct.emplace_back(0, acc.get_num());
        for (int j = 1; j <= depth; ++j) {
            if (out.layers[static_cast<size_t>(j - 1)].infinite) break;
            acc += Rat(out.layers[static_cast<size_t>(j - 1)].val);
            out.direct.emplace_back(j, acc.get_num());
        }
    }
    return out;
}

XiCoprimality xi_coprimality(const MazurTateFamily& fam, int n) {
    if (n < 1 || n > fam.depth) throw Error(ErrorKind::InvalidConfig, "level outside the family");
    const QPoly& P = fam.polys[static_cast<size_t>(n)];
    if (P.empty()) throw Error(ErrorKind::ZeroDivisor, "P_" + std::to_string(n) + " vanishes");
    i64 p = fam.ctx.p;
    XiCoprimality out;
    ZPoly xi = xi_poly(p, n);
    out.resultant = resultant_valuation(P, xi, p);
    LambdaMu lm = lambda_mu(P, p);
    out.by_degree = Int(lm.lambda) < pw(p, n - 1) * int_from(p - 1);
    if (!out.resultant.infinite) return out;
    out.status = XiStatus::SharedFactor;
    QPoly cur = P, q = to_q(xi);
    while (!cur.empty()) {
        auto [quo, rem] = divrem(cur, q);
        if (!is_zero(rem)) break;
        ++out.multiplicity;
        cur = quo;
    }
    return out;
}

std::string annexe_row(const IwasawaProfile& prof, const std::string& cp, int max_level) {
    std::ostringstream s;
    int levels = static_cast<int>(prof.levels.size());
    // columns stop once both parities have reached a level with mu = 0
    int first[2] = {-1, -1};
    for (int n = 0; n < levels; ++n) {
        const LevelRecord& L = prof.levels[static_cast<size_t>(n)];
        if (!L.zero && L.mu == 0 && first[n % 2] < 0) first[n % 2] = n;
    }
    int last = (first[0] >= 0 && first[1] >= 0) ? std::max(first[0], first[1]) : max_level;
    s << prof.p;
    for (int n = 0; n <= max_level; ++n) {
        s << " | ";
        if (n > last) continue;
        if (n >= levels) {
            s << "-";
            continue;
        }
        const LevelRecord& L = prof.levels[static_cast<size_t>(n)];
        if (L.zero)
            s << "inf";
        else if (n == 0)
            s << L.mu;
        else
            s << L.mu << "," << L.lambda;
    }
    s << " | " << cp << " | ";
    s << (prof.minus.stabilized ? std::to_string(prof.minus.lambda_tilde) : "?") << " | ";
    s << (prof.plus.stabilized ? std::to_string(prof.plus.lambda_tilde) : "?");
    return s.str();
}

}  // namespace ssp
