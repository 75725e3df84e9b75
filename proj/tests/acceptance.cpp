// Acceptance run: one PASS/FAIL line per criterion.
#include "property_checks.hpp"

#include "ssp/diagnostics.hpp"
#include "ssp/report.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace ssp;

namespace {

// runtime bounds in seconds
constexpr double kLimitUnitRow = 60;
constexpr double kLimitTwist373 = 600;
constexpr double kLimitRank1 = 300;

// Riemann depth for the 43A derivative: m = 2 certifies too few digits for the
// five quoted ones, so the run uses the smallest depth that certifies all of them
constexpr int kRiemann43 = 5;
constexpr int kRiemann37 = 3;
constexpr int kRiemann1909 = 3;

struct Criterion {
    bool ok = true;
    std::vector<std::string> failures;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

std::shared_ptr<const SymbolPair> symbols(const WeierstrassCurve& E) {
    static std::map<i64, std::shared_ptr<const SymbolPair>> cache;
    auto& s = cache[E.conductor];
    if (!s) s = std::make_shared<const SymbolPair>(normalized_symbols(E));
    return s;
}

WeierstrassCurve curve(const std::string& label) {
    auto rec = builtin_curve(label);
    if (!rec) throw std::runtime_error("no built-in curve " + label);
    return derive_invariants(rec->a[0], rec->a[1], rec->a[2], rec->a[3], rec->a[4], rec->conductor, label);
}

MazurTateFamily family(const WeierstrassCurve& E, i64 p, i64 d, int depth) {
    return build_family(make_context(E, p, d, 0, 25, symbols(E)), depth);
}

LambdaMu lm(const MazurTateFamily& f, int n) { return lambda_mu(f.polys[static_cast<size_t>(n)], f.ctx.p); }

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ') out += c;
    return out;
}

// X omega - p Y phi(omega) agrees with Xt omega - p Yt phi(omega) up to a unit, modulo p^K
bool unit_equivalent_mod(const DpVector& x, const Rat& Xt, const Rat& Yt, i64 p, int K, std::string* why) {
    auto [X, Y] = xy_coordinates(x);
    int vx = vp(Xt, p), vy = vp(Yt, p);
    std::ostringstream s;
    s << "X=" << X.str() << " Y=" << Y.str();
    *why = s.str();
    if (X.val() != vx || Y.val() != vy) return false;
    if (X.prec() < K || Y.prec() < K) return false;
    PadicNum cross = X * PadicNum::from_rat(Yt, p, K + 2) - Y * PadicNum::from_rat(Xt, p, K + 2);
    return cross.is_zero() || cross.val() >= K + std::min(vx, vy);
}

Rat digits(i64 p, std::initializer_list<std::pair<int, int>> terms) {
    Rat r = 0;
    for (auto [d, e] : terms) r += Rat(int_from(d * ipow(p, e)));
    return r;
}

int failures = 0;

void report(int n, const std::string& title, const std::function<void(Criterion&)>& body) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (c.ok ? "PASS" : "FAIL") << " [" << n << "] " << title << " (" << static_cast<int>(dt * 10) / 10.0 << " s)";
    for (const auto& f : c.failures) line << " | " << f;
    std::cout << line.str() << std::endl;
    if (!c.ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Row {
    std::string curve;
    i64 d, p;
    int depth;
    std::string expected;  // p|mu0|mu1,lam1|...|CP|lt-|lt+
    std::optional<int> rank;
};

}  // namespace

int main() {
    report(1, "17A p=3 depth 5: unit L-value row and Kurihara growth", [](Criterion& c) {
        auto t0 = std::chrono::steady_clock::now();
        auto E = curve("17A");
        auto fam = family(E, 3, 1, 5);
        const int lam[] = {0, 0, 2, 6, 20, 60};
        for (int n = 0; n <= 5; ++n) {
            auto x = lm(fam, n);
            c.require(!x.zero && x.mu == 0, "mu_" + std::to_string(n) + " != 0");
            if (n >= 2) c.require(x.lambda == lam[n], "lambda_" + std::to_string(n) + " = " + std::to_string(x.lambda));
        }
        auto prof = profile(fam);
        auto g = sha_growth(prof, fam, 0);
        for (auto [n, v] : g.table) {
            // floor(3^{n+1}/8 - n/2) computed directly
            Int num = Int(static_cast<long>(ipow(3, n + 1))) - 4 * n;
            Int fl;
            mpz_fdiv_q_ui(fl.get_mpz_t(), num.get_mpz_t(), 8);
            c.require(v == fl, "A_" + std::to_string(n) + " = " + v.get_str() + ", expected " + fl.get_str());
        }
        c.require(g.table.size() >= 13, "growth table shorter than n <= 12");
        c.require(g.formula.find("floor(3*3^n/8 - n/2)") != std::string::npos, "formula: " + g.formula);
        c.require(seconds_since(t0) < kLimitUnitRow, "runtime over 60 s");
    });

    report(2, "17A(373) p=3 depth 3: twisted rank 0 with Sha(3) of order 9", [](Criterion& c) {
        auto t0 = std::chrono::steady_clock::now();
        auto E = curve("17A");
        auto fam = family(E, 3, 373, 3);
        auto l0 = lm(fam, 0), l1 = lm(fam, 1), l2 = lm(fam, 2);
        c.require(l0.mu == 2 && l1.mu == 0 && l2.mu == 0, "mu row");
        c.require(l1.lambda == 2 && l2.lambda == 6, "lambda row");
        auto prof = profile(fam);
        c.require(prof.plus.lambda_tilde == 4 && prof.minus.lambda_tilde == 2, "lambda tilde");
        auto T = quadratic_twist(E, 373, 3);
        auto v = diagnose(prof, fam, std::nullopt, std::nullopt, 0, std::nullopt, serre_check(T, 3));
        c.require(v.status == CpStatus::CP, std::string("verdict ") + cp_name(v.status));
        c.require(v.sha_exponent == 2, "Sha exponent");
        auto g = sha_growth(prof, fam, 0);
        c.require(g.model.lambda_plus == Rat(15, 4) && g.model.lambda_minus == Rat(5, 4), "lambda_+/-");
        c.require(g.offset == 2, "offset " + g.offset.get_str());
        c.require(g.formula == "3(3^n - 1)/8 + (15/4)floor(n/2) + (5/4)floor((n+1)/2) + 2", "formula: " + g.formula);
        // 3(3^n-1)/8 coefficient: A_n - A_{n-2} for even n is 3^{n-1} + 15/4 + 5/4
        for (auto [n, a] : g.table) {
            Rat expect = Rat(int_from(3 * (ipow(3, n) - 1))) / 8 + Rat(15, 4) * (n / 2) + Rat(5, 4) * ((n + 1) / 2) + 2;
            c.require(Rat(a) == expect, "table entry n=" + std::to_string(n));
        }
        c.require(seconds_since(t0) < kLimitTwist373, "runtime over 10 min");
    });

    report(3, "17A(-167) p=3: explicit P_2 and invariants row", [](Criterion& c) {
        auto E = curve("17A");
        auto fam = family(E, 3, -167, 4);
        const long target[] = {108, 540, 1548, 2628, 2808, 1944, 852, 216, 24};
        const QPoly& P2 = fam.polys[2];
        c.require(P2.size() == 9, "degree of P_2");
        if (P2.size() == 9) {
            Rat u = P2[0] / 108;
            c.require(vp(u, 3) == 0, "scalar is not a 3-adic unit");
            // exact proportionality implies agreement to any number of digits, in particular 6
            for (int i = 0; i < 9; ++i) c.require(P2[static_cast<size_t>(i)] == u * target[i], "coefficient " + std::to_string(i));
        }
        auto prof = partial_profile(fam);
        std::string row = strip(annexe_row(prof, ""));
        c.require(row.rfind("3|2|1,2|1,6|0,10|0,28|", 0) == 0, "row " + row);
    });

    report(4, "40A(-379) p=3: layer resultants and growth formula", [](Criterion& c) {
        auto E = curve("40A");
        auto fam = family(E, 3, -379, 4);
        const QPoly& P1 = fam.polys[1];
        c.require(P1.size() == 2 && P1[0] == P1[1] && vp(P1[0] / -144, 3) == 0, "P_1 not a unit times -144(x+1)");
        auto r1 = resultant_valuation(P1, xi_poly(3, 1), 3);
        auto r2 = resultant_valuation(fam.polys[2], xi_poly(3, 2), 3);
        c.require(!r1.infinite && r1.val == 4, "layer 1 = " + std::to_string(r1.val));
        c.require(!r2.infinite && r2.val == 10, "layer 2 = " + std::to_string(r2.val));
        auto prof = profile(fam);
        auto g = sha_growth(prof, fam, 0);
        c.require(g.formula == "3(3^n - 1)/8 + (31/4)floor(n/2) + (13/4)floor((n+1)/2) + 2", "formula: " + g.formula);
        for (auto [n, a] : g.direct)
            if (n >= g.n0) {
                Rat expect = Rat(int_from(3 * (ipow(3, n) - 1))) / 8 + Rat(31, 4) * (n / 2) + Rat(13, 4) * ((n + 1) / 2) + 2;
                c.require(Rat(a) == expect, "layer sum n=" + std::to_string(n));
            }
    });

    report(5, "43A p=7: rank-1 digits, log of 8P, CP with trivial Sha(7)", [](Criterion& c) {
        auto t0 = std::chrono::steady_clock::now();
        auto E = curve("43A");
        auto fam = family(E, 7, 1, 2);
        c.require(lm(fam, 1).lambda == 1 && lm(fam, 2).lambda == 9, "lambda_1, lambda_2");
        auto lt = leading_term(fam.ctx, 1, kRiemann43, -1);
        std::string why;
        Rat X = digits(7, {{5, 1}, {6, 2}, {4, 3}, {4, 4}}), Y = digits(7, {{3, 1}, {4, 2}, {3, 3}, {5, 4}});
        c.require(unit_equivalent_mod(lt.reported, X, Y, 7, 5, &why), "leading term " + why);
        auto P = CurvePoint::affine(0, 0);
        PointData pd{P, point_log(E, 7, P, 6)};
        PadicNum log8 = pd.log.log_p * PadicNum::from_int(8, 7, 6);
        c.require(log8.congruent(PadicNum::from_int(28, 7, 6), 2), "log(8P) = " + log8.str());
        auto prof = partial_profile(fam);
        auto v = diagnose(prof, fam, lt, pd, 0, std::nullopt, serre_check(E, 7));
        c.require(v.status == CpStatus::CP, std::string("verdict ") + cp_name(v.status));
        c.require(v.sha_exponent == 0, "Sha(7) not trivial");
        c.require(seconds_since(t0) < kLimitRank1, "runtime over 5 min");
    });

    report(6, "37A p=17 and p=19: rank-1 digits and lambda+/-", [](Criterion& c) {
        auto E = curve("37A");
        struct Case {
            i64 p;
            Rat X, Y, lp, lm;
        };
        std::vector<Case> cases = {
            {17, digits(17, {{4, 1}, {11, 2}}), digits(17, {{8, 1}, {12, 2}}), Rat(53, 18), Rat(1, 18)},
            {19, digits(19, {{13, 1}, {10, 2}}), digits(19, {{18, 1}, {7, 2}}), Rat(19, 20), Rat(1, 20)},
        };
        for (const auto& k : cases) {
            std::string tag = "p=" + std::to_string(k.p) + " ";
            auto fam = family(E, k.p, 1, 2);
            c.require(lm(fam, 1).lambda == 1 && lm(fam, 2).lambda == 19, tag + "lambda_1, lambda_2");
            auto lt = leading_term(fam.ctx, 1, kRiemann37, -1);
            std::string why;
            c.require(unit_equivalent_mod(lt.reported, k.X, k.Y, k.p, 3, &why), tag + "digits " + why);
            auto prof = partial_profile(fam);
            c.require(prof.plus.lambda == k.lp && prof.minus.lambda == k.lm,
                      tag + "lambda+/- = " + prof.plus.lambda.get_str() + ", " + prof.minus.lambda.get_str());
        }
    });

    report(7, "1909A p=3: rank 2, CP with rank hint, second derivative", [](Criterion& c) {
        auto E = curve("1909A");
        auto fam = family(E, 3, 1, 2);
        auto l1 = lm(fam, 1), l2 = lm(fam, 2);
        c.require(l1.mu == 0 && l2.mu == 0 && l1.lambda == 2 && l2.lambda == 4, "level invariants");
        auto prof = partial_profile(fam);
        c.require(prof.plus.lambda_tilde == 2 && prof.minus.lambda_tilde == 2, "lambda tilde");
        auto lt = leading_term(fam.ctx, 2, kRiemann1909, 1);
        std::string why;
        c.require(unit_equivalent_mod(lt.reported, Rat(18), Rat(18), 3, 3, &why), "second derivative " + why);
        auto v = diagnose(prof, fam, lt, std::nullopt, 0, 2, serre_check(E, 3));
        c.require(v.status == CpStatus::CP, std::string("verdict ") + cp_name(v.status));
    });

    report(8, "surjectivity: 43A@7 squarefree, 1952C@3 inconclusive", [](Criterion& c) {
        auto E43 = curve("43A");
        auto s43 = serre_check(E43, 7);
        c.require(s43.status == SurjectivityStatus::Surjective, "43A not surjective");
        bool sq = false;
        for (const auto& r : s43.reasons) sq = sq || (r.criterion == "squarefree" && r.value == 43);
        c.require(sq, "no squarefree witness");
        auto E1952 = curve("1952C");
        auto s1952 = serre_check(E1952, 3);
        c.require(s1952.status == SurjectivityStatus::Inconclusive, "1952C not inconclusive");
        Int root;
        Int absd = abs(E1952.disc);
        c.require(mpz_root(root.get_mpz_t(), absd.get_mpz_t(), 3) != 0 && root == 976, "discriminant is not (16*61)^3");
        Report r;
        r.surjectivity = s43;
        auto j = to_json(r);
        c.require(j["surjectivity"]["witnesses"].size() == s43.reasons.size(), "witnesses not serialized");
        c.require(j["surjectivity"]["witnesses"][0].contains("ell"), "witness without ell");
    });

    report(9, "property suites", [](Criterion& c) {
        using namespace ssp::props;
        auto add = [&](const char* name, const Outcome& o, int min_cases) {
            c.require(o.ok, std::string(name) + ": " + o.detail);
            c.require(o.cases >= min_cases, std::string(name) + ": only " + std::to_string(o.cases) + " cases");
        };
        add("distribution", distribution_relation(100, 20240601), 100);
        add("recurrences", recurrences(), 10);
        add("parity", symbol_parity(50, 7), 50);
        add("additivity", lambda_mu_additivity(200, 11), 200);
        add("resultant", resultant_oracle(50, 13), 50);
        add("congruence", riemann_congruence(10), 10);
        add("integrality", growth_integrality(), 13);
    });

    report(10, "Annexe C regression rows", [](Criterion& c) {
        const std::vector<Row> rows = {
            {"17A", 373, 3, 3, "3|2|0,2|0,6|||CP|2|4", std::nullopt},
            {"17A", -167, 3, 4, "3|2|1,2|1,6|0,10|0,28|CP|4|8", std::nullopt},
            {"40A", -379, 3, 4, "3|2|2,0|1,4|0,10|0,28|CP|4|8", std::nullopt},
            {"142C", 53, 3, 3, "3|3|0,2|0,6|||CP|2|4", std::nullopt},
            {"142C", 461, 3, 3, "3|3|2,2|0,4|0,12||CP|6|2", std::nullopt},
            {"142C", -139, 3, 3, "3|3|1,2|0,4|0,10||CP|4|2", std::nullopt},
            {"142C", -467, 3, 3, "3|3|2,2|0,4|0,10||CP|4|2", std::nullopt},
            {"52A", -499, 3, 3, "3|3|2,2|0,4|0,10||CP|4|2", std::nullopt},
            {"52A", 469, 3, 3, "3|3|1,2|0,4|0,10||CP|4|2", std::nullopt},
            {"142C", -211, 3, 3, "3|3|0,2|0,4|||*CP-tam|2|2", std::nullopt},
            {"52A", -331, 3, 3, "3|3|0,2|0,4|||*CP-tam|2|2", std::nullopt},
            {"124B", 109, 3, 3, "3|3|0,2|0,4|||*CP-tam|2|2", std::nullopt},
            {"142C", 485, 3, 3, "3|3|1,2|0,6|0,12|||6|4", std::nullopt},
            {"142C", 493, 3, 3, "3|3|1,2|0,6|0,16|||10|4", std::nullopt},
            {"124B", 485, 3, 3, "3|3|2,2|0,8|0,10|||4|6", std::nullopt},
            {"124B", 205, 3, 3, "3|3|1,2|0,6|0,10|||4|4", std::nullopt},
            {"43A", 1, 7, 2, "7|inf|0,1|0,9|||*CP|1|3", std::nullopt},
            {"17A", -239, 3, 3, "3|inf|1,1|0,3|0,15||*CP|9|1", std::nullopt},
            {"34A", -11, 5, 3, "5|inf|1,1|0,5|0,25||*CP|5|1", std::nullopt},
            {"98A", 269, 5, 3, "5|inf|1,3|0,5|0,25||*CP|5|1", std::nullopt},
            {"14A", 185, 11, 2, "11|inf|0,5|0,11|||*CP|5|1", std::nullopt},
            {"11A", 61, 19, 2, "19|inf|0,3|0,19|||*CP|3|1", std::nullopt},
            {"11A", 65, 19, 2, "19|inf|0,5|0,19|||*CP|5|1", std::nullopt},
            {"46A", 29, 3, 3, "3|inf|1,1|0,5|0,13||*CP|7|3", std::nullopt},
            {"52A", 293, 3, 3, "3|inf|1,1|0,5|0,15||*CP|9|3", std::nullopt},
            {"94A", 137, 3, 3, "3|inf|1,1|0,5|0,17||*CP|11|3", std::nullopt},
            {"62A", -59, 3, 4, "3|inf|1,1|1,3|0,9|0,29|*CP|3|9", std::nullopt},
            {"43A", -4, 7, 3, "7|inf|1,1|0,7|0,49||*CP|7|1", std::nullopt},
            {"17A", -19, 3, 3, "3|inf|inf|0,3|0,9||*CP|3|1", std::nullopt},
            {"1909A", 1, 3, 2, "3|inf|0,2|0,4|||CP|2|2", 2},
        };
        int matched = 0;
        for (const auto& row : rows) {
            auto E = curve(row.curve);
            auto fam = family(E, row.p, row.d, row.depth);
            auto prof = partial_profile(fam);
            auto T = row.d == 1 ? E : quadratic_twist(E, row.d, row.p);
            auto v = diagnose(prof, fam, std::nullopt, std::nullopt, std::nullopt, row.rank, serre_check(T, row.p));
            std::string got = strip(annexe_row(prof, cp_label(v.status)));
            std::string tag = row.curve + "(" + std::to_string(row.d) + ")@" + std::to_string(row.p);
            if (got == row.expected)
                ++matched;
            else
                c.require(false, tag + " gave " + got);
        }
        c.require(matched >= 10, "fewer than 10 rows matched");
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
