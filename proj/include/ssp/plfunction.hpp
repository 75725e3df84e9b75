#pragma once

#include "ssp/curve.hpp"
#include "ssp/frobenius.hpp"
#include "ssp/modsym.hpp"
#include "ssp/padic.hpp"
#include "ssp/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ssp {

struct MeasureContext {
    WeierstrassCurve E;  // curve carrying the modular symbols
    i64 p = 0;
    i64 d = 1;           // quadratic twist discriminant
    int branch = 0;      // Teichmuller branch j
    int prec = 25;
    FrobeniusData frob;  // Frobenius of E; the twisted measure obeys the same distribution law
    std::shared_ptr<const SymbolPair> syms;

    i64 ap() const { return frob.ap; }
    int symbol_sign() const { return d > 0 ? 1 : -1; }
    const EigenSymbol& symbol() const { return syms->by_sign(symbol_sign()); }
    i64 twisted_ap() const { return d == 1 ? frob.ap : kronecker(d, p) * frob.ap; }
    // unscaled y(a, n) = sum over b = a mod p^n, b < p^n |d| of chi_d(b) phi(b / (p^n |d|))
    i64 y_int(i64 a, int n) const;
    Rat y(i64 a, int n) const { return symbol().scaling() * Rat(int_from(y_int(a, n))); }
};

MeasureContext make_context(const WeierstrassCurve& E, i64 p, i64 d = 1, int branch = 0, int prec = 25,
                            std::shared_ptr<const SymbolPair> syms = nullptr);

// mu(a + p^n Z_p) = y(a,n) phi^n(omega) - y(a,n-1) phi^{n+1}(omega)
DpRat measure_value(const MeasureContext& ctx, i64 a, int n);

QPoly mazur_tate(const MeasureContext& ctx, int n);               // branch 0, exact
PadicPoly mazur_tate_branch(const MeasureContext& ctx, int n);    // any branch, to ctx.prec digits

struct MazurTateFamily {
    MeasureContext ctx;
    int depth = 0;
    std::vector<QPoly> polys;  // P_0 .. P_depth
};

MazurTateFamily build_family(const MeasureContext& ctx, int depth);

struct FamilyCheck {
    int levels_checked = 0;
    bool base_relation = false;  // (a_p - 2) P_1 = ((a_p - 2) a_p - (p - 1)) P_0 mod x
};
// throws RecurrenceViolated on failure
FamilyCheck check_family(const MazurTateFamily& fam);

struct PadicValue {
    DpVector value;
    int level = 0;           // Riemann level 2m
    int error_exponent = 0;  // error lies in p^e M'_E
};

// sum over a in [1, p^{2m}) prime to p of a^k mu(a + p^{2m})
PadicValue special_value(const MeasureContext& ctx, i64 k, int m);
// sum of log_p(a)^r mu(a + p^{2m}) (not divided by r!)
PadicValue derivative_value(const MeasureContext& ctx, int r, int m);

struct LeadingTerm {
    int order = 0;
    DpVector value;           // derivative / r!
    DpVector euler_modified;  // (1 - phi)^{-1} (1 - p^{-1} phi^{-1}) value
    DpVector reported;        // L(E/Q_p, 1) * euler_modified
    PadicNum omega_component; // Z_1 / (p + 1 - a_p), coefficient of omega
    int error_exponent = 0;
    bool lower_orders_exact = false;
    std::string certification;
};

// sign: analytic root number if known (0 = unknown)
LeadingTerm leading_term(const MeasureContext& ctx, int r, int m, int sign = 0);

// p-adic log of integers as residues mod p^K (log_p(a) = log(a^{p-1}) / (p-1))
class LogTable {
public:
    LogTable(i64 p, int K, int table_bits = 20);
    u64 log(u64 a) const;
    u64 modulus() const { return mod_; }

private:
    i64 p_;
    int K_, h_;
    u64 mod_, ph_;
    std::vector<u64> logt_, invt_;
    std::vector<u64> coef_;  // coefficient of u^j in log(1 + p^h u), j >= 1
};

}  // namespace ssp
