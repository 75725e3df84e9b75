#pragma once

#include "ssp/arith.hpp"
#include "ssp/frobenius.hpp"
#include "ssp/padic.hpp"
#include "ssp/real.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ssp {

struct WeierstrassCurve {
    std::string label;
    Int a1, a2, a3, a4, a6;
    Int b2, b4, b6, b8, c4, c6;
    Int disc;
    Int j_num, j_den;
    i64 conductor = 0;
    std::optional<i64> tamagawa_product;
    std::optional<i64> torsion_order;

    std::array<Int, 5> ainvs() const { return {a1, a2, a3, a4, a6}; }
    int real_components() const { return disc > 0 ? 2 : 1; }
};

WeierstrassCurve derive_invariants(const Int& a1, const Int& a2, const Int& a3, const Int& a4, const Int& a6,
                                   i64 conductor = 0, const std::string& label = "");
WeierstrassCurve derive_invariants(const std::array<i64, 5>& a, i64 conductor = 0, const std::string& label = "");

// a_l = l + 1 - #E(F_l); good reduction only
i64 count_points_mod(const WeierstrassCurve& E, i64 l);
// same count on the reduced (possibly singular) cubic, valid at bad primes of a minimal model
i64 trace_of_frobenius(const WeierstrassCurve& E, i64 l);
bool is_supersingular(const WeierstrassCurve& E, i64 p);

// Hecke eigenvalues a_1..a_n (a[0] unused)
std::vector<i64> hecke_coefficients(const WeierstrassCurve& E, i64 n);

WeierstrassCurve quadratic_twist(const WeierstrassCurve& E, i64 D, i64 p = 0);

struct Periods {
    Real omega_plus;   // least positive real period
    Real omega_minus;  // least positive imaginary part of a period
};
Periods real_periods(const WeierstrassCurve& E, int precision_bits = 128);

// L(E, chi_D, 1) assuming the twisted root number is +1; D = 1 gives L(E,1)
Real twisted_l_value(const WeierstrassCurve& E, i64 D, int precision_bits = 128);
// root number of E twisted by D, read off the functional equation numerically
int twisted_root_number(const WeierstrassCurve& E, i64 D, int precision_bits = 128);

struct CurvePoint {
    bool infinity = true;
    Rat x, y;
    static CurvePoint at_infinity() { return {}; }
    static CurvePoint affine(const Rat& x, const Rat& y) { return {false, x, y}; }
};
bool on_curve(const WeierstrassCurve& E, const CurvePoint& P);
CurvePoint negate(const WeierstrassCurve& E, const CurvePoint& P);
CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint multiply(const WeierstrassCurve& E, const CurvePoint& P, i64 n);

// coefficients of the formal logarithm: lambda(t) = sum_k c[k] t^k, c[0] = 0, c[1] = 1
std::vector<Rat> formal_log(const WeierstrassCurve& E, i64 p, int M);
PadicNum eval_formal_log(const std::vector<Rat>& series, const Rat& t, i64 p, int M);

struct PointLog {
    i64 multiplier = 0;   // n with nP in the formal group (0 for the point at infinity)
    PadicNum log_np;      // lambda(t(nP))
    PadicNum log_p;       // lambda(t(nP)) / n
};
PointLog point_log(const WeierstrassCurve& E, i64 p, const CurvePoint& P, int M);

FrobeniusData frobenius_data(const WeierstrassCurve& E, i64 p);

}  // namespace ssp
