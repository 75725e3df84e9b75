#pragma once

#include "ssp/arith.hpp"
#include "ssp/padic.hpp"

#include <array>

namespace ssp {

using Mat2 = std::array<std::array<Rat, 2>, 2>;

Mat2 identity2();
Mat2 mul(const Mat2& a, const Mat2& b);
Mat2 inverse(const Mat2& a);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 scale(const Mat2& a, const Rat& c);
bool operator==(const Mat2& a, const Mat2& b);

// phi acting on coordinates in the basis (omega, phi omega)
struct FrobeniusData {
    i64 p = 0;
    i64 ap = 0;
    Mat2 matrix;  // columns are phi(omega) and phi(phi omega)
};

FrobeniusData make_frobenius(i64 p, i64 ap);

// u*omega + v*phi(omega), exact
struct DpRat {
    Rat u = 0, v = 0;
};

// u*omega + v*phi(omega), p-adic
struct DpVector {
    PadicNum u, v;
};

DpRat act(const Mat2& m, const DpRat& x);
DpVector act(const Mat2& m, const DpVector& x);
DpVector to_padic(const DpRat& x, i64 p, int prec);
DpRat operator+(const DpRat& a, const DpRat& b);
DpRat operator-(const DpRat& a, const DpRat& b);
DpRat operator*(const Rat& c, const DpRat& a);

Mat2 phi_power(const FrobeniusData& f, int k);
DpRat phi_power_apply(const FrobeniusData& f, int k, const DpRat& x);
DpVector phi_power_apply(const FrobeniusData& f, int k, const DpVector& x);

// (1 - phi)^{-1} (1 - p^{-1} phi^{-1})
Mat2 euler_operator(const FrobeniusData& f);

// write x = X omega - Y p phi(omega)
std::pair<PadicNum, PadicNum> xy_coordinates(const DpVector& x);
std::pair<Rat, Rat> xy_coordinates(const DpRat& x, i64 p);

// x ~ y: same valuations and proportional coordinates up to a unit, checked to `digits` relative digits
bool unit_equivalent(const DpVector& x, const DpVector& y, int digits);

}  // namespace ssp
