#pragma once

#include "ssp/arith.hpp"
#include "ssp/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ssp {

// Capped absolute precision: the value is known modulo p^prec.
// A value with val == prec is zero to that precision.
class PadicNum {
public:
    PadicNum() = default;
    PadicNum(i64 p, int prec);  // zero mod p^prec

    static PadicNum from_rat(const Rat& x, i64 p, int prec);
    static PadicNum from_int(const Int& x, i64 p, int prec) { return from_rat(Rat(x), p, prec); }

    i64 p() const { return p_; }
    int prec() const { return prec_; }
    int val() const { return val_; }
    int rel_prec() const { return prec_ - val_; }
    bool is_zero() const { return val_ >= prec_; }
    const Int& unit() const { return unit_; }

    // the rational p^val * unit with 0 <= unit < p^rel
    Rat to_rat() const;
    // integer representative in [0, p^prec) when val >= 0
    Int lift() const;
    // p-adic digits d_val .. d_{prec-1}
    std::vector<int> digits() const;
    PadicNum with_prec(int prec) const;

    PadicNum operator-() const;
    friend PadicNum operator+(const PadicNum& a, const PadicNum& b);
    friend PadicNum operator-(const PadicNum& a, const PadicNum& b);
    friend PadicNum operator*(const PadicNum& a, const PadicNum& b);
    friend PadicNum operator/(const PadicNum& a, const PadicNum& b);
    PadicNum& operator+=(const PadicNum& b) { return *this = *this + b; }
    PadicNum& operator-=(const PadicNum& b) { return *this = *this - b; }
    PadicNum& operator*=(const PadicNum& b) { return *this = *this * b; }

    // congruent modulo p^k (k capped by both precisions)
    bool congruent(const PadicNum& b, int k) const;

    std::string str() const;  // "d0*p^v + d1*p^(v+1) + ... + O(p^prec)"

private:
    void normalize();
    i64 p_ = 0;
    int prec_ = 0;
    int val_ = 0;
    Int unit_ = 0;
};

using PadicPoly = std::vector<PadicNum>;

struct LambdaMu {
    bool zero = false;  // identically zero (mu = infinity)
    int mu = 0;
    int lambda = 0;
};

LambdaMu lambda_mu(const QPoly& f, i64 p);
LambdaMu lambda_mu(const ZPoly& f, i64 p);
LambdaMu lambda_mu(const PadicPoly& f);  // PrecisionTooLow if zero only to precision

ZPoly omega_poly(i64 p, int n);
ZPoly xi_poly(i64 p, int n);

PadicNum teichmuller(i64 a, i64 p, int prec);
// exponent r in [0, p^n) with (1+p)^r = <a> mod p^{n+1}
i64 cyclo_dlog(i64 a, i64 p, int n);

// r_n(a) for all a mod p^{n+1}; entries for multiples of p are -1
class RnTable {
public:
    RnTable(i64 p, int n);
    i64 operator()(i64 a) const { return table_[static_cast<size_t>(modn(a, mod_))]; }
    i64 modulus() const { return mod_; }

private:
    i64 mod_;
    std::vector<i64> table_;
};

struct ResultantVal {
    bool infinite = false;  // P shares the factor Q
    int val = 0;
};

ResultantVal resultant_valuation(const QPoly& P, const ZPoly& Q, i64 p);
ResultantVal resultant_valuation(const PadicPoly& P, const ZPoly& Q);

std::string to_string(const PadicPoly& f);

}  // namespace ssp
