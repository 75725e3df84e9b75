#include "ssp/frobenius.hpp"

#include "ssp/errors.hpp"

namespace ssp {

Mat2 identity2() {
    Mat2 m;
    m[0][0] = 1;
    m[0][1] = 0;
    m[1][0] = 0;
    m[1][1] = 1;
    return m;
}

Mat2 mul(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Mat2 inverse(const Mat2& a) {
    Rat det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (det == 0) throw Error(ErrorKind::ZeroDivisor, "singular 2x2 matrix");
    Mat2 r;
    r[0][0] = a[1][1] / det;
    r[0][1] = -a[0][1] / det;
    r[1][0] = -a[1][0] / det;
    r[1][1] = a[0][0] / det;
    return r;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] - b[i][j];
    return r;
}

Mat2 scale(const Mat2& a, const Rat& c) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][j] * c;
    return r;
}

bool operator==(const Mat2& a, const Mat2& b) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

FrobeniusData make_frobenius(i64 p, i64 ap) {
    FrobeniusData f;
    f.p = p;
    f.ap = ap;
    f.matrix[0][0] = 0;
    f.matrix[1][0] = 1;
    f.matrix[0][1] = Rat(-1, static_cast<unsigned long>(p));
    f.matrix[1][1] = Rat(int_from(ap), int_from(p));
    f.matrix[1][1].canonicalize();
    return f;
}

DpRat act(const Mat2& m, const DpRat& x) {
    return {m[0][0] * x.u + m[0][1] * x.v, m[1][0] * x.u + m[1][1] * x.v};
}

DpVector act(const Mat2& m, const DpVector& x) {
    i64 p = x.u.p();
    int prec = std::max(x.u.prec(), x.v.prec()) + 4;
    auto c = [&](const Rat& r) { return PadicNum::from_rat(r, p, prec); };
    DpVector out;
    out.u = c(m[0][0]) * x.u + c(m[0][1]) * x.v;
    out.v = c(m[1][0]) * x.u + c(m[1][1]) * x.v;
    return out;
}

DpVector to_padic(const DpRat& x, i64 p, int prec) {
    return {PadicNum::from_rat(x.u, p, prec), PadicNum::from_rat(x.v, p, prec)};
}

DpRat operator+(const DpRat& a, const DpRat& b) { return {a.u + b.u, a.v + b.v}; }
DpRat operator-(const DpRat& a, const DpRat& b) { return {a.u - b.u, a.v - b.v}; }
DpRat operator*(const Rat& c, const DpRat& a) { return {c * a.u, c * a.v}; }

Mat2 phi_power(const FrobeniusData& f, int k) {
    Mat2 base = k >= 0 ? f.matrix : inverse(f.matrix);
    Mat2 r = identity2();
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) r = mul(base, r);
    return r;
}

DpRat phi_power_apply(const FrobeniusData& f, int k, const DpRat& x) { return act(phi_power(f, k), x); }

DpVector phi_power_apply(const FrobeniusData& f, int k, const DpVector& x) {
    DpVector r = act(phi_power(f, k), x);
    int floor = -(std::abs(k) + 2);
    if ((!r.u.is_zero() && r.u.val() < floor) || (!r.v.is_zero() && r.v.val() < floor))
        throw Error(ErrorKind::PrecisionTooLow, "phi power left the valuation floor");
    return r;
}

Mat2 euler_operator(const FrobeniusData& f) {
    Mat2 I = identity2();
    Mat2 a = inverse(I - f.matrix);
    Mat2 b = I - scale(inverse(f.matrix), Rat(1, static_cast<unsigned long>(f.p)));
    return mul(a, b);
}

std::pair<PadicNum, PadicNum> xy_coordinates(const DpVector& x) {
    PadicNum mp = PadicNum::from_int(int_from(-x.v.p()), x.v.p(), x.v.prec() + 2);
    return {x.u, x.v / mp};
}

std::pair<Rat, Rat> xy_coordinates(const DpRat& x, i64 p) {
    return {x.u, -x.v / Rat(int_from(p))};
}

bool unit_equivalent(const DpVector& x, const DpVector& y, int digits) {
    auto same_val = [](const PadicNum& a, const PadicNum& b) {
        if (a.is_zero()) return b.is_zero() || b.val() >= a.prec();
        if (b.is_zero()) return a.val() >= b.prec();
        return a.val() == b.val();
    };
    if (!same_val(x.u, y.u) || !same_val(x.v, y.v)) return false;
    // proportional: x.u*y.v == x.v*y.u to the required relative precision
    PadicNum lhs = x.u * y.v, rhs = x.v * y.u;
    int base = std::min(lhs.is_zero() ? kInfVal : lhs.val(), rhs.is_zero() ? kInfVal : rhs.val());
    if (base == kInfVal) return true;
    return lhs.congruent(rhs, base + digits);
}

}  // namespace ssp
