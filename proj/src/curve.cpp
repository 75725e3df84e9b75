#include "ssp/curve.hpp"

#include "ssp/errors.hpp"

#include <cmath>
#include <complex>

namespace ssp {

RealPrecision::RealPrecision(int bits) : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
}

RealPrecision::~RealPrecision() { Real::default_precision(saved_); }

WeierstrassCurve derive_invariants(const Int& a1, const Int& a2, const Int& a3, const Int& a4, const Int& a6,
                                   i64 conductor, const std::string& label) {
    WeierstrassCurve E;
    E.label = label;
    E.a1 = a1;
    E.a2 = a2;
    E.a3 = a3;
    E.a4 = a4;
    E.a6 = a6;
    E.b2 = a1 * a1 + 4 * a2;
    E.b4 = 2 * a4 + a1 * a3;
    E.b6 = a3 * a3 + 4 * a6;
    E.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    E.c4 = E.b2 * E.b2 - 24 * E.b4;
    E.c6 = -E.b2 * E.b2 * E.b2 + 36 * E.b2 * E.b4 - 216 * E.b6;
    E.disc = -E.b2 * E.b2 * E.b8 - 8 * E.b4 * E.b4 * E.b4 - 27 * E.b6 * E.b6 + 9 * E.b2 * E.b4 * E.b6;
    if (E.disc == 0) throw Error(ErrorKind::SingularCurve, "discriminant vanishes");
    Rat j(E.c4 * E.c4 * E.c4, E.disc);
    j.canonicalize();
    E.j_num = j.get_num();
    E.j_den = j.get_den();
    E.conductor = conductor;
    return E;
}

WeierstrassCurve derive_invariants(const std::array<i64, 5>& a, i64 conductor, const std::string& label) {
    return derive_invariants(int_from(a[0]), int_from(a[1]), int_from(a[2]), int_from(a[3]), int_from(a[4]),
                             conductor, label);
}

namespace {

i64 mod_small(const Int& x, i64 l) { return static_cast<i64>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(l))); }

i64 count_affine_and_trace(const WeierstrassCurve& E, i64 l) {
    if (l == 2) {
        i64 a1 = mod_small(E.a1, 2), a2 = mod_small(E.a2, 2), a3 = mod_small(E.a3, 2), a4 = mod_small(E.a4, 2),
            a6 = mod_small(E.a6, 2);
        i64 cnt = 1;
        for (i64 x = 0; x < 2; ++x)
            for (i64 y = 0; y < 2; ++y)
                if (((y * y + a1 * x * y + a3 * y) - (x * x * x + a2 * x * x + a4 * x + a6)) % 2 == 0) ++cnt;
        return 3 - cnt;
    }
    i64 b2 = mod_small(E.b2, l), b4 = mod_small(E.b4, l), b6 = mod_small(E.b6, l);
    std::vector<signed char> chi(static_cast<size_t>(l), -1);
    chi[0] = 0;
    for (i64 y = 1; y < l; ++y) chi[static_cast<size_t>(y * y % l)] = 1;
    i64 s = 0;
    for (i64 x = 0; x < l; ++x) {
        i64 f = ((4 * x % l + b2) % l * x % l + 2 * b4) % l;
        f = (f * x + b6) % l;
        s += chi[static_cast<size_t>(f)];
    }
    return -s;
}

}  // namespace

i64 trace_of_frobenius(const WeierstrassCurve& E, i64 l) { return count_affine_and_trace(E, l); }

i64 count_points_mod(const WeierstrassCurve& E, i64 l) {
    if (mpz_divisible_ui_p(E.disc.get_mpz_t(), static_cast<unsigned long>(l)))
        throw Error(ErrorKind::BadReduction, "prime " + std::to_string(l) + " divides the discriminant");
    i64 a = count_affine_and_trace(E, l);
    if (static_cast<long double>(a) * a > 4.0L * l) throw std::logic_error("Hasse bound violated");
    return a;
}

bool is_supersingular(const WeierstrassCurve& E, i64 p) { return count_points_mod(E, p) % p == 0; }

std::vector<i64> hecke_coefficients(const WeierstrassCurve& E, i64 n) {
    std::vector<i64> a(static_cast<size_t>(n + 1), 0);
    if (n >= 1) a[1] = 1;
    std::vector<i64> spf(static_cast<size_t>(n + 1), 0);
    for (i64 i = 2; i <= n; ++i) {
        if (spf[i]) continue;
        for (i64 j = i; j <= n; j += i)
            if (!spf[j]) spf[j] = i;
    }
    for (i64 m = 2; m <= n; ++m) {
        i64 p = spf[m];
        if (p == m) {
            a[m] = trace_of_frobenius(E, p);
            continue;
        }
        i64 q = m, pk = 1;
        while (q % p == 0) {
            q /= p;
            pk *= p;
        }
        if (q > 1) {
            a[m] = a[pk] * a[q];
            continue;
        }
        // prime power
        bool bad = mpz_divisible_ui_p(E.disc.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
        a[m] = a[p] * a[m / p] - (bad ? 0 : p * a[m / p / p]);
    }
    return a;
}

WeierstrassCurve quadratic_twist(const WeierstrassCurve& E, i64 D, i64 p) {
    if (D == 1) return E;
    if (!is_fundamental_discriminant(D))
        throw Error(ErrorKind::InvalidDiscriminant, std::to_string(D) + " is not a fundamental discriminant");
    i64 pn = E.conductor * (p ? p : 1);
    if (pn != 0 && gcd64(D, pn) != 1)
        throw Error(ErrorKind::InvalidDiscriminant, std::to_string(D) + " shares a factor with p*N");
    Int d = int_from(D);
    WeierstrassCurve T = derive_invariants(0, E.b2 * d, 0, 8 * E.b4 * d * d, 16 * E.b6 * d * d * d,
                                           E.conductor * D * D, E.label + "(" + std::to_string(D) + ")");
    return T;
}

namespace {

using Cplx = std::complex<long double>;

std::vector<Cplx> cubic_roots_ld(long double a, long double b, long double c, long double d) {
    // Durand-Kerner
    std::vector<Cplx> r = {Cplx(0.4L, 0.9L), Cplx(0.4L, 0.9L) * Cplx(0.4L, 0.9L),
                           Cplx(0.4L, 0.9L) * Cplx(0.4L, 0.9L) * Cplx(0.4L, 0.9L)};
    long double scale = std::max({std::fabs(b / a), std::sqrt(std::fabs(c / a)), std::cbrt(std::fabs(d / a)), 1.0L});
    for (auto& z : r) z *= scale;
    auto f = [&](Cplx x) { return ((a * x + b) * x + c) * x + d; };
    for (int it = 0; it < 2000; ++it) {
        for (int i = 0; i < 3; ++i) {
            Cplx den = a;
            for (int j = 0; j < 3; ++j)
                if (j != i) den *= (r[i] - r[j]);
            r[i] -= f(r[i]) / den;
        }
    }
    return r;
}

Real newton_real(const Real& a, const Real& b, const Real& c, const Real& d, Real x) {
    for (int it = 0; it < 200; ++it) {
        Real f = ((a * x + b) * x + c) * x + d;
        Real fp = (3 * a * x + 2 * b) * x + c;
        if (fp == 0) break;
        Real dx = f / fp;
        x -= dx;
        if (dx == 0) break;
    }
    return x;
}

Real to_real(const Int& z) { return Real(z.get_str()); }

}  // namespace

Periods real_periods(const WeierstrassCurve& E, int precision_bits) {
    RealPrecision guard(precision_bits + 32);
    Real A = 4, B = to_real(E.b2), C = 2 * to_real(E.b4), Dd = to_real(E.b6);
    auto ld = [](const Int& z) { return std::stold(z.get_str()); };
    auto roots = cubic_roots_ld(4.0L, ld(E.b2), 2.0L * ld(E.b4), ld(E.b6));
    Real pi = boost::math::constants::pi<Real>();
    Periods out;
    auto agm = [](Real a, Real b) {
        for (int it = 0; it < 400; ++it) {
            Real an = (a + b) / 2, bn = sqrt(a * b);
            if (an == a && bn == b) break;
            a = an;
            b = bn;
        }
        return a;
    };
    if (E.disc > 0) {
        std::vector<Real> e;
        for (auto& z : roots) e.push_back(newton_real(A, B, C, Dd, Real(static_cast<double>(z.real()))));
        std::sort(e.begin(), e.end(), [](const Real& x, const Real& y) { return x > y; });
        out.omega_plus = pi / agm(sqrt(e[0] - e[2]), sqrt(e[0] - e[1]));
        out.omega_minus = pi / agm(sqrt(e[0] - e[2]), sqrt(e[1] - e[2]));
    } else {
        size_t k = 0;
        for (size_t i = 1; i < 3; ++i)
            if (std::fabs(roots[i].imag()) < std::fabs(roots[k].imag())) k = i;
        Real e1 = newton_real(A, B, C, Dd, Real(static_cast<double>(roots[k].real())));
        // quotient 4x^2 + Bq x + Cq
        Real Bq = B + 4 * e1;
        Real Cq = C + Bq * e1;
        Real a = -Bq / 8;
        Real z = sqrt(e1 * e1 - 2 * a * e1 + Cq / 4);
        out.omega_plus = 2 * pi / agm(2 * sqrt(z), sqrt(2 * z + 2 * (e1 - a)));
        out.omega_minus = pi / agm(2 * sqrt(z), sqrt(2 * z - 2 * (e1 - a)));
    }
    return out;
}

namespace {

Real twisted_sum(const std::vector<i64>& an, i64 D, i64 N, const Real& t, i64 nmax) {
    Real pi = boost::math::constants::pi<Real>();
    Real q = exp(-2 * pi * t / (static_cast<double>(std::llabs(D)) * sqrt(Real(N))));
    Real qn = 1, s = 0;
    for (i64 n = 1; n <= nmax; ++n) {
        qn *= q;
        if (an[n] == 0) continue;
        int chi = D == 1 ? 1 : kronecker(D, n);
        if (chi == 0) continue;
        s += Real(chi * an[n]) / n * qn;
    }
    return s;
}

i64 series_length(i64 D, i64 N, int bits, double t) {
    double x = bits * std::log(2.0) * std::llabs(D) * std::sqrt(static_cast<double>(N)) / (2 * M_PI * t);
    return static_cast<i64>(std::ceil(x)) + 20;
}

}  // namespace

Real twisted_l_value(const WeierstrassCurve& E, i64 D, int precision_bits) {
    if (E.conductor <= 0) throw Error(ErrorKind::InvalidConfig, "conductor required for L-values");
    RealPrecision guard(precision_bits + 32);
    i64 nmax = series_length(D, E.conductor, precision_bits + 16, 1.0);
    auto an = hecke_coefficients(E, nmax);
    return 2 * twisted_sum(an, D, E.conductor, Real(1), nmax);
}

int twisted_root_number(const WeierstrassCurve& E, i64 D, int precision_bits) {
    if (E.conductor <= 0) throw Error(ErrorKind::InvalidConfig, "conductor required for L-values");
    RealPrecision guard(precision_bits + 32);
    double t = 1.25;
    i64 nmax = series_length(D, E.conductor, precision_bits + 16, 1.0 / t);
    auto an = hecke_coefficients(E, nmax);
    Real s1 = twisted_sum(an, D, E.conductor, Real(1), nmax);
    Real st = twisted_sum(an, D, E.conductor, Real(t), nmax);
    Real si = twisted_sum(an, D, E.conductor, Real(1 / t), nmax);
    Real plus = abs(2 * s1 - (st + si));
    Real minus = abs(st - si);
    return plus < minus ? 1 : -1;
}

bool on_curve(const WeierstrassCurve& E, const CurvePoint& P) {
    if (P.infinity) return true;
    Rat lhs = P.y * P.y + Rat(E.a1) * P.x * P.y + Rat(E.a3) * P.y;
    Rat rhs = P.x * P.x * P.x + Rat(E.a2) * P.x * P.x + Rat(E.a4) * P.x + Rat(E.a6);
    return lhs == rhs;
}

CurvePoint negate(const WeierstrassCurve& E, const CurvePoint& P) {
    if (P.infinity) return P;
    return CurvePoint::affine(P.x, -P.y - Rat(E.a1) * P.x - Rat(E.a3));
}

CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    Rat a1 = E.a1, a2 = E.a2, a3 = E.a3, a4 = E.a4, a6 = E.a6;
    Rat lam, nu;
    if (P.x == Q.x) {
        if (P.y + Q.y + a1 * Q.x + a3 == 0) return CurvePoint::at_infinity();
        Rat den = 2 * P.y + a1 * P.x + a3;
        lam = (3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y) / den;
        nu = (-P.x * P.x * P.x + a4 * P.x + 2 * a6 - a3 * P.y) / den;
    } else {
        lam = (Q.y - P.y) / (Q.x - P.x);
        nu = (P.y * Q.x - Q.y * P.x) / (Q.x - P.x);
    }
    Rat x3 = lam * lam + a1 * lam - a2 - P.x - Q.x;
    Rat y3 = -(lam + a1) * x3 - nu - a3;
    return CurvePoint::affine(x3, y3);
}

CurvePoint multiply(const WeierstrassCurve& E, const CurvePoint& P, i64 n) {
    if (n < 0) return multiply(E, negate(E, P), -n);
    CurvePoint r = CurvePoint::at_infinity(), b = P;
    while (n) {
        if (n & 1) r = add(E, r, b);
        b = add(E, b, b);
        n >>= 1;
    }
    return r;
}

namespace {

using Series = std::vector<Rat>;

Series smul(const Series& a, const Series& b, size_t n) {
    Series r(n, Rat(0));
    for (size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series sinv(const Series& a, size_t n) {
    Series r(n, Rat(0));
    r[0] = 1 / a[0];
    for (size_t k = 1; k < n; ++k) {
        Rat s = 0;
        for (size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * r[k - j];
        r[k] = -s / a[0];
    }
    return r;
}

Series shift(const Series& a, size_t k, size_t n) {
    Series r(n, Rat(0));
    for (size_t i = 0; i + k < n && i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

}  // namespace

std::vector<Rat> formal_log(const WeierstrassCurve& E, i64 p, int M) {
    if (mpz_divisible_ui_p(E.disc.get_mpz_t(), static_cast<unsigned long>(p)))
        throw Error(ErrorKind::BadReduction, "bad reduction at p");
    // enough terms that k - v_p(k) >= M beyond the cut
    size_t K = static_cast<size_t>(M) + 2;
    while (true) {
        bool ok = true;
        for (size_t k = K + 1; k < K + 200; ++k)
            if (static_cast<int>(k) - vp(static_cast<i64>(k), p) < M) ok = false;
        if (ok) break;
        ++K;
    }
    size_t n = K + 1;
    Rat a1 = E.a1, a2 = E.a2, a3 = E.a3, a4 = E.a4, a6 = E.a6;
    // u = w / t^3 satisfies u = 1 + a1 t u + a2 t^2 u + a3 t^3 u^2 + a4 t^4 u^2 + a6 t^6 u^3
    Series u(n, Rat(0));
    u[0] = 1;
    for (size_t it = 0; it < n + 1; ++it) {
        Series u2 = smul(u, u, n), u3 = smul(u2, u, n);
        Series next(n, Rat(0));
        next[0] = 1;
        auto addsh = [&](const Series& s, const Rat& c, size_t k) {
            if (c == 0) return;
            for (size_t i = 0; i + k < n; ++i) next[i + k] += c * s[i];
        };
        addsh(u, a1, 1);
        addsh(u, a2, 2);
        addsh(u2, a3, 3);
        addsh(u2, a4, 4);
        addsh(u3, a6, 6);
        if (next == u) break;
        u = next;
    }
    // omega/dt = (-2u - t u') / (u (-2 + a1 t + a3 t^3 u))
    Series du(n, Rat(0));
    for (size_t i = 1; i < n; ++i) du[i - 1] = u[i] * static_cast<unsigned long>(i);
    Series num(n, Rat(0));
    for (size_t i = 0; i < n; ++i) num[i] = -2 * u[i];
    Series tdu = shift(du, 1, n);
    for (size_t i = 0; i < n; ++i) num[i] -= tdu[i];
    Series inner(n, Rat(0));
    inner[0] = -2;
    if (n > 1) inner[1] += a1;
    Series t3u = shift(u, 3, n);
    for (size_t i = 0; i < n; ++i) inner[i] += a3 * t3u[i];
    Series den = smul(u, inner, n);
    Series w = smul(num, sinv(den, n), n);
    std::vector<Rat> lam(n + 1, Rat(0));
    for (size_t k = 0; k < n; ++k) lam[k + 1] = w[k] / static_cast<unsigned long>(k + 1);
    return lam;
}

PadicNum eval_formal_log(const std::vector<Rat>& series, const Rat& t, i64 p, int M) {
    if (vp(t, p) < 1) throw Error(ErrorKind::InvalidConfig, "formal log evaluated outside the formal group");
    Rat s = 0, tk = 1;
    for (size_t k = 1; k < series.size(); ++k) {
        tk *= t;
        s += series[k] * tk;
    }
    return PadicNum::from_rat(s, p, M);
}

PointLog point_log(const WeierstrassCurve& E, i64 p, const CurvePoint& P, int M) {
    PointLog out;
    if (P.infinity) {
        out.multiplier = 0;
        out.log_np = PadicNum(p, M);
        out.log_p = PadicNum(p, M);
        return out;
    }
    if (!on_curve(E, P)) throw Error(ErrorKind::InvalidConfig, "point not on curve");
    i64 bound = p + 1 + 2 * static_cast<i64>(std::sqrt(static_cast<double>(p))) + 2;
    CurvePoint Q = CurvePoint::at_infinity();
    for (i64 n = 1; n <= bound; ++n) {
        Q = add(E, Q, P);
        if (Q.infinity) throw Error(ErrorKind::TorsionPoint, "point has finite order");
        if (vp(Q.x, p) < 0) {
            Rat t = -Q.x / Q.y;
            auto series = formal_log(E, p, M + 2);
            out.multiplier = n;
            out.log_np = eval_formal_log(series, t, p, M);
            out.log_p = out.log_np / PadicNum::from_int(int_from(n), p, M);
            return out;
        }
    }
    throw Error(ErrorKind::BadReduction, "multiple of the point never reached the formal group");
}

FrobeniusData frobenius_data(const WeierstrassCurve& E, i64 p) {
    i64 ap = count_points_mod(E, p);
    if (ap % p != 0) throw Error(ErrorKind::NotSupersingular, "a_p is not divisible by p");
    return make_frobenius(p, ap);
}

}  // namespace ssp
