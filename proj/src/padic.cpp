#include "ssp/padic.hpp"

#include "ssp/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ssp {

namespace {

Int ppow(i64 p, int e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::max(e, 0)));
    return r;
}

}  // namespace

PadicNum::PadicNum(i64 p, int prec) : p_(p), prec_(prec), val_(prec), unit_(0) {}

PadicNum PadicNum::from_rat(const Rat& x, i64 p, int prec) {
    PadicNum r(p, prec);
    if (x == 0) return r;
    int v = vp(x, p);
    if (v >= prec) return r;
    Int num = x.get_num(), den = x.get_den();
    Int pp = p;
    if (v > 0) {
        for (int i = 0; i < v; ++i) num /= pp;
    } else if (v < 0) {
        for (int i = 0; i < -v; ++i) den /= pp;
    }
    Int mod = ppow(p, prec - v);
    Int inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    r.val_ = v;
    r.unit_ = num * inv;
    mpz_mod(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), mod.get_mpz_t());
    return r;
}

void PadicNum::normalize() {
    if (val_ >= prec_ || unit_ == 0) {
        val_ = prec_;
        unit_ = 0;
        return;
    }
    Int pp = p_;
    while (mpz_divisible_ui_p(unit_.get_mpz_t(), static_cast<unsigned long>(p_))) {
        unit_ /= pp;
        ++val_;
    }
    if (val_ >= prec_) {
        val_ = prec_;
        unit_ = 0;
        return;
    }
    Int mod = ppow(p_, prec_ - val_);
    mpz_mod(unit_.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
}

Rat PadicNum::to_rat() const {
    if (is_zero()) return 0;
    if (val_ >= 0) return Rat(unit_ * ppow(p_, val_));
    Rat r(unit_, ppow(p_, -val_));
    r.canonicalize();
    return r;
}

Int PadicNum::lift() const {
    if (is_zero()) return 0;
    if (val_ < 0) throw Error(ErrorKind::ZeroDivisor, "lift of a non-integral p-adic number");
    return unit_ * ppow(p_, val_);
}

std::vector<int> PadicNum::digits() const {
    std::vector<int> out;
    Int u = unit_;
    for (int i = val_; i < prec_; ++i) {
        out.push_back(static_cast<int>(mpz_fdiv_ui(u.get_mpz_t(), static_cast<unsigned long>(p_))));
        u /= Int(p_);
    }
    return out;
}

PadicNum PadicNum::with_prec(int prec) const {
    PadicNum r = *this;
    if (prec >= prec_) return r;
    r.prec_ = prec;
    r.normalize();
    return r;
}

PadicNum PadicNum::operator-() const {
    PadicNum r = *this;
    if (!is_zero()) {
        r.unit_ = ppow(p_, prec_ - val_) - unit_;
        r.normalize();
    }
    return r;
}

PadicNum operator+(const PadicNum& a, const PadicNum& b) {
    if (a.p_ != b.p_) throw Error(ErrorKind::InvalidConfig, "p-adic numbers with different p");
    PadicNum r(a.p_, std::min(a.prec_, b.prec_));
    if (a.is_zero() && b.is_zero()) return r;
    int v = std::min(a.val_, b.val_);
    if (v >= r.prec_) return r;
    Int s = 0;
    if (!a.is_zero()) s += a.unit_ * ppow(a.p_, a.val_ - v);
    if (!b.is_zero()) s += b.unit_ * ppow(a.p_, b.val_ - v);
    r.val_ = v;
    r.unit_ = s;
    r.normalize();
    return r;
}

PadicNum operator-(const PadicNum& a, const PadicNum& b) { return a + (-b); }

PadicNum operator*(const PadicNum& a, const PadicNum& b) {
    if (a.p_ != b.p_) throw Error(ErrorKind::InvalidConfig, "p-adic numbers with different p");
    int v = a.val_ + b.val_;
    int rel = std::min(a.rel_prec(), b.rel_prec());
    PadicNum r(a.p_, v + rel);
    if (rel <= 0) return r;
    r.val_ = v;
    r.unit_ = a.unit_ * b.unit_;
    r.normalize();
    return r;
}

PadicNum operator/(const PadicNum& a, const PadicNum& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroDivisor, "p-adic division by zero");
    int v = a.val_ - b.val_;
    int rel = std::min(a.rel_prec(), b.rel_prec());
    if (a.is_zero()) return PadicNum(a.p_, a.prec_ - b.val_);
    PadicNum r(a.p_, v + rel);
    Int mod = ppow(a.p_, rel), inv;
    mpz_invert(inv.get_mpz_t(), b.unit_.get_mpz_t(), mod.get_mpz_t());
    r.val_ = v;
    r.unit_ = a.unit_ * inv;
    r.normalize();
    return r;
}

bool PadicNum::congruent(const PadicNum& b, int k) const {
    PadicNum d = *this - b;
    return d.val() >= std::min(k, d.prec());
}

std::string PadicNum::str() const {
    std::ostringstream os;
    auto d = digits();
    bool first = true;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        int e = val_ + static_cast<int>(i);
        os << d[i];
        if (e != 0) os << "*" << p_ << "^" << e;
    }
    if (!first) os << " + ";
    os << "O(" << p_ << "^" << prec_ << ")";
    return os.str();
}

LambdaMu lambda_mu(const QPoly& f, i64 p) {
    LambdaMu r;
    int best = kInfVal;
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        int v = vp(f[i], p);
        if (v < best) {
            best = v;
            r.lambda = static_cast<int>(i);
        }
    }
    if (best == kInfVal) {
        r.zero = true;
        return r;
    }
    r.mu = best;
    return r;
}

LambdaMu lambda_mu(const ZPoly& f, i64 p) { return lambda_mu(to_q(f), p); }

LambdaMu lambda_mu(const PadicPoly& f) {
    LambdaMu r;
    int best = kInfVal;
    bool any = false;
    for (size_t i = 0; i < f.size(); ++i) {
        any = true;
        if (f[i].is_zero()) continue;
        if (f[i].val() < best) {
            best = f[i].val();
            r.lambda = static_cast<int>(i);
        }
    }
    if (!any) {
        r.zero = true;
        return r;
    }
    if (best == kInfVal) throw Error(ErrorKind::PrecisionTooLow, "polynomial vanishes to working precision");
    // a coefficient of lower index known only to precision <= best cannot be ruled out
    for (int i = 0; i < r.lambda; ++i)
        if (f[i].is_zero() && f[i].prec() <= best)
            throw Error(ErrorKind::PrecisionTooLow, "cannot certify mu/lambda at working precision");
    r.mu = best;
    return r;
}

ZPoly omega_poly(i64 p, int n) {
    Int e = ppow(p, n);
    unsigned long deg = e.get_ui();
    ZPoly f(deg + 1);
    for (unsigned long k = 0; k <= deg; ++k) mpz_bin_uiui(f[k].get_mpz_t(), deg, k);
    f[0] -= 1;
    return f;
}

ZPoly xi_poly(i64 p, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidConfig, "xi_n needs n >= 1");
    // xi_n(x) = sum_{k<p} (1+x)^{k p^{n-1}}
    unsigned long step = ppow(p, n - 1).get_ui();
    std::vector<Int> c(step * static_cast<unsigned long>(p - 1) + 1);
    for (i64 k = 0; k < p; ++k) c[static_cast<size_t>(k) * step] = 1;
    return shift_one(c);
}

PadicNum teichmuller(i64 a, i64 p, int prec) {
    if (a % p == 0) throw Error(ErrorKind::InvalidConfig, "Teichmuller of a multiple of p");
    Int mod = ppow(p, prec);
    Int t = int_from(a), pp = p;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), mod.get_mpz_t());
    for (int i = 0; i < prec; ++i) mpz_powm(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t(), mod.get_mpz_t());
    return PadicNum::from_int(t, p, prec);
}

i64 cyclo_dlog(i64 a, i64 p, int n) {
    if (a % p == 0) throw Error(ErrorKind::InvalidConfig, "cyclo_dlog of a multiple of p");
    Int mod = ppow(p, n + 1);
    Int t = teichmuller(a, p, n + 1).lift();
    Int inv, cur = int_from(a);
    mpz_invert(inv.get_mpz_t(), t.get_mpz_t(), mod.get_mpz_t());
    cur = cur * inv;
    mpz_mod(cur.get_mpz_t(), cur.get_mpz_t(), mod.get_mpz_t());
    Int g = int_from(1 + p), ginv;
    mpz_invert(ginv.get_mpz_t(), g.get_mpz_t(), mod.get_mpz_t());
    i64 r = 0, pk = 1;
    for (int k = 0; k < n; ++k) {
        Int pk1 = ppow(p, k + 1);
        Int q = (cur - 1) / pk1;
        i64 d = static_cast<i64>(mpz_fdiv_ui(q.get_mpz_t(), static_cast<unsigned long>(p)));
        if (d) {
            Int step;
            Int e = int_from(d * pk);
            mpz_powm(step.get_mpz_t(), ginv.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
            cur = cur * step;
            mpz_mod(cur.get_mpz_t(), cur.get_mpz_t(), mod.get_mpz_t());
        }
        r += d * pk;
        pk *= p;
    }
    return r;
}

RnTable::RnTable(i64 p, int n) {
    mod_ = ipow(p, n + 1);
    i64 pn = ipow(p, n);
    table_.assign(static_cast<size_t>(mod_), -1);
    std::vector<i64> teich;
    for (i64 a = 1; a < p; ++a) teich.push_back(teichmuller(a, p, n + 1).lift().get_si());
    u64 g = 1;
    for (i64 i = 0; i < pn; ++i) {
        for (i64 t : teich) table_[mulmod(static_cast<u64>(t), g, static_cast<u64>(mod_))] = i;
        g = mulmod(g, static_cast<u64>(1 + p), static_cast<u64>(mod_));
    }
}

ResultantVal resultant_valuation(const QPoly& P, const ZPoly& Q, i64 p) {
    ResultantVal r;
    Rat res = resultant(Q, P);
    if (res == 0) {
        r.infinite = true;
        return r;
    }
    r.val = vp(res, p);
    return r;
}

ResultantVal resultant_valuation(const PadicPoly& P, const ZPoly& Q) {
    if (P.empty()) throw Error(ErrorKind::ZeroDivisor, "resultant of the zero polynomial");
    i64 p = P[0].p();
    int prec = kInfVal;
    QPoly q(P.size());
    for (size_t i = 0; i < P.size(); ++i) {
        q[i] = P[i].to_rat();
        prec = std::min(prec, P[i].prec());
    }
    LambdaMu lm = lambda_mu(P);
    int d = degree(Q);
    ResultantVal r = resultant_valuation(q, Q, p);
    int certified = prec + (d - 1) * lm.mu;
    if (r.infinite || r.val >= certified)
        throw Error(ErrorKind::PrecisionTooLow, "resultant valuation not certified at working precision");
    return r;
}

std::string to_string(const PadicPoly& f) {
    std::ostringstream os;
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) os << " + ";
        os << "(" << f[i].str() << ")";
        if (i >= 1) os << "*x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace ssp
