#include "ssp/plfunction.hpp"

#include "ssp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace ssp {

namespace {

u64 upow(i64 p, int e) {
    u64 r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<u64>(p);
    return r;
}

int max_safe_exponent(i64 p) {
    int K = 0;
    u128 m = 1;
    while (m * static_cast<u128>(p) < (static_cast<u128>(1) << 62)) {
        m *= static_cast<u128>(p);
        ++K;
    }
    return K;
}

u64 reduce_signed(i64 x, u64 mod) {
    i64 m = static_cast<i64>(mod);
    i64 r = x % m;
    return static_cast<u64>(r < 0 ? r + m : r);
}

}  // namespace

i64 MeasureContext::y_int(i64 a, int n) const {
    const EigenSymbol& s = symbol();
    i64 pn = ipow(p, n);
    if (d == 1) return s.path_value(modn(a, pn), pn);
    i64 ad = d < 0 ? -d : d;
    i64 den = pn * ad;
    i64 base = modn(a, pn);
    i64 sum = 0;
    for (i64 u = 0; u < ad; ++u) {
        i64 b = base + u * pn;
        if (b == 0) continue;
        int chi = kronecker(d, b);
        if (chi) sum += chi * s.path_value(b, den);
    }
    return sum;
}

MeasureContext make_context(const WeierstrassCurve& E, i64 p, i64 d, int branch, int prec,
                            std::shared_ptr<const SymbolPair> syms) {
    if (d != 1 && !is_fundamental_discriminant(d))
        throw Error(ErrorKind::InvalidDiscriminant, "twist " + std::to_string(d) + " is not a fundamental discriminant");
    if (d != 1 && (gcd64(d, p) != 1 || gcd64(d, E.conductor) != 1))
        throw Error(ErrorKind::InvalidDiscriminant, "twist must be prime to p and to the conductor");
    if (branch < 0 || branch >= p - 1) throw Error(ErrorKind::InvalidConfig, "branch outside [0, p-2]");
    if (prec < 2) throw Error(ErrorKind::InvalidConfig, "precision must be at least 2");
    MeasureContext ctx;
    ctx.E = E;
    ctx.p = p;
    ctx.d = d;
    ctx.branch = branch;
    ctx.prec = prec;
    ctx.frob = frobenius_data(E, p);
    ctx.syms = syms ? std::move(syms) : std::make_shared<const SymbolPair>(normalized_symbols(E));
    return ctx;
}

DpRat measure_value(const MeasureContext& ctx, i64 a, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidConfig, "measure level must be positive");
    if (a % ctx.p == 0) throw Error(ErrorKind::InvalidConfig, "measure is supported on units");
    DpRat w{1, 0};
    DpRat r = ctx.y(a, n) * phi_power_apply(ctx.frob, n, w);
    return r - ctx.y(a, n - 1) * phi_power_apply(ctx.frob, n + 1, w);
}

QPoly mazur_tate(const MeasureContext& ctx, int n) {
    if (ctx.branch != 0) throw Error(ErrorKind::InvalidConfig, "exact Mazur-Tate elements need branch 0");
    i64 p = ctx.p;
    RnTable rn(p, n);
    i64 pn1 = rn.modulus();
    std::vector<Int> c(static_cast<size_t>(ipow(p, n)), Int(0));
    for (i64 a = 1; a < pn1; ++a) {
        if (a % p == 0) continue;
        i64 v = ctx.y_int(a, n + 1);
        if (v) c[static_cast<size_t>(rn(a))] += int_from(v);
    }
    ZPoly z = shift_one(c);
    QPoly q = scale(to_q(z), ctx.symbol().scaling());
    trim(q);
    return q;
}

PadicPoly mazur_tate_branch(const MeasureContext& ctx, int n) {
    i64 p = ctx.p;
    int prec = ctx.prec;
    Int mod = 1;
    for (int i = 0; i < prec; ++i) mod *= int_from(p);
    RnTable rn(p, n);
    i64 pn1 = rn.modulus();
    std::vector<Int> teich(static_cast<size_t>(p), Int(0));
    for (i64 a = 1; a < p; ++a) {
        Int t = teichmuller(a, p, prec).lift(), e;
        Int ex = int_from(ctx.branch);
        mpz_powm(e.get_mpz_t(), t.get_mpz_t(), ex.get_mpz_t(), mod.get_mpz_t());
        teich[static_cast<size_t>(a)] = e;
    }
    std::vector<Int> c(static_cast<size_t>(ipow(p, n)), Int(0));
    for (i64 a = 1; a < pn1; ++a) {
        if (a % p == 0) continue;
        i64 v = ctx.y_int(a, n + 1);
        if (v) c[static_cast<size_t>(rn(a))] += int_from(v) * teich[static_cast<size_t>(a % p)];
    }
    for (auto& x : c) mpz_mod(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    ZPoly z = shift_one(c);
    PadicNum s = PadicNum::from_rat(ctx.symbol().scaling(), p, prec + 8);
    PadicPoly out;
    for (const auto& x : z) out.push_back((PadicNum::from_int(x, p, prec) * s).with_prec(prec));
    return out;
}

MazurTateFamily build_family(const MeasureContext& ctx, int depth) {
    MazurTateFamily fam;
    fam.ctx = ctx;
    fam.depth = depth;
    for (int n = 0; n <= depth; ++n) fam.polys.push_back(mazur_tate(ctx, n));
    return fam;
}

FamilyCheck check_family(const MazurTateFamily& fam) {
    FamilyCheck out;
    const auto& P = fam.polys;
    i64 p = fam.ctx.p;
    Rat ap(int_from(fam.ctx.ap()));
    for (int n = 2; n < static_cast<int>(P.size()); ++n) {
        QPoly lhs = sub(P[static_cast<size_t>(n)], scale(P[static_cast<size_t>(n - 1)], ap));
        lhs = add(lhs, mul(to_q(xi_poly(p, n - 1)), P[static_cast<size_t>(n - 2)]));
        if (!is_zero(rem_monic(lhs, omega_poly(p, n - 1))))
            throw Error(ErrorKind::RecurrenceViolated, "P_n - a_p P_{n-1} + xi_{n-1} P_{n-2} is not divisible by omega_{n-1} at n = " +
                                                           std::to_string(n));
        ++out.levels_checked;
    }
    if (P.size() >= 2) {
        auto at0 = [](const QPoly& f) { return f.empty() ? Rat(0) : f[0]; };
        Rat lhs = (ap - 2) * at0(P[1]);
        Rat rhs = ((ap - 2) * ap - Rat(int_from(p - 1))) * at0(P[0]);
        out.base_relation = lhs == rhs;
    }
    return out;
}

LogTable::LogTable(i64 p, int K, int table_bits) : p_(p), K_(K) {
    mod_ = upow(p, K);
    h_ = 1;
    while (h_ < K && std::pow(static_cast<double>(p), h_ + 1) <= std::ldexp(1.0, table_bits)) ++h_;
    ph_ = upow(p, h_);
    auto inv_unit = [&](u64 x) { return static_cast<u64>(invmod(static_cast<i64>(x % mod_), static_cast<i64>(mod_))); };
    // log(1 + p^e w) = sum_j (-1)^{j+1} p^{e j - v(j)} w^j / (j / p^{v(j)})
    auto series = [&](int e) {
        std::vector<u64> coef{0};
        for (int j = 1;; ++j) {
            int v = vp(static_cast<i64>(j), p);
            int ex = e * j - v;
            if (ex >= K && e * j >= K + 8) break;
            if (ex >= K) {
                coef.push_back(0);
                continue;
            }
            i64 jj = j;
            for (int t = 0; t < v; ++t) jj /= p;
            u64 c = mulmod(upow(p, ex), inv_unit(static_cast<u64>(jj)), mod_);
            if (j % 2 == 0) c = (mod_ - c) % mod_;
            coef.push_back(c);
        }
        return coef;
    };
    coef_ = series(h_);
    std::vector<u64> c1 = series(1);
    u64 inv_pm1 = inv_unit(static_cast<u64>(p - 1));
    logt_.assign(ph_, 0);
    invt_.assign(ph_, 0);
    for (u64 t = 1; t < ph_; ++t) {
        if (t % static_cast<u64>(p) == 0) continue;
        invt_[t] = inv_unit(t);
        u64 y = powmod(t, static_cast<u64>(p - 1), mod_);
        u64 w = (y + mod_ - 1) % mod_ / static_cast<u64>(p);
        u64 acc = 0, wp = 1;
        for (size_t j = 1; j < c1.size(); ++j) {
            wp = mulmod(wp, w, mod_);
            acc = (acc + mulmod(c1[j], wp, mod_)) % mod_;
        }
        logt_[t] = mulmod(acc, inv_pm1, mod_);
    }
}

u64 LogTable::log(u64 a) const {
    u64 t = a % ph_, s = a / ph_;
    if (s == 0) return logt_[t];
    u64 u = mulmod(s % mod_, invt_[t], mod_);
    u64 acc = logt_[t], up = 1;
    for (size_t j = 1; j < coef_.size(); ++j) {
        up = mulmod(up, u, mod_);
        if (coef_[j]) acc = (acc + mulmod(coef_[j], up, mod_)) % mod_;
    }
    return acc;
}

namespace {

// S1 = sum w(a) y(a, N), S2 = sum w(a) y(a, N-1), a over units below p^N
template <class W>
std::pair<u64, u64> riemann_sums(const MeasureContext& ctx, int N, u64 mod, const W& weight) {
    i64 p = ctx.p;
    i64 top = ipow(p, N - 1);
    unsigned nthreads = std::max(1u, std::min(std::thread::hardware_concurrency(), 64u));
    if (top < 4096) nthreads = 1;
    std::vector<std::pair<u64, u64>> part(nthreads, {0, 0});
    auto work = [&](unsigned id) {
        u64 s1 = 0, s2 = 0;
        for (i64 a0 = 1 + static_cast<i64>(id); a0 < top; a0 += static_cast<i64>(nthreads)) {
            if (a0 % p == 0) continue;
            u64 Wsum = 0;
            for (i64 c = 0; c < p; ++c) {
                i64 a = a0 + c * top;
                u64 w = weight(static_cast<u64>(a));
                Wsum += w;
                if (Wsum >= mod) Wsum -= mod;
                i64 y = ctx.y_int(a, N);
                if (y) s1 = (s1 + mulmod(w, reduce_signed(y, mod), mod)) % mod;
            }
            i64 y0 = ctx.y_int(a0, N - 1);
            if (y0) s2 = (s2 + mulmod(Wsum, reduce_signed(y0, mod), mod)) % mod;
        }
        part[id] = {s1, s2};
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> ts;
        for (unsigned i = 0; i < nthreads; ++i) ts.emplace_back(work, i);
        for (auto& t : ts) t.join();
    }
    u64 s1 = 0, s2 = 0;
    for (auto& [a, b] : part) {
        s1 = (s1 + a) % mod;
        s2 = (s2 + b) % mod;
    }
    return {s1, s2};
}

PadicValue assemble(const MeasureContext& ctx, int N, int K, std::pair<u64, u64> s, int error_exponent) {
    i64 p = ctx.p;
    PadicNum sc = PadicNum::from_rat(ctx.symbol().scaling(), p, K + 8);
    PadicNum S1 = PadicNum::from_int(Int(static_cast<unsigned long>(s.first)), p, K) * sc;
    PadicNum S2 = PadicNum::from_int(Int(static_cast<unsigned long>(s.second)), p, K) * sc;
    DpRat w{1, 0};
    DpRat c = phi_power_apply(ctx.frob, N, w), e = phi_power_apply(ctx.frob, N + 1, w);
    int wp = K + 8;
    auto P = [&](const Rat& x) { return PadicNum::from_rat(x, p, wp); };
    PadicValue out;
    out.level = N;
    out.error_exponent = error_exponent;
    PadicNum u = S1 * P(c.u) - S2 * P(e.u);
    PadicNum v = S1 * P(c.v) - S2 * P(e.v);
    if (u.prec() < error_exponent || v.prec() < error_exponent)
        throw Error(ErrorKind::PrecisionExhausted, "word-size residues too short for the requested Riemann depth");
    out.value.u = u.with_prec(error_exponent);
    out.value.v = v.with_prec(error_exponent);
    return out;
}

int residue_exponent(i64 p, int m, int N) { return std::min(max_safe_exponent(p), m + N + 6); }

}  // namespace

PadicValue special_value(const MeasureContext& ctx, i64 k, int m) {
    if (m < 1) throw Error(ErrorKind::InvalidConfig, "Riemann depth must be positive");
    if (k < 0) throw Error(ErrorKind::InvalidConfig, "negative power");
    int N = 2 * m;
    int K = residue_exponent(ctx.p, m, N);
    u64 mod = upow(ctx.p, K);
    auto s = riemann_sums(ctx, N, mod, [&](u64 a) { return powmod(a, static_cast<u64>(k), mod); });
    return assemble(ctx, N, K, s, m);
}

PadicValue derivative_value(const MeasureContext& ctx, int r, int m) {
    if (m < 1) throw Error(ErrorKind::InvalidConfig, "Riemann depth must be positive");
    if (r < 0) throw Error(ErrorKind::InvalidConfig, "negative derivative order");
    int N = 2 * m;
    int K = residue_exponent(ctx.p, m, N);
    LogTable lt(ctx.p, K);
    u64 mod = lt.modulus();
    auto s = riemann_sums(ctx, N, mod, [&](u64 a) { return powmod(lt.log(a), static_cast<u64>(r), mod); });
    return assemble(ctx, N, K, s, m + std::max(0, r - 1));
}

LeadingTerm leading_term(const MeasureContext& ctx, int r, int m, int sign) {
    i64 p = ctx.p;
    LeadingTerm out;
    out.order = r;
    DpRat f0{0, 0};
    for (i64 a = 1; a < p; ++a) f0 = f0 + measure_value(ctx, a, 1);
    bool f0_zero = f0.u == 0 && f0.v == 0;
    if (r == 0) {
        out.value = to_padic(f0, p, ctx.prec);
        out.error_exponent = ctx.prec;
        out.lower_orders_exact = true;
        out.certification = "exact";
    } else {
        if (!f0_zero) throw Error(ErrorKind::OrderNotCertified, "L_p does not vanish at the centre");
        bool numeric_zero = true;
        for (int k = 1; k < r; ++k) {
            PadicValue d = derivative_value(ctx, k, m);
            if (!d.value.u.is_zero() || !d.value.v.is_zero()) numeric_zero = false;
        }
        if (!numeric_zero) throw Error(ErrorKind::OrderNotCertified, "a lower derivative is nonzero");
        out.lower_orders_exact = r == 1;
        if (r == 1)
            out.certification = "exact";
        else if (sign != 0 && ((r % 2 == 0) == (sign > 0)))
            out.certification = "sign";
        else
            out.certification = "numerical";
        PadicValue d = derivative_value(ctx, r, m);
        Int fact = 1;
        for (int i = 2; i <= r; ++i) fact *= i;
        PadicNum f = PadicNum::from_int(fact, p, d.error_exponent + 8);
        out.value.u = d.value.u / f;
        out.value.v = d.value.v / f;
        out.error_exponent = d.error_exponent - vp(fact, p);
    }
    Mat2 eu = euler_operator(ctx.frob);
    out.euler_modified = act(eu, out.value);
    i64 tap = ctx.twisted_ap();
    Rat lfac(int_from(p), int_from(p + 1 - tap));
    PadicNum lf = PadicNum::from_rat(lfac, p, out.error_exponent + 8);
    out.reported.u = out.euler_modified.u * lf;
    out.reported.v = out.euler_modified.v * lf;
    out.omega_component = xy_coordinates(out.reported).first;
    return out;
}

}  // namespace ssp
