#include "ssp/modsym.hpp"

#include "ssp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace ssp {

P1List::P1List(i64 N) : N_(N) {
    if (N < 1) throw Error(ErrorKind::BadLevel, "level must be positive");
    index_.assign(static_cast<size_t>(N * N), -1);
    std::vector<i64> units;
    for (i64 u = 1; u <= std::max<i64>(N - 1, 1); ++u)
        if (gcd64(u, N) == 1) units.push_back(u);
    if (N == 1) units = {1};
    for (i64 c = 0; c < N; ++c) {
        for (i64 d = 0; d < N; ++d) {
            if (index_[static_cast<size_t>(c * N + d)] >= 0) continue;
            if (gcd64(gcd64(c, d), N) != 1) continue;
            int id = static_cast<int>(reps_.size());
            reps_.emplace_back(c, d);
            for (i64 u : units) index_[static_cast<size_t>((u * c % N) * N + (u * d % N))] = id;
        }
    }
}

int P1List::act(size_t i, i64 a, i64 b, i64 c, i64 d) const {
    auto [u, v] = reps_[i];
    return index(u * a + v * c, u * b + v * d);
}

i64 p1_count(i64 N) {
    i64 r = N;
    for (auto& [q, e] : factor(N)) r = r / q * (q + 1);
    return r;
}

std::vector<IntMatrix> heilbronn_merel(i64 l) {
    std::vector<IntMatrix> out;
    for (i64 a = 1; a <= l; ++a) {
        for (i64 d = 1; a + d <= l + 1; ++d) {
            i64 k = a * d - l;
            if (k < 0) continue;
            if (k == 0) {
                for (i64 c = 0; c < d; ++c) out.push_back({a, 0, c, d});
                for (i64 b = 1; b < a; ++b) out.push_back({a, b, 0, d});
                continue;
            }
            for (i64 b = 1; b < a; ++b) {
                if (k % b) continue;
                i64 c = k / b;
                if (c < d) out.push_back({a, b, c, d});
            }
        }
    }
    return out;
}

namespace {

SignedReduction signed_reduction(const P1List& p1, int sign) {
    size_t n = p1.size();
    std::vector<int> parent(n), rel(n, 1);
    std::vector<char> zero(n, 0);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::pair<int, int>(int)> find = [&](int i) -> std::pair<int, int> {
        if (parent[i] == i) return {i, 1};
        auto [r, s] = find(parent[i]);
        parent[i] = r;
        rel[i] *= s;
        return {r, rel[i]};
    };
    auto unite = [&](int i, int j, int s) {
        auto [ri, si] = find(i);
        auto [rj, sj] = find(j);
        int t = si * s * sj;
        if (ri == rj) {
            if (t == -1) zero[ri] = 1;
            return;
        }
        parent[ri] = rj;
        rel[ri] = t;
        if (zero[ri]) zero[rj] = 1;
    };
    for (size_t i = 0; i < n; ++i) {
        auto [c, d] = p1.rep(i);
        unite(static_cast<int>(i), p1.index(d, -c), -1);
        unite(static_cast<int>(i), p1.index(-c, d), sign);
    }
    SignedReduction red;
    red.var.assign(n, -1);
    red.sgn.assign(n, 0);
    std::vector<int> var_of_root(n, -1);
    for (size_t i = 0; i < n; ++i) {
        auto [r, s] = find(static_cast<int>(i));
        if (zero[r]) continue;
        if (var_of_root[r] < 0) {
            var_of_root[r] = red.nfree++;
            red.rep.push_back(r);
        }
        red.var[i] = var_of_root[r];
        red.sgn[i] = s;
    }
    return red;
}

// rows of the three-term relations over the free variables (each entry: var, coefficient)
std::vector<std::vector<std::pair<int, int>>> three_term_rows(const P1List& p1, const SignedReduction& red) {
    std::vector<std::vector<std::pair<int, int>>> rows;
    std::vector<char> seen(p1.size(), 0);
    for (size_t i = 0; i < p1.size(); ++i) {
        if (seen[i]) continue;
        auto [c, d] = p1.rep(i);
        int j = p1.index(d, -c - d), k = p1.index(-c - d, c);
        seen[i] = seen[j] = seen[k] = 1;
        std::vector<std::pair<int, int>> row;
        for (int g : {static_cast<int>(i), j, k}) {
            if (red.var[g] < 0) continue;
            bool merged = false;
            for (auto& e : row)
                if (e.first == red.var[g]) {
                    e.second += red.sgn[g];
                    merged = true;
                }
            if (!merged) row.emplace_back(red.var[g], red.sgn[g]);
        }
        row.erase(std::remove_if(row.begin(), row.end(), [](auto& e) { return e.second == 0; }), row.end());
        if (!row.empty()) rows.push_back(row);
    }
    return rows;
}

// exact reduced row echelon form; returns pivot columns
std::vector<int> rref(std::vector<std::vector<Rat>>& m, int ncols) {
    std::vector<int> pivots;
    size_t r = 0;
    for (int c = 0; c < ncols && r < m.size(); ++c) {
        size_t s = r;
        while (s < m.size() && m[s][c] == 0) ++s;
        if (s == m.size()) continue;
        std::swap(m[s], m[r]);
        Rat inv = 1 / m[r][c];
        for (int j = c; j < ncols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < ncols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

// basis of the nullspace {x : m x = 0}; also reports the free columns
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m, int ncols, std::vector<int>* free_cols) {
    auto piv = rref(m, ncols);
    std::vector<char> is_piv(ncols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<Rat>> basis;
    if (free_cols) free_cols->clear();
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rat> v(ncols, Rat(0));
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        basis.push_back(v);
        if (free_cols) free_cols->push_back(f);
    }
    return basis;
}

struct Cusp {
    Int p, q;  // lowest terms, q >= 0
};

Int inverse_mod_or_one(const Int& a, const Int& m) {
    if (m == 1) return 0;
    Int inv;
    mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return inv;
}

bool cusps_equivalent(const Cusp& a, const Cusp& b, i64 N) {
    Int s1 = inverse_mod_or_one(a.p, a.q), s2 = inverse_mod_or_one(b.p, b.q);
    Int qq = a.q * b.q, g;
    Int n = int_from(N);
    mpz_gcd(g.get_mpz_t(), qq.get_mpz_t(), n.get_mpz_t());
    Int diff = s1 * b.q - s2 * a.q;
    return mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t()) != 0;
}

Cusp make_cusp(Int p, Int q) {
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) return {1, 0};
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    return {p / g, q / g};
}

class CuspClasses {
public:
    CuspClasses(i64 N, int sign) : N_(N), sign_(sign) {}
    // class index and coefficient (0 if the class vanishes in this sign)
    std::pair<int, int> classify(const Cusp& c) {
        for (size_t i = 0; i < reps_.size(); ++i) {
            if (cusps_equivalent(c, reps_[i], N_)) return {static_cast<int>(i), coef_[i]};
            Cusp neg = make_cusp(-c.p, c.q);
            if (cusps_equivalent(neg, reps_[i], N_)) return {static_cast<int>(i), coef_[i] * sign_};
        }
        Cusp neg = make_cusp(-c.p, c.q);
        int coef = (sign_ == -1 && cusps_equivalent(c, neg, N_)) ? 0 : 1;
        reps_.push_back(c);
        coef_.push_back(coef);
        return {static_cast<int>(reps_.size() - 1), coef};
    }
    size_t size() const { return reps_.size(); }

private:
    i64 N_;
    int sign_;
    std::vector<Cusp> reps_;
    std::vector<int> coef_;
};

}  // namespace

std::vector<Rat> ManinSymbolSpace::reduce_generator(size_t gen) const {
    std::vector<Rat> out(dim, Rat(0));
    int v = red.var[gen];
    if (v < 0) return out;
    for (int i = 0; i < dim; ++i) out[i] = coords[v][i] * red.sgn[gen];
    return out;
}

ManinSymbolSpace build_space(i64 N, int sign) {
    ManinSymbolSpace S;
    S.level = N;
    S.sign = sign;
    S.p1 = std::make_shared<P1List>(N);
    S.red = signed_reduction(*S.p1, sign);
    int nf = S.red.nfree;
    auto rows3 = three_term_rows(*S.p1, S.red);
    std::vector<std::vector<Rat>> m(rows3.size(), std::vector<Rat>(nf, Rat(0)));
    for (size_t r = 0; r < rows3.size(); ++r)
        for (auto& [v, c] : rows3[r]) m[r][v] += c;
    auto piv = rref(m, nf);
    std::vector<int> basis_index(nf, -1);
    std::vector<char> is_piv(nf, 0);
    for (int c : piv) is_piv[c] = 1;
    for (int v = 0; v < nf; ++v)
        if (!is_piv[v]) {
            basis_index[v] = S.dim++;
            S.basis_vars.push_back(v);
        }
    S.coords.assign(nf, std::vector<Rat>(S.dim, Rat(0)));
    for (int v = 0; v < nf; ++v)
        if (basis_index[v] >= 0) S.coords[v][basis_index[v]] = 1;
    for (size_t r = 0; r < piv.size(); ++r)
        for (int v = 0; v < nf; ++v)
            if (!is_piv[v] && m[r][v] != 0) S.coords[piv[r]][basis_index[v]] = -m[r][v];

    // boundary of each basis symbol g{0, oo} = [a/c] - [b/d]
    CuspClasses cusps(N, sign);
    std::vector<std::vector<std::pair<int, int>>> bd(S.dim);
    for (int i = 0; i < S.dim; ++i) {
        auto [c0, d0] = S.p1->rep(static_cast<size_t>(S.red.rep[S.basis_vars[i]]));
        i64 c = c0 == 0 ? N : c0, d = d0;
        while (gcd64(c, d) != 1) d += N;
        Int a, b, g, cc = int_from(c), dd = int_from(d);
        // a d - b c = 1
        Int s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), dd.get_mpz_t(), cc.get_mpz_t());
        a = s;
        b = -t;
        auto [i1, k1] = cusps.classify(make_cusp(a, cc));
        auto [i2, k2] = cusps.classify(make_cusp(b, dd));
        bd[i].emplace_back(i1, k1);
        bd[i].emplace_back(i2, -k2);
    }
    S.ncusps = static_cast<int>(cusps.size());
    S.boundary.assign(S.dim, std::vector<Rat>(S.ncusps, Rat(0)));
    for (int i = 0; i < S.dim; ++i)
        for (auto& [j, k] : bd[i]) S.boundary[i][j] += k;
    // kernel of the boundary: x with sum_i x_i boundary[i] = 0
    std::vector<std::vector<Rat>> bt(S.ncusps, std::vector<Rat>(S.dim, Rat(0)));
    for (int i = 0; i < S.dim; ++i)
        for (int j = 0; j < S.ncusps; ++j) bt[j][i] = S.boundary[i][j];
    S.cuspidal_basis = nullspace(bt, S.dim, nullptr);
    S.cuspidal_dim = static_cast<int>(S.cuspidal_basis.size());
    return S;
}

std::vector<std::vector<Rat>> hecke_operator(const ManinSymbolSpace& S, i64 l) {
    if (S.level % l == 0) throw Error(ErrorKind::BadLevel, "Hecke operator at a prime dividing the level");
    auto mats = heilbronn_merel(l);
    std::vector<std::vector<Rat>> T(S.dim, std::vector<Rat>(S.dim, Rat(0)));
    for (int j = 0; j < S.dim; ++j) {
        size_t g = static_cast<size_t>(S.red.rep[S.basis_vars[j]]);
        for (auto& M : mats) {
            auto img = S.reduce_generator(static_cast<size_t>(S.p1->act(g, M[0], M[1], M[2], M[3])));
            for (int i = 0; i < S.dim; ++i)
                if (img[i] != 0) T[i][j] += img[i];
        }
    }
    return T;
}

std::vector<std::vector<Rat>> hecke_operator_cuspidal(const ManinSymbolSpace& S, i64 l) {
    auto T = hecke_operator(S, l);
    int k = S.cuspidal_dim;
    // coordinates w.r.t. the cuspidal basis via its identity block on the free columns
    std::vector<int> free_cols;
    {
        std::vector<std::vector<Rat>> bt(S.ncusps, std::vector<Rat>(S.dim, Rat(0)));
        for (int i = 0; i < S.dim; ++i)
            for (int j = 0; j < S.ncusps; ++j) bt[j][i] = S.boundary[i][j];
        nullspace(bt, S.dim, &free_cols);
    }
    std::vector<std::vector<Rat>> out(k, std::vector<Rat>(k, Rat(0)));
    for (int j = 0; j < k; ++j) {
        std::vector<Rat> img(S.dim, Rat(0));
        for (int r = 0; r < S.dim; ++r)
            for (int c = 0; c < S.dim; ++c)
                if (T[r][c] != 0 && S.cuspidal_basis[j][c] != 0) img[r] += T[r][c] * S.cuspidal_basis[j][c];
        for (int i = 0; i < k; ++i) out[i][j] = img[free_cols[i]];
    }
    return out;
}

namespace {

constexpr u64 kQ = (1ULL << 61) - 1;

u64 addq(u64 a, u64 b) {
    u64 r = a + b;
    return r >= kQ ? r - kQ : r;
}
u64 subq(u64 a, u64 b) { return a >= b ? a - b : a + kQ - b; }
u64 mulq(u64 a, u64 b) { return mulmod(a, b, kQ); }
u64 toq(i64 x) { return x >= 0 ? static_cast<u64>(x) % kQ : kQ - (static_cast<u64>(-x) % kQ); }

class ModRref {
public:
    explicit ModRref(int ncols) : ncols_(ncols), col_row_(ncols, -1) {}
    void add(std::vector<u64> r) {
        for (int c = 0; c < ncols_; ++c) {
            if (r[c] == 0 || col_row_[c] < 0) continue;
            const auto& row = rows_[col_row_[c]];
            u64 f = r[c];
            for (int j = 0; j < ncols_; ++j)
                if (row[j]) r[j] = subq(r[j], mulq(f, row[j]));
        }
        int piv = -1;
        for (int c = 0; c < ncols_; ++c)
            if (r[c]) {
                piv = c;
                break;
            }
        if (piv < 0) return;
        u64 inv = powmod(r[piv], kQ - 2, kQ);
        for (auto& x : r) x = mulq(x, inv);
        for (auto& row : rows_) {
            if (row[piv] == 0) continue;
            u64 f = row[piv];
            for (int j = 0; j < ncols_; ++j)
                if (r[j]) row[j] = subq(row[j], mulq(f, r[j]));
        }
        col_row_[piv] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(r));
    }
    int rank() const { return static_cast<int>(rows_.size()); }
    // the unique kernel vector when the nullity is one
    std::vector<u64> kernel_vector() const {
        int f = -1;
        for (int c = 0; c < ncols_; ++c)
            if (col_row_[c] < 0) f = c;
        std::vector<u64> v(ncols_, 0);
        v[f] = 1;
        for (int c = 0; c < ncols_; ++c)
            if (col_row_[c] >= 0) v[c] = subq(0, rows_[col_row_[c]][f]);
        return v;
    }

private:
    int ncols_;
    std::vector<int> col_row_;
    std::vector<std::vector<u64>> rows_;
};

}  // namespace

EigenSymbol eigensymbol_from_values(std::shared_ptr<const P1List> p1, int sign, std::vector<i64> values) {
    EigenSymbol s;
    s.N_ = p1->level();
    s.sign_ = sign;
    s.gen_values_ = std::move(values);
    i64 N = s.N_;
    s.table_.assign(static_cast<size_t>(N * N), 0);
    for (i64 c = 0; c < N; ++c)
        for (i64 d = 0; d < N; ++d) {
            int idx = p1->index(c, d);
            if (idx >= 0) s.table_[static_cast<size_t>(c * N + d)] = static_cast<std::int32_t>(s.gen_values_[idx]);
        }
    s.p1_ = std::move(p1);
    return s;
}

EigenSymbol eigensymbol(const WeierstrassCurve& E, int sign) {
    i64 N = E.conductor;
    if (N <= 0) throw Error(ErrorKind::BadLevel, "curve has no conductor");
    auto p1 = std::make_shared<P1List>(N);
    SignedReduction red = signed_reduction(*p1, sign);
    int nf = red.nfree;
    if (nf == 0) throw Error(ErrorKind::EigenspaceNotCutOut, "empty symbol space");
    ModRref sys(nf);
    auto rows3 = three_term_rows(*p1, red);
    for (auto& row : rows3) {
        std::vector<u64> r(nf, 0);
        for (auto& [v, c] : row) r[v] = addq(r[v], toq(c));
        sys.add(std::move(r));
    }
    std::vector<std::pair<i64, i64>> used;  // (l, a_l)
    auto hecke_rows = [&](i64 l, i64 al, const std::function<void(std::vector<std::pair<int, i64>>&)>& sink) {
        auto mats = heilbronn_merel(l);
        for (int v = 0; v < nf; ++v) {
            std::vector<std::pair<int, i64>> row;
            auto push = [&](int var, i64 c) {
                for (auto& e : row)
                    if (e.first == var) {
                        e.second += c;
                        return;
                    }
                row.emplace_back(var, c);
            };
            size_t g = static_cast<size_t>(red.rep[v]);
            for (auto& M : mats) {
                int h = p1->act(g, M[0], M[1], M[2], M[3]);
                if (red.var[h] >= 0) push(red.var[h], red.sgn[h]);
            }
            push(v, -al);
            sink(row);
        }
    };
    bool done = false;
    for (i64 l : primes_up_to(100)) {
        if (N % l == 0) continue;
        i64 al;
        try {
            al = count_points_mod(E, l);
        } catch (const Error&) {
            continue;
        }
        hecke_rows(l, al, [&](std::vector<std::pair<int, i64>>& row) {
            std::vector<u64> r(nf, 0);
            for (auto& [v, c] : row) r[v] = addq(r[v], toq(c));
            sys.add(std::move(r));
        });
        used.emplace_back(l, al);
        int nullity = nf - sys.rank();
        if (nullity == 0)
            throw Error(ErrorKind::EigenspaceNotCutOut,
                        "no Hecke eigenvector with the curve's eigenvalues at level " + std::to_string(N));
        if (nullity == 1) {
            done = true;
            break;
        }
    }
    if (!done) throw Error(ErrorKind::EigenspaceNotCutOut, "eigenspace still larger than one after l <= 100");

    auto kv = sys.kernel_vector();
    std::vector<Rat> q(nf);
    Int lcm = 1;
    for (int i = 0; i < nf; ++i) {
        auto rr = rational_reconstruct(kv[i], kQ);
        if (!rr) throw Error(ErrorKind::EigenspaceNotCutOut, "rational reconstruction of the eigenvector failed");
        q[i] = Rat(to_int(rr->first), to_int(rr->second));
        q[i].canonicalize();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q[i].get_den_mpz_t());
    }
    std::vector<Int> zi(nf);
    Int g = 0;
    for (int i = 0; i < nf; ++i) {
        zi[i] = Int(q[i] * lcm);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zi[i].get_mpz_t());
    }
    std::vector<i64> phi(nf);
    for (int i = 0; i < nf; ++i) {
        zi[i] /= g;
        if (!zi[i].fits_slong_p()) throw Error(ErrorKind::EigenspaceNotCutOut, "eigenvector entries too large");
        phi[i] = zi[i].get_si();
    }
    // exact verification: relations, the primes used, and a few more
    for (auto& row : rows3) {
        i128 s = 0;
        for (auto& [v, c] : row) s += static_cast<i128>(c) * phi[v];
        if (s != 0) throw Error(ErrorKind::EigenspaceNotCutOut, "eigenvector fails a three-term relation");
    }
    std::vector<std::pair<i64, i64>> check = used;
    int extra = 0;
    for (i64 l : primes_up_to(200)) {
        if (extra >= 3) break;
        if (N % l == 0 || std::any_of(used.begin(), used.end(), [&](auto& u) { return u.first == l; })) continue;
        try {
            check.emplace_back(l, count_points_mod(E, l));
            ++extra;
        } catch (const Error&) {
        }
    }
    for (auto& [l, al] : check) {
        hecke_rows(l, al, [&](std::vector<std::pair<int, i64>>& row) {
            i128 s = 0;
            for (auto& [v, c] : row) s += static_cast<i128>(c) * phi[v];
            if (s != 0)
                throw Error(ErrorKind::EigenspaceNotCutOut,
                            "eigenvector fails the Hecke relation at l = " + std::to_string(l));
        });
    }
    std::vector<i64> values(p1->size(), 0);
    for (size_t i = 0; i < p1->size(); ++i)
        if (red.var[i] >= 0) values[i] = red.sgn[i] * phi[red.var[i]];
    EigenSymbol s = eigensymbol_from_values(p1, sign, std::move(values));
    for (auto& [l, al] : used) s.primes_used_.push_back(l);
    return s;
}

i64 EigenSymbol::path_value(i64 a, i64 b) const {
    if (b == 0) throw Error(ErrorKind::InvalidConfig, "path to a zero denominator");
    if (b < 0) {
        a = -a;
        b = -b;
    }
    i64 g = gcd64(a, b);
    a /= g;
    b /= g;
    i64 a0 = a >= 0 ? a / b : -((-a + b - 1) / b);
    i64 rem = a - a0 * b;
    i64 sum = symbol_value(1, 0);
    i64 num = b, den = rem, q1 = 1, q2 = 0;
    int k = 0;
    while (den != 0) {
        i64 ak = num / den, t = num - ak * den;
        num = den;
        den = t;
        ++k;
        i64 qk = ak * q1 + q2;
        sum += symbol_value(qk, (k % 2 == 1) ? q1 : -q1);
        q2 = q1;
        q1 = qk;
    }
    return sum;
}

namespace {

// rational with denominator <= bound closest to x, by continued fractions
std::optional<Rat> reconstruct_real(const Real& x, i64 bound, double* residual) {
    Real r = x;
    Int h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int it = 0; it < 200; ++it) {
        Real fl = floor(r);
        Int a;
        mpfr_get_z(a.get_mpz_t(), fl.backend().data(), MPFR_RNDN);
        Int h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > bound) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        Real frac = r - fl;
        if (frac == 0) break;
        r = 1 / frac;
    }
    if (k1 == 0) return std::nullopt;
    Rat q(h1, k1);
    q.canonicalize();
    Real approx = Real(h1.get_str()) / Real(k1.get_str());
    Real res = abs(approx - x) / (abs(x) == 0 ? Real(1) : abs(x));
    *residual = static_cast<double>(res);
    return q;
}

std::vector<i64> candidate_discriminants(int sign) {
    std::vector<i64> out;
    if (sign > 0) {
        out.push_back(1);
        for (i64 d = 2; d <= 200; ++d)
            if (is_fundamental_discriminant(d)) out.push_back(d);
    } else {
        for (i64 d = -3; d >= -200; --d)
            if (is_fundamental_discriminant(d)) out.push_back(d);
    }
    return out;
}

}  // namespace

NormalizationInfo normalize(EigenSymbol& sym, const WeierstrassCurve& E, const Periods& periods,
                            i64 forced_discriminant, int precision_bits) {
    RealPrecision guard(precision_bits + 32);
    i64 N = sym.level();
    std::vector<i64> cands =
        forced_discriminant ? std::vector<i64>{forced_discriminant} : candidate_discriminants(sym.sign());
    for (i64 D : cands) {
        if (gcd64(D, N) != 1) continue;
        if ((D > 0) != (sym.sign() > 0)) continue;
        i64 ad = std::llabs(D);
        i64 T = 0;
        if (ad == 1) {
            T = sym.path_value(0, 1);
        } else {
            for (i64 a = 1; a < ad; ++a) {
                int chi = kronecker(D, a);
                if (chi) T += chi * sym.path_value(a, ad);
            }
        }
        if (T == 0) continue;
        Real L = twisted_l_value(E, D, precision_bits);
        const Real& omega = sym.sign() > 0 ? periods.omega_plus : periods.omega_minus;
        if (abs(L) < Real("1e-8") * omega)
            throw Error(ErrorKind::NormalizationAmbiguous,
                        "twisted L-value numerically zero although the symbol sum is not");
        Real s = sqrt(Real(ad)) * L / (omega * T);
        double residual = 1;
        auto q = reconstruct_real(s, 1000000, &residual);
        if (!q || residual > 1e-20)
            throw Error(ErrorKind::NormalizationAmbiguous,
                        "scaling does not reconstruct to a small rational (D = " + std::to_string(D) + ")");
        sym.set_scaling(*q);
        return {D, *q, residual};
    }
    throw Error(ErrorKind::NormalizationAmbiguous, "no auxiliary discriminant with nonvanishing twisted value");
}

SymbolPair normalized_symbols(const WeierstrassCurve& E, int precision_bits) {
    Periods per = real_periods(E, precision_bits);
    SymbolPair s{eigensymbol(E, 1), eigensymbol(E, -1)};
    normalize(s.plus, E, per, 0, precision_bits);
    normalize(s.minus, E, per, 0, precision_bits);
    return s;
}

Rat twisted_symbol_value(const SymbolPair& syms, i64 d, i64 a, i64 den) {
    if (gcd64(a, d) != 1) throw Error(ErrorKind::InvalidConfig, "twisted symbol at a residue sharing a factor with d");
    if (a <= 0) throw Error(ErrorKind::InvalidConfig, "twisted symbol needs a positive residue");
    int chi = d == 1 ? 1 : kronecker(d, a);
    return Rat(chi) * syms.by_sign(d > 0 ? 1 : -1).evaluate(a, den);
}

}  // namespace ssp
