#include "ssp/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ssp {

QPoly to_q(const ZPoly& f) {
    QPoly out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[i];
    return out;
}

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly scale(const QPoly& a, const Rat& c) {
    QPoly r(a);
    for (auto& x : r) x *= c;
    trim(r);
    return r;
}

QPoly rem_monic(const QPoly& a, const ZPoly& m) {
    int dm = degree(m);
    if (dm < 0 || m[dm] != 1) throw std::invalid_argument("rem_monic: modulus not monic");
    QPoly r(a);
    trim(r);
    for (int i = static_cast<int>(r.size()) - 1; i >= dm; --i) {
        if (r[i] == 0) continue;
        Rat c = r[i];
        for (int j = 0; j <= dm; ++j) r[i - dm + j] -= c * m[j];
    }
    if (static_cast<int>(r.size()) > dm) r.resize(dm);
    trim(r);
    return r;
}

std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b) {
    int db = degree(b);
    if (db < 0) throw std::domain_error("divrem: division by zero polynomial");
    QPoly r(a), q;
    trim(r);
    if (degree(r) >= db) q.assign(degree(r) - db + 1, Rat(0));
    for (int i = degree(r); i >= db; --i) {
        if (r[i] == 0) continue;
        Rat c = r[i] / b[db];
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    trim(r);
    trim(q);
    return {q, r};
}

bool is_zero(const QPoly& a) {
    for (auto& c : a)
        if (c != 0) return false;
    return true;
}

Rat eval(const QPoly& f, const Rat& x) {
    Rat r = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) r = r * x + f[i];
    return r;
}

template <class T>
static std::vector<T> shift_one_impl(const std::vector<T>& c) {
    // Horner in (1+x): s <- s*(1+x) + c_r
    std::vector<T> s;
    for (int r = static_cast<int>(c.size()) - 1; r >= 0; --r) {
        s.push_back(T(0));
        for (int i = static_cast<int>(s.size()) - 1; i >= 1; --i) s[i] += s[i - 1];
        s[0] += c[r];
    }
    trim(s);
    return s;
}

QPoly shift_one(const std::vector<Rat>& c) { return shift_one_impl(c); }
ZPoly shift_one(const std::vector<Int>& c) { return shift_one_impl(c); }

Rat resultant(const ZPoly& monic_q, const QPoly& p) {
    int n = degree(monic_q);
    if (n <= 0) return 1;
    QPoly pr = rem_monic(p, monic_q);
    if (pr.empty()) return 0;
    // clear denominators, keep track of the scale
    Int den = 1;
    for (auto& c : pr) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    // rows: x^i * P mod Q
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    QPoly row = pr;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rat c = j < static_cast<int>(row.size()) ? row[j] : Rat(0);
            c *= den;
            m[i][j] = c.get_num();
        }
        QPoly shifted(row.size() + 1);
        for (size_t j = 0; j < row.size(); ++j) shifted[j + 1] = row[j];
        row = rem_monic(shifted, monic_q);
    }
    // Bareiss
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[s], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    Int det = m[n - 1][n - 1] * sign;
    Int dpow;
    mpz_pow_ui(dpow.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
    Rat out(det, dpow);
    out.canonicalize();
    return out;
}

std::string to_string(const QPoly& f, const char* var) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << f[i].get_str();
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace ssp
