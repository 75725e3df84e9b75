#include "ssp/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ssp {

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

i64 gcd64(i64 a, i64 b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 invmod(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = modn(a, m);
    while (a1) {
        i64 q = g / a1;
        i64 t = g - q * a1;
        g = a1;
        a1 = t;
        t = x - q * x1;
        x = x1;
        x1 = t;
    }
    if (g != 1) throw std::domain_error("invmod: not invertible");
    return modn(x, m);
}

i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

bool is_prime(const Int& n) {
    if (n.fits_ulong_p()) return is_prime(static_cast<u64>(n.get_ui()));
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::vector<i64> primes_up_to(i64 bound) {
    std::vector<i64> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(bound + 1, true);
    for (i64 i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (i64 j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

int legendre(i64 a, i64 p) {
    a = modn(a, p);
    if (a == 0) return 0;
    u64 r = powmod(static_cast<u64>(a), static_cast<u64>((p - 1) / 2), static_cast<u64>(p));
    return r == 1 ? 1 : -1;
}

int kronecker(i64 d, i64 n) {
    if (n <= 0) throw std::domain_error("kronecker: n must be positive");
    int res = 1;
    while (n % 2 == 0) {
        n /= 2;
        i64 dm = modn(d, 8);
        if (dm % 2 == 0) return 0;
        if (dm == 3 || dm == 5) res = -res;
    }
    // Jacobi symbol (d | n) for odd n
    i64 a = modn(d, n), m = n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = m % 8;
            if (r == 3 || r == 5) res = -res;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) res = -res;
        a %= m;
    }
    return m == 1 ? res : 0;
}

int kronecker(const Int& d, i64 n) {
    Int r = d % Int(static_cast<long>(8 * n));
    return kronecker(r.get_si(), n);
}

bool is_fundamental_discriminant(i64 d) {
    if (d == 1) return true;
    if (d == 0) return false;
    i64 m = modn(d, 4);
    auto squarefree = [](i64 x) {
        x = std::llabs(x);
        for (i64 q = 2; q * q <= x; ++q) {
            if (x % (q * q) == 0) return false;
            if (x % q == 0) x /= q;
        }
        return true;
    };
    if (m == 1) return squarefree(d);
    if (m == 0) {
        i64 e = d / 4;
        i64 em = modn(e, 4);
        return (em == 2 || em == 3) && squarefree(e);
    }
    return false;
}

int vp(const Int& x, i64 p) {
    if (x == 0) return kInfVal;
    mpz_class t = x, pp = static_cast<long>(p);
    return static_cast<int>(mpz_remove(t.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

int vp(const Rat& x, i64 p) {
    if (x == 0) return kInfVal;
    return vp(Int(x.get_num()), p) - vp(Int(x.get_den()), p);
}

int vp(i64 x, i64 p) {
    if (x == 0) return kInfVal;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

namespace {

Int pollard_rho(const Int& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    std::mt19937_64 rng(0x5eed);
    for (;;) {
        Int c = static_cast<unsigned long>(rng() % 1000 + 1);
        Int x = static_cast<unsigned long>(rng() % 1000 + 2), y = x, d = 1;
        auto f = [&](const Int& v) {
            Int r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Int diff = x - y;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_rec(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Int, int> factor(Int n) {
    std::map<Int, int> out;
    if (n < 0) n = -n;
    if (n == 0) return out;
    for (unsigned long q = 2; q < 10000; ++q) {
        if (q * q > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            out[Int(q)]++;
            n /= q;
        }
    }
    factor_rec(n, out);
    return out;
}

std::map<i64, int> factor(i64 n) {
    std::map<i64, int> out;
    for (auto& [q, e] : factor(int_from(n))) out[q.get_si()] = e;
    return out;
}

std::optional<std::pair<i128, i128>> rational_reconstruct(u64 u, u64 m) {
    // half-extended Euclid until remainder below sqrt(m/2)
    i128 r0 = m, r1 = u % m, t0 = 0, t1 = 1;
    long double lim = std::sqrt(static_cast<long double>(m) / 2.0L);
    while (static_cast<long double>(r1) > lim) {
        i128 q = r0 / r1;
        i128 r2 = r0 - q * r1;
        i128 t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    if (static_cast<long double>(t1 < 0 ? -t1 : t1) > lim) return std::nullopt;
    i128 num = r1, den = t1;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 a = num < 0 ? -num : num, b = den;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a != 1) return std::nullopt;
    return std::make_pair(num, den);
}

std::optional<Rat> rational_reconstruct(const Int& u, const Int& m, const Int& bound) {
    Int r0 = m, r1 = u % m, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    Rat out(r1, t1);
    out.canonicalize();
    return out;
}

Rat best_rational(long double x, i64 max_den) {
    i64 h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    long double r = x;
    for (int it = 0; it < 64; ++it) {
        long double a = std::floor(r);
        i64 ai = static_cast<i64>(a);
        i64 h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        long double frac = r - a;
        if (frac < 1e-18L) break;
        r = 1.0L / frac;
    }
    Rat out(int_from(h1), int_from(k1));
    out.canonicalize();
    return out;
}

Int to_int(i128 x) {
    bool neg = x < 0;
    u128 u = neg ? static_cast<u128>(-x) : static_cast<u128>(x);
    Int hi = static_cast<unsigned long>(static_cast<u64>(u >> 64));
    Int lo = static_cast<unsigned long>(static_cast<u64>(u));
    Int r = (hi << 64) + lo;
    return neg ? Int(-r) : r;
}

}  // namespace ssp
