#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ssp {

using Int = mpz_class;
using Rat = mpq_class;
using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 powmod(u64 a, u64 e, u64 m);
i64 invmod(i64 a, i64 m);  // throws if not invertible
inline i64 modn(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}
i64 gcd64(i64 a, i64 b);
i64 ipow(i64 b, int e);  // overflow is the caller's problem

bool is_prime(u64 n);
bool is_prime(const Int& n);
std::vector<i64> primes_up_to(i64 bound);

int legendre(i64 a, i64 p);     // p odd prime
int kronecker(i64 d, i64 n);    // Kronecker symbol (d|n), n > 0
int kronecker(const Int& d, i64 n);
bool is_fundamental_discriminant(i64 d);

// valuation of a nonzero integer / rational; returns a large sentinel for zero
constexpr int kInfVal = 1 << 28;
int vp(const Int& x, i64 p);
int vp(const Rat& x, i64 p);
int vp(i64 x, i64 p);

std::map<Int, int> factor(Int n);  // |n|, trial division + Pollard rho
std::map<i64, int> factor(i64 n);

// rational number with |num|, den <= bound congruent to u mod m
std::optional<std::pair<i128, i128>> rational_reconstruct(u64 u, u64 m);
std::optional<Rat> rational_reconstruct(const Int& u, const Int& m, const Int& bound);

// best rational approximation with denominator <= max_den (continued fractions)
Rat best_rational(long double x, i64 max_den);

Int to_int(i128 x);
inline Int int_from(i64 x) { return Int(static_cast<long>(x)); }

}  // namespace ssp
