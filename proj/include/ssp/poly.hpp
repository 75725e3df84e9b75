#pragma once

#include "ssp/arith.hpp"

#include <string>
#include <vector>

namespace ssp {

// dense polynomials, coefficient i is the x^i term
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

template <class T>
void trim(std::vector<T>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

template <class T>
int degree(const std::vector<T>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

QPoly to_q(const ZPoly& f);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rat& c);
ZPoly mul(const ZPoly& a, const ZPoly& b);
// remainder modulo a monic integer polynomial
QPoly rem_monic(const QPoly& a, const ZPoly& m);
std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
bool is_zero(const QPoly& a);
Rat eval(const QPoly& f, const Rat& x);

// Σ c_r (1+x)^r rewritten in powers of x
QPoly shift_one(const std::vector<Rat>& c);
ZPoly shift_one(const std::vector<Int>& c);

// exact resultant of monic Q with P (det of multiplication by P on Q[x]/Q)
Rat resultant(const ZPoly& monic_q, const QPoly& p);

std::string to_string(const QPoly& f, const char* var = "x");

}  // namespace ssp
