#pragma once

#include "ssp/arith.hpp"
#include "ssp/curve.hpp"

#include <array>
#include <memory>
#include <vector>

namespace ssp {

// P^1(Z/N) with O(1) lookup of (c:d) for arbitrary integers c, d
class P1List {
public:
    explicit P1List(i64 N);
    i64 level() const { return N_; }
    size_t size() const { return reps_.size(); }
    const std::pair<i64, i64>& rep(size_t i) const { return reps_[i]; }
    int index(i64 c, i64 d) const { return index_[static_cast<size_t>(modn(c, N_) * N_ + modn(d, N_))]; }
    // right action of an integer matrix [[a,b],[c,d]] on the symbol i
    int act(size_t i, i64 a, i64 b, i64 c, i64 d) const;

private:
    i64 N_;
    std::vector<std::pair<i64, i64>> reps_;
    std::vector<int> index_;
};

i64 p1_count(i64 N);

using IntMatrix = std::array<i64, 4>;  // a, b, c, d
// matrices of determinant l with a > b >= 0, d > c >= 0
std::vector<IntMatrix> heilbronn_merel(i64 l);

// Generators identified up to sign by the two-term and star relations
struct SignedReduction {
    std::vector<int> var;   // free variable of each generator, -1 when forced to zero
    std::vector<int> sgn;   // generator = sgn * variable
    std::vector<int> rep;   // one generator per free variable
    int nfree = 0;
};

struct ManinSymbolSpace {
    i64 level = 0;
    int sign = 1;
    std::shared_ptr<const P1List> p1;
    SignedReduction red;
    // quotient by three-term relations: coordinates of every free variable in the basis
    int dim = 0;
    std::vector<std::vector<Rat>> coords;  // nfree x dim
    std::vector<int> basis_vars;           // free variables forming the basis
    // boundary map to cusp classes and the cuspidal subspace
    int ncusps = 0;
    std::vector<std::vector<Rat>> boundary;  // dim x ncusps
    int cuspidal_dim = 0;
    std::vector<std::vector<Rat>> cuspidal_basis;  // vectors in basis coordinates

    std::vector<Rat> reduce_generator(size_t gen) const;
};

ManinSymbolSpace build_space(i64 N, int sign);
// matrix of T_l on the whole quotient (columns are images of basis vectors)
std::vector<std::vector<Rat>> hecke_operator(const ManinSymbolSpace& space, i64 l);
// restriction of T_l to the cuspidal subspace, in cuspidal_basis coordinates
std::vector<std::vector<Rat>> hecke_operator_cuspidal(const ManinSymbolSpace& space, i64 l);

// Hecke eigen-functional on Manin symbols: x^sign(r) = scaling * phi({oo, r})
class EigenSymbol {
public:
    i64 level() const { return N_; }
    int sign() const { return sign_; }
    const Rat& scaling() const { return scaling_; }
    void set_scaling(const Rat& s) { scaling_ = s; }
    const Int& m_bound() const { return scaling_.get_den(); }
    const std::vector<i64>& generator_values() const { return gen_values_; }
    const P1List& p1() const { return *p1_; }
    std::vector<i64> eigen_primes() const { return primes_used_; }

    // phi({oo, a/b}) as an exact integer
    i64 path_value(i64 a, i64 b) const;
    // scaled value x(a/b)
    Rat evaluate(i64 a, i64 b) const { return scaling_ * Rat(int_from(path_value(a, b))); }
    // phi on the generator (c:d)
    i64 symbol_value(i64 c, i64 d) const { return table_[static_cast<size_t>(modn(c, N_) * N_ + modn(d, N_))]; }

    friend EigenSymbol eigensymbol(const WeierstrassCurve& E, int sign);
    friend EigenSymbol eigensymbol_from_values(std::shared_ptr<const P1List> p1, int sign, std::vector<i64> values);

private:
    i64 N_ = 0;
    int sign_ = 1;
    std::shared_ptr<const P1List> p1_;
    std::vector<i64> gen_values_;
    std::vector<std::int32_t> table_;
    std::vector<i64> primes_used_;
    Rat scaling_ = 1;
};

EigenSymbol eigensymbol(const WeierstrassCurve& E, int sign);
EigenSymbol eigensymbol_from_values(std::shared_ptr<const P1List> p1, int sign, std::vector<i64> values);

struct NormalizationInfo {
    i64 discriminant = 1;   // auxiliary twist used
    Rat scaling;
    double residual = 0;    // relative distance between float and reconstructed rational
};

// sets the scaling so that evaluate() returns the period-normalized symbol
NormalizationInfo normalize(EigenSymbol& sym, const WeierstrassCurve& E, const Periods& periods,
                            i64 forced_discriminant = 0, int precision_bits = 128);

struct SymbolPair {
    EigenSymbol plus, minus;
    const EigenSymbol& by_sign(int s) const { return s > 0 ? plus : minus; }
};

// both normalized symbols of E
SymbolPair normalized_symbols(const WeierstrassCurve& E, int precision_bits = 128);

// (d|a) x^{sign(d)}(a / den); requires gcd(a, d) = 1
Rat twisted_symbol_value(const SymbolPair& syms, i64 d, i64 a, i64 den);

}  // namespace ssp
