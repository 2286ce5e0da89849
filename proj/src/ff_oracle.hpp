#ifndef DETSURF_FF_ORACLE_HPP
#define DETSURF_FF_ORACLE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "pairs.hpp"

namespace detsurf {

bool is_prime(uint64_t n);

// Least prime p > 10^4 with p = 1 mod 2d, so that x^d + y^d splits into
// linear factors over F_p.
uint64_t default_fermat_modulus(int64_t d);

// Arithmetic modulo an odd prime p with 2 < p < 2^31 (products fit in 64 bits).
class PrimeField {
 public:
  explicit PrimeField(uint64_t p);

  uint64_t p() const { return p_; }
  uint64_t add(uint64_t x, uint64_t y) const { return (x + y) % p_; }
  uint64_t sub(uint64_t x, uint64_t y) const { return (x + p_ - y) % p_; }
  uint64_t mul(uint64_t x, uint64_t y) const { return x * y % p_; }
  uint64_t neg(uint64_t x) const { return x == 0 ? 0 : p_ - x; }
  uint64_t pow(uint64_t x, uint64_t e) const;
  uint64_t inv(uint64_t x) const;

  // An element of multiplicative order exactly n; requires n | p - 1.
  uint64_t root_of_unity(uint64_t n) const;

 private:
  uint64_t p_;
};

// Monomials of one degree in x, y, z, w are indexed by decreasing x-exponent,
// then decreasing y, then decreasing z; monomial_count(g) = binom(g+3, 3).
int64_t monomial_count(int64_t degree);
int64_t monomial_index(int64_t degree, const std::array<int64_t, 4>& exps);
std::vector<std::array<int64_t, 4>> monomial_exponents(int64_t degree);

// Dense homogeneous polynomial in 4 variables over F_p; coeffs has exactly
// monomial_count(degree) entries, all reduced mod p.
struct PrimeFieldPoly {
  uint64_t modulus = 0;
  int64_t degree = 0;
  std::vector<uint64_t> coeffs;

  bool is_zero() const;
  bool operator==(const PrimeFieldPoly&) const = default;
};

PrimeFieldPoly zero_poly(uint64_t modulus, int64_t degree);
PrimeFieldPoly constant_poly(uint64_t modulus, uint64_t value);
// c * x^e[0] y^e[1] z^e[2] w^e[3]
PrimeFieldPoly monomial_poly(uint64_t modulus, uint64_t c, const std::array<int64_t, 4>& exps);

PrimeFieldPoly poly_add(const PrimeFieldPoly& f, const PrimeFieldPoly& g);
PrimeFieldPoly poly_scale(const PrimeFieldPoly& f, uint64_t c);
PrimeFieldPoly poly_mul(const PrimeFieldPoly& f, const PrimeFieldPoly& g);

// A t x t matrix over F_p whose entry (i, j) is homogeneous of degree
// b[j] - a[i]; its determinant is homogeneous of degree d (or zero).
struct DetMatrix {
  AdmissiblePair pair;
  uint64_t modulus = 0;
  std::vector<PrimeFieldPoly> entries;  // row-major, t*t

  int64_t t() const { return pair.length(); }
  const PrimeFieldPoly& at(int64_t i, int64_t j) const { return entries[static_cast<size_t>(i * t() + j)]; }
};

void validate(const DetMatrix& m);

// Determinant by cofactor expansion memoized over column subsets; t <= 8.
PrimeFieldPoly det(const DetMatrix& m);

// Signed cofactor (-1)^(i+j) det(minor_ij).
PrimeFieldPoly cofactor(const DetMatrix& m, int64_t i, int64_t j);

// x^d + y^d + z^d + w^d.
PrimeFieldPoly fermat_poly(uint64_t modulus, int64_t d);

// The bidiagonal-plus-corner matrix with diagonal f_1..f_t, subdiagonal
// g_1..g_{t-1} and corner entry g_t, where prod f_i = x^d + y^d and
// prod g_i = (-1)^(t+1) (z^d + w^d), each factor a product of linear forms
// grouped to the entry degrees the pair prescribes.  Its determinant is
// exactly x^d + y^d + z^d + w^d.  Requires a reduced pair and an odd prime
// modulus = 1 mod 2d.
DetMatrix fermat_matrix(const AdmissiblePair& p, uint64_t modulus);

bool fermat_check(const AdmissiblePair& p, uint64_t modulus);

// Rank of the derivative of the determinant map at a seeded random matrix of
// the given type: the linear map taking an entry perturbation E_ij to
// cofactor_ij * E_ij, from entry-coefficient space to degree-d coefficient
// space.  rank - 1 equals dim det(a, b) for all but a vanishing fraction of
// samples.  Degenerate samples (det = 0) are retried with seed+1, ..., at
// most 8 times.  Requires a reduced pair and binom(d+3, 3) <= 10^4.
int64_t jacobian_rank(const AdmissiblePair& p, uint64_t modulus, uint64_t seed);

}  // namespace detsurf

#endif
