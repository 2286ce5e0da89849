#ifndef DETSURF_NL_LATTICE_HPP
#define DETSURF_NL_LATTICE_HPP

#include <array>
#include <cstdint>
#include <map>

#include "pairs.hpp"

namespace detsurf {

// Rank-2 quasi-polarized K3 lattice with Gram matrix [[4, d], [d, 2h-2]]:
// the polarization H with H^2 = 4 and a second class K with K^2 = 2h-2 and
// H.K = d.  Its isomorphism class is determined by the discriminant
// Delta = d^2 - 8h + 8 and the coset of d mod 4.
struct RankTwoLattice {
  int64_t h = 0;
  int64_t d = 0;

  std::array<std::array<int64_t, 2>, 2> gram() const { return {{{4, d}, {d, 2 * h - 2}}}; }
};

// Discriminant d^2 - 8h + 8; may be <= 0.
int64_t delta_of(int64_t h, int64_t d);

// Reduces d mod 4 into {0, 1, 2}: residue 3 is identified with 1, which
// corresponds to replacing a generator K by -K + nH.
int64_t canonical_coset(int64_t d);

// (Delta, delta) with Delta > 0, delta in {0, 1, 2} and Delta = delta^2 mod 8.
struct LatticeInvariants {
  int64_t disc = 0;
  int64_t coset = 0;

  auto operator<=>(const LatticeInvariants&) const = default;
};

// Throws std::domain_error unless the invariants admit a lattice.
void validate(const LatticeInvariants& inv);

// A lattice realizing the invariants: d0 = coset, h0 = (coset^2 - disc)/8 + 1.
// The round trip delta_of(h0, d0) == disc is asserted.
RankTwoLattice representative(const LatticeInvariants& inv);

// Multiplicity mu(h, d | Delta, delta): the number of classes D in the
// representative lattice with D^2 = 2h-2 and H.D = d.  Writing D = xH + yK
// forces y^2 = delta_of(h,d) / Delta, so the count is the number of signs
// y = +-sqrt(...) with x = (d - d0 y)/4 integral.  Always 0, 1 or 2.
int64_t mu(int64_t h, int64_t d, const LatticeInvariants& inv);

// The expansion D_{h,d} = sum mu(h,d | Delta', delta') P_{Delta',delta'} over
// invariants with positive multiplicity.  Requires delta_of(h, d) > 0; the
// term at (delta_of(h,d), canonical_coset(d)) is always present.
using DivisorExpansion = std::map<LatticeInvariants, int64_t>;
DivisorExpansion expand_divisor(int64_t h, int64_t d);

// Noether-Lefschetz number NL_{h,d}: the q^(Delta/8) coefficient of the
// theta-type modular form, tabulated for 0 < Delta <= 20.  The nonzero
// entries are Delta = 9, 12, 16, 17, 20 with values 320, 5016, 76950,
// 136512, 640224; every other Delta in range gives 0.  Out-of-range
// discriminants throw std::domain_error.
int64_t nl_number(int64_t h, int64_t d);

// Degree of the divisor P_{Delta,delta} on a general pencil, computed by
// triangular inversion of expand_divisor at a witness (h, d) whose invariants
// equal inv.  Proper terms recurse through their own representatives.
int64_t degree_P(const LatticeInvariants& inv, int64_t witness_h, int64_t witness_d);

struct QuarticRecord {
  AdmissiblePair pair;  // normalized so a[0] = 5
  int64_t t = 0;
  int64_t curve_degree = 0;  // d_C
  int64_t curve_genus = 0;   // g_C
  int64_t disc = 0;          // Delta
  int64_t coset = 0;         // delta
  int64_t degree = 0;
};

// The five divisors of determinantal quartics, ordered by decreasing t then
// increasing curve degree, with their lattice invariants and degrees.
std::array<QuarticRecord, 5> quartic_divisor_degrees();

}  // namespace detsurf

#endif
