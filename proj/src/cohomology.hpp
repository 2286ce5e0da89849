#ifndef DETSURF_COHOMOLOGY_HPP
#define DETSURF_COHOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "pairs.hpp"

namespace detsurf {

// Twist data of the length-one free resolution of the ACM curve attached to
// det(a, b): the pair is shifted so that a[0] = d + 1, then a0 = d is
// prepended on the A side.  Both sums have equal twist totals, and for
// reduced pairs every B twist strictly exceeds every A twist.
struct Resolution {
  TwistSum A, B;
  int64_t d = 0;
  int64_t t = 0;
};

// Requires a reduced pair.
Resolution build_resolution(const AdmissiblePair& p);

// Degree and arithmetic genus of the resolved curve,
//   d_C = (sum b^2 - sum a^2) / 2,   g_C = 1 + (sum b^3 - sum a^3) / 6 - 2 d_C.
// Both divisions must be exact; a remainder signals a broken resolution.
std::pair<int64_t, int64_t> curve_degree_genus(const Resolution& r);

// Dimension of the family of ACM curves with these Betti numbers:
//   hom(B,A) + hom(A,B) - hom(A,A) - hom(B,B) + 1.
int64_t hilbert_dim(const Resolution& r);

// h^0 of the twisted ideal sheaf I_C(k), read off the resolution.
int64_t ideal_h0(const Resolution& r, int64_t k);

// (h^0, h^1) of O_C(k); h^0 from the ideal-sheaf sequence, h^1 by
// Riemann-Roch.  Exact for ACM curves.
std::pair<int64_t, int64_t> curve_h0_h1(const Resolution& r, int64_t k);

// h^0(X, O_X(C)) = binom(d-1, 3) + g_C - (d-4) d_C, always >= 1.
int64_t h0_OXC(const Resolution& r);

// Dimension of det(a, b) inside |O(d)|:
//   2 + hom(B,A) - hom(A,A) - hom(B,B) - binom(d-1,3) - g_C + (d-4) d_C.
// Cross-checked against hilbert_dim - h0_OXC + 1 on every call.
int64_t dim_det(const AdmissiblePair& p);

enum class Classification { WholeSpace, General, Special };

const char* to_string(Classification c);

struct CurveInvariants {
  int64_t degree = 0;     // d_C
  int64_t genus = 0;      // g_C
  int64_t h1_od = 0;      // h^1(O_C(d))
  int64_t kappa = 0;      // binom(d-1,3) - codim
  int64_t h1_normal = 0;  // h^1 of the normal sheaf = kappa + h1_od
};

struct ComponentReport {
  AdmissiblePair pair;  // the pair the report was computed from
  int64_t d = 0, t = 0;
  CurveInvariants curve;
  int64_t hilbert_dim = 0;
  int64_t h0_oxc = 0;
  int64_t dim = 0;
  int64_t codim = 0;
  Classification classification = Classification::Special;
};

// Assembles every invariant of one family and asserts kappa >= 0 and the
// codimension bounds d-3 <= codim <= binom(d-1,3).
ComponentReport component_report(const AdmissiblePair& p);

// The extremal pairs of fixed degree and length, 2 <= t <= d:
//   max: a = (0, d-t, ..., d-t), b = (d-t+1, ..., d-t+1)
//   min: a = (0, ..., 0),        b = k repeated t-r times then k+1 repeated r,
// where d = t*k + r with 0 <= r < t.
std::pair<AdmissiblePair, AdmissiblePair> extremal_pairs(int64_t d, int64_t t);

// True iff dim_det on the extremal pairs matches the closed forms
//   codim(max) = t(t-1)(3d-2t-5)/6 for t < d, binom(d-1,3) for t = d,
//   dim(min)   = binom(k-1,3) t^2 + binom(k-1,2) r t + 2 d^2 + 1.
bool closed_form_check(int64_t d, int64_t t);

struct SweepCell {
  int64_t d = 0, t = 0;
  int64_t min_dim = 0, max_dim = 0;
  int64_t num_pairs = 0;    // shift-normalized reduced pairs
  int64_t num_classes = 0;  // transpose orbits
  int64_t violations = 0;   // pairs with dim outside [min_dim, max_dim]
  bool closed_forms_ok = true;
  std::optional<AdmissiblePair> counterexample;
};

// Checks min <= dim det(a,b) <= max for every reduced pair with d <= d_max,
// one cell per (d, t).  Violations are data, not errors.
std::vector<SweepCell> verify_conjecture(int64_t d_max);

struct TableRow {
  int64_t d = 0;
  std::vector<int64_t> codims;  // sorted ascending, whole-space classes collapsed to one 0
  int64_t count = 0;
};

// Codimension multiset of all families of degree d.  Classes filling the
// whole of |O(d)| (codim 0) collapse into a single component.
TableRow component_table(int64_t d);

// Formats a sorted multiset in the compressed notation where "k:r" means the
// value r occurs k times, e.g. {2, 3, 4, 4, 4, 4, 4, 4} -> "2, 3, 6:4".
std::string format_codim_multiset(const std::vector<int64_t>& codims);

}  // namespace detsurf

#endif
