#ifndef DETSURF_PAIRS_HPP
#define DETSURF_PAIRS_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace detsurf {

// Degree data of a t x t matrix of forms on P^3: entry (i, j) is homogeneous
// of degree b[j] - a[i].  Both sequences are sorted nondecreasing with
// a[i] < b[i] pointwise and t >= 2.  Pairs differing by a common shift of all
// entries describe the same matrices, hence the same family of surfaces.
struct AdmissiblePair {
  std::vector<int64_t> a, b;

  int64_t length() const { return static_cast<int64_t>(a.size()); }
  int64_t degree() const;  // sum(b) - sum(a)

  bool operator==(const AdmissiblePair&) const = default;
};

// Throws std::invalid_argument if the pair violates an invariant.
void validate(const AdmissiblePair& p);

// The unique shift-equivalent pair with a[0] == base.
AdmissiblePair shift_normalize(const AdmissiblePair& p, int64_t base);

// The pair of the transposed matrix: (-b reversed, -a reversed), shifted back
// to a[0] == 0.  A matrix and its transpose have the same determinant, so a
// pair and its dual cut out the same family.  Involution up to shift.
AdmissiblePair transpose_dual(const AdmissiblePair& p);

// True iff b[0] > a[t-1], i.e. every entry of the generic matrix has degree
// >= 1.  A constant entry lets the matrix reduce to a smaller type and a zero
// entry below the diagonal block forces the determinant to factor, so only
// reduced pairs index genuine families.
bool is_reduced(const AdmissiblePair& p);

// Lexicographic order comparing a, then b.
bool lex_less(const AdmissiblePair& p, const AdmissiblePair& q);

// One family det(a, b): the lexicographically least normalized pair in the
// transpose orbit, together with the one or two normalized pairs forming it.
struct PairClass {
  AdmissiblePair representative;
  std::vector<AdmissiblePair> members;
};

struct EnumerateOptions {
  bool include_unreduced = false;  // keep pairs whose matrix has entries of degree <= 0
  bool transpose_dedup = true;     // merge each pair with its transpose dual
};

// All classes of degree d (d >= 3), sorted by (t, representative).  With
// include_unreduced the listing keeps unreduced pairs inside the enumeration
// window a[t-1] <= d - t; the full unreduced family is infinite, so that
// window is an inspection aid, not an exhaustive list.
std::vector<PairClass> enumerate_classes(int64_t d, const EnumerateOptions& opts = {});

// Streams every shift-normalized (a[0] = 0) reduced pair of the given degree
// and length without materializing the list.  The referenced vectors are
// scratch buffers owned by the enumerator and only valid during the call.
using PairVisitor = std::function<void(const std::vector<int64_t>& a, const std::vector<int64_t>& b)>;
void for_each_reduced_pair(int64_t d, int64_t t, const PairVisitor& visit);

}  // namespace detsurf

#endif
