#ifndef DETSURF_ARITH_HPP
#define DETSURF_ARITH_HPP

#include <cstdint>
#include <vector>

namespace detsurf {

// All arithmetic in this library is exact.  Intermediate values are carried
// in 128-bit registers and every operation is overflow-checked: anything that
// would wrap throws std::overflow_error instead.

namespace checked {

using int128 = __int128;

int128 add(int128 x, int128 y);
int128 sub(int128 x, int128 y);
int128 mul(int128 x, int128 y);

// Narrows to int64_t, throwing std::overflow_error if the value does not fit.
int64_t narrow(int128 v);

}  // namespace checked

// Binomial coefficient.  Returns 0 whenever n < k (so in particular for all
// negative n); requires k >= 0.
int64_t binom(int64_t n, int64_t k);

// Number of global sections of O(m) on P^3: binom(m+3, 3) for m >= 0, else 0.
int64_t h0_twist(int64_t m);

// A direct sum of line bundles on P^3.  A stored value m denotes one summand
// O(-m); twists are kept sorted ascending and duplicates are allowed.
class TwistSum {
 public:
  explicit TwistSum(std::vector<int64_t> twists);

  int64_t size() const { return static_cast<int64_t>(twists_.size()); }
  const std::vector<int64_t>& twists() const { return twists_; }
  int64_t min() const { return twists_.front(); }
  int64_t max() const { return twists_.back(); }
  int64_t sum() const;

  bool operator==(const TwistSum&) const = default;

 private:
  std::vector<int64_t> twists_;
};

// Dimension of the space of global homomorphisms X -> Y.  A map from a
// summand O(-x) of X to a summand O(-y) of Y has degree x - y, so this is
// the sum of h0_twist(x - y) over all ordered summand pairs.
int64_t hom_dim(const TwistSum& x, const TwistSum& y);

}  // namespace detsurf

#endif
