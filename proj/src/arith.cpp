#include "arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace detsurf {

namespace checked {

namespace {
[[noreturn]] void overflow() { throw std::overflow_error("detsurf: 128-bit overflow in exact arithmetic"); }
}  // namespace

int128 add(int128 x, int128 y) {
  int128 r;
  if (__builtin_add_overflow(x, y, &r)) overflow();
  return r;
}

int128 sub(int128 x, int128 y) {
  int128 r;
  if (__builtin_sub_overflow(x, y, &r)) overflow();
  return r;
}

int128 mul(int128 x, int128 y) {
  int128 r;
  if (__builtin_mul_overflow(x, y, &r)) overflow();
  return r;
}

int64_t narrow(int128 v) {
  if (v > int128(INT64_MAX) || v < int128(INT64_MIN)) overflow();
  return static_cast<int64_t>(v);
}

}  // namespace checked

int64_t binom(int64_t n, int64_t k) {
  if (k < 0) throw std::invalid_argument("binom: k must be nonnegative");
  if (n < k) return 0;
  k = std::min(k, n - k);
  checked::int128 r = 1;
  for (int64_t i = 1; i <= k; ++i) {
    // Product of i consecutive integers is divisible by i, so this stays exact.
    r = checked::mul(r, n - k + i);
    r /= i;
  }
  return checked::narrow(r);
}

int64_t h0_twist(int64_t m) {
  if (m < 0) return 0;
  return binom(checked::narrow(checked::add(m, 3)), 3);
}

TwistSum::TwistSum(std::vector<int64_t> twists) : twists_(std::move(twists)) {
  if (twists_.empty()) throw std::invalid_argument("TwistSum: empty twist list");
  std::sort(twists_.begin(), twists_.end());
}

int64_t TwistSum::sum() const {
  checked::int128 s = 0;
  for (int64_t m : twists_) s = checked::add(s, m);
  return checked::narrow(s);
}

int64_t hom_dim(const TwistSum& x, const TwistSum& y) {
  checked::int128 total = 0;
  for (int64_t xm : x.twists())
    for (int64_t ym : y.twists()) total = checked::add(total, h0_twist(checked::narrow(checked::sub(xm, ym))));
  return checked::narrow(total);
}

}  // namespace detsurf
