#include "pairs.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "arith.hpp"

namespace detsurf {

int64_t AdmissiblePair::degree() const {
  checked::int128 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = checked::add(s, checked::sub(b[i], a[i]));
  return checked::narrow(s);
}

void validate(const AdmissiblePair& p) {
  if (p.a.size() != p.b.size()) throw std::invalid_argument("admissible pair: length mismatch");
  if (p.a.size() < 2) throw std::invalid_argument("admissible pair: length must be >= 2");
  for (size_t i = 0; i + 1 < p.a.size(); ++i) {
    if (p.a[i] > p.a[i + 1]) throw std::invalid_argument("admissible pair: a not sorted");
    if (p.b[i] > p.b[i + 1]) throw std::invalid_argument("admissible pair: b not sorted");
  }
  for (size_t i = 0; i < p.a.size(); ++i)
    if (p.a[i] >= p.b[i]) throw std::invalid_argument("admissible pair: requires a[i] < b[i]");
}

AdmissiblePair shift_normalize(const AdmissiblePair& p, int64_t base) {
  validate(p);
  const int64_t k = checked::narrow(checked::sub(base, p.a.front()));
  AdmissiblePair q = p;
  for (auto& v : q.a) v = checked::narrow(checked::add(v, k));
  for (auto& v : q.b) v = checked::narrow(checked::add(v, k));
  return q;
}

AdmissiblePair transpose_dual(const AdmissiblePair& p) {
  validate(p);
  AdmissiblePair q;
  q.a.assign(p.b.rbegin(), p.b.rend());
  q.b.assign(p.a.rbegin(), p.a.rend());
  for (auto& v : q.a) v = -v;
  for (auto& v : q.b) v = -v;
  return shift_normalize(q, 0);
}

bool is_reduced(const AdmissiblePair& p) {
  validate(p);
  return p.b.front() > p.a.back();
}

bool lex_less(const AdmissiblePair& p, const AdmissiblePair& q) {
  if (p.a != q.a) return p.a < q.a;
  return p.b < q.b;
}

namespace {

// Enumerates sorted b-sequences: position i, previous value prev, remaining
// sum rest, with every later entry >= the current one.  `lower` gives the
// pointwise minimum for each position (a[i] + 1 for raw pairs, a constant
// a[t-1] + 1 for reduced ones).
void extend_b(std::vector<int64_t>& b, size_t i, int64_t prev, int64_t rest,
              const std::vector<int64_t>& lower, const std::function<void()>& emit) {
  const size_t t = b.size();
  if (i == t) {
    if (rest == 0) emit();
    return;
  }
  for (int64_t v = std::max(prev, lower[i]);; ++v) {
    // Every remaining slot needs at least max(v, lower[j]); stop once that
    // minimum exceeds what is left to distribute.
    int64_t need = 0;
    for (size_t j = i; j < t; ++j) need += std::max(v, lower[j]);
    if (need > rest) break;
    b[i] = v;
    extend_b(b, i + 1, v, rest - v, lower, emit);
  }
}

using RawVisitor = std::function<void(const std::vector<int64_t>&, const std::vector<int64_t>&)>;

// Enumerates a[1..t-1] nondecreasing in [0, d-t]; a[0] = 0.  For each
// completed a-sequence, enumerates the admissible b-sequences.
void extend_a(std::vector<int64_t>& a, std::vector<int64_t>& b, size_t pos, int64_t d,
              bool include_unreduced, const RawVisitor& visit) {
  const size_t t = a.size();
  if (pos == t) {
    int64_t sum_a = 0;
    for (int64_t v : a) sum_a += v;
    std::vector<int64_t> lower(t);
    const int64_t rest = sum_a + d;
    if (include_unreduced) {
      for (size_t i = 0; i < t; ++i) lower[i] = a[i] + 1;
      extend_b(b, 0, lower[0], rest, lower, [&] { visit(a, b); });
    } else {
      std::fill(lower.begin(), lower.end(), a.back() + 1);
      if (rest >= static_cast<int64_t>(t) * lower[0])
        extend_b(b, 0, lower[0], rest, lower, [&] { visit(a, b); });
    }
    return;
  }
  const int64_t prev = a[pos - 1];
  int64_t partial = 0;
  for (size_t j = 0; j < pos; ++j) partial += a[j];
  const int64_t left = static_cast<int64_t>(t - pos);
  for (int64_t v = prev; v <= d - static_cast<int64_t>(t); ++v) {
    if (!include_unreduced) {
      // Best reachable slack: fill the remaining entries with v, giving
      // sum(a) = partial + left*v and max(a) = v; a reduced b-sequence then
      // needs t*(v+1) <= sum(a) + d.
      if (partial + left * v + d - static_cast<int64_t>(t) * (v + 1) < 0) break;
    }
    a[pos] = v;
    extend_a(a, b, pos + 1, d, include_unreduced, visit);
  }
}

void for_each_pair(int64_t d, int64_t t, bool include_unreduced, const RawVisitor& visit) {
  if (t < 2 || t > d) return;
  std::vector<int64_t> a(static_cast<size_t>(t), 0), b(static_cast<size_t>(t), 0);
  extend_a(a, b, 1, d, include_unreduced, visit);
}

}  // namespace

void for_each_reduced_pair(int64_t d, int64_t t, const PairVisitor& visit) {
  for_each_pair(d, t, /*include_unreduced=*/false, visit);
}

std::vector<PairClass> enumerate_classes(int64_t d, const EnumerateOptions& opts) {
  if (d < 3) throw std::invalid_argument("enumerate_classes: requires d >= 3");
  std::vector<PairClass> out;
  using Key = std::pair<std::vector<int64_t>, std::vector<int64_t>>;
  for (int64_t t = 2; t <= d; ++t) {
    std::map<Key, PairClass> at_t;
    for_each_pair(d, t, opts.include_unreduced, [&](const std::vector<int64_t>& av, const std::vector<int64_t>& bv) {
      AdmissiblePair p{av, bv};
      PairClass cls;
      if (opts.transpose_dedup) {
        AdmissiblePair dual = transpose_dual(p);
        if (p == dual) {
          cls.representative = p;
          cls.members = {p};
        } else if (lex_less(p, dual)) {
          cls.representative = p;
          cls.members = {p, dual};
        } else {
          cls.representative = dual;
          cls.members = {dual, p};
        }
      } else {
        cls.representative = p;
        cls.members = {p};
      }
      at_t.try_emplace(Key{cls.representative.a, cls.representative.b}, std::move(cls));
    });
    for (auto& [key, cls] : at_t) out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace detsurf
