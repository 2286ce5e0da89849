#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pairs.hpp"

using namespace detsurf;

namespace {

AdmissiblePair mk(std::vector<int64_t> a, std::vector<int64_t> b) { return AdmissiblePair{std::move(a), std::move(b)}; }

// Oracle for the transpose dual: negate, reverse, shift to base 0.
AdmissiblePair brute_dual(const AdmissiblePair& p) {
  AdmissiblePair q;
  for (auto it = p.b.rbegin(); it != p.b.rend(); ++it) q.a.push_back(-*it);
  for (auto it = p.a.rbegin(); it != p.a.rend(); ++it) q.b.push_back(-*it);
  const int64_t k = q.a.front();
  for (auto& v : q.a) v -= k;
  for (auto& v : q.b) v -= k;
  return q;
}

}  // namespace

TEST_CASE("degree") {
  CHECK(mk({5, 5}, {6, 8}).degree() == 4);
  CHECK(mk({5, 6}, {7, 8}).degree() == 4);
  for (int64_t t = 2; t <= 6; ++t)
    CHECK(mk(std::vector<int64_t>(t, 0), std::vector<int64_t>(t, 1)).degree() == t);
}

TEST_CASE("validate rejects malformed pairs") {
  CHECK_THROWS_AS(validate(mk({0}, {1})), std::invalid_argument);          // t < 2
  CHECK_THROWS_AS(validate(mk({1, 0}, {2, 2})), std::invalid_argument);    // a unsorted
  CHECK_THROWS_AS(validate(mk({0, 0}, {2, 1})), std::invalid_argument);    // b unsorted
  CHECK_THROWS_AS(validate(mk({0, 2}, {1, 2})), std::invalid_argument);    // a[i] >= b[i]
  CHECK_THROWS_AS(validate(mk({0, 0, 0}, {1, 1})), std::invalid_argument); // length mismatch
  CHECK_NOTHROW(validate(mk({0, 0}, {1, 3})));
}

TEST_CASE("shift_normalize") {
  CHECK(shift_normalize(mk({0, 0}, {1, 3}), 5) == mk({5, 5}, {6, 8}));
  CHECK(shift_normalize(mk({5, 6}, {7, 8}), 0) == mk({0, 1}, {2, 3}));
  const AdmissiblePair p = mk({2, 3}, {4, 5});
  CHECK(shift_normalize(p, p.a.front()) == p);
  CHECK(shift_normalize(p, 5).degree() == p.degree());
}

TEST_CASE("transpose_dual examples") {
  CHECK(transpose_dual(mk({0, 0, 0}, {1, 2, 2})) == mk({0, 0, 1}, {2, 2, 2}));
  CHECK(transpose_dual(mk({0, 1}, {2, 3})) == mk({0, 1}, {2, 3}));  // self-dual
  CHECK(transpose_dual(mk({0, 0}, {1, 3})) == mk({0, 2}, {3, 3}));
}

TEST_CASE("is_reduced") {
  CHECK_FALSE(is_reduced(mk({0, 1}, {1, 4})));  // constant entry: b[0] - a[1] = 0
  CHECK(is_reduced(mk({0, 0}, {2, 2})));
  CHECK_FALSE(is_reduced(mk({0, 2}, {1, 5})));  // zero entry: b[0] - a[1] = -1
}

TEST_CASE("enumerate_classes d=4 reproduces the five quartic families") {
  const auto classes = enumerate_classes(4);
  REQUIRE(classes.size() == 5);
  // Representatives, sorted by (t, lexicographic):
  CHECK(classes[0].representative == mk({0, 0}, {1, 3}));
  CHECK(classes[1].representative == mk({0, 0}, {2, 2}));
  CHECK(classes[2].representative == mk({0, 1}, {2, 3}));
  CHECK(classes[3].representative == mk({0, 0, 0}, {1, 1, 2}));
  CHECK(classes[4].representative == mk({0, 0, 0, 0}, {1, 1, 1, 1}));
  // Normalized to a[0] = 5, the members cover the printed quartic rows.
  std::set<std::pair<std::vector<int64_t>, std::vector<int64_t>>> members5;
  for (const auto& cls : classes)
    for (const auto& m : cls.members) {
      const auto s = shift_normalize(m, 5);
      members5.insert({s.a, s.b});
    }
  CHECK(members5.count({{5, 5, 5, 5}, {6, 6, 6, 6}}));
  CHECK(members5.count({{5, 6, 6}, {7, 7, 7}}));
  CHECK(members5.count({{5, 5}, {7, 7}}));
  CHECK(members5.count({{5, 5}, {6, 8}}));
  CHECK(members5.count({{5, 6}, {7, 8}}));
}

TEST_CASE("enumerate_classes counts for small degrees") {
  // Degree 3 has two classes; they merge into one whole-space component only
  // in the codimension table.
  CHECK(enumerate_classes(3).size() == 2);
  CHECK(enumerate_classes(5).size() == 8);
  CHECK(enumerate_classes(6).size() == 16);
  CHECK(enumerate_classes(7).size() == 25);
  CHECK(enumerate_classes(8).size() == 44);
  CHECK(enumerate_classes(9).size() == 68);
  CHECK_THROWS_AS(enumerate_classes(2), std::invalid_argument);
}

TEST_CASE("enumerate_classes flags") {
  EnumerateOptions raw;
  raw.include_unreduced = true;
  // The inspection window of degree 4 adds (0,1|1,4), (0,2|1,5) and (0,2|2,4).
  const auto raw_classes = enumerate_classes(4, raw);
  bool found_unreduced = false;
  for (const auto& cls : raw_classes) found_unreduced |= !is_reduced(cls.representative);
  CHECK(found_unreduced);
  CHECK(raw_classes.size() > 5);

  EnumerateOptions nodedup;
  nodedup.transpose_dedup = false;
  const auto all_pairs = enumerate_classes(4, nodedup);
  CHECK(all_pairs.size() == 7);  // 5 classes, two of which have 2 members
  for (const auto& cls : all_pairs) CHECK(cls.members.size() == 1);
}

TEST_CASE("class structure invariants up to degree 9") {
  for (int64_t d = 3; d <= 9; ++d) {
    for (const auto& cls : enumerate_classes(d)) {
      const auto& rep = cls.representative;
      CHECK_NOTHROW(validate(rep));
      CHECK(is_reduced(rep));
      CHECK(rep.a.front() == 0);
      CHECK(rep.degree() == d);
      CHECK(rep.length() <= d);
      CHECK(cls.members.size() <= 2);
      CHECK(transpose_dual(transpose_dual(rep)) == rep);
      CHECK(transpose_dual(rep) == brute_dual(rep));
      // Representative is the lex-least member of its orbit.
      for (const auto& m : cls.members) CHECK_FALSE(lex_less(m, rep));
      if (cls.members.size() == 2) CHECK(transpose_dual(cls.members[0]) == cls.members[1]);
    }
  }
}

TEST_CASE("streaming enumeration agrees with the class list") {
  for (int64_t d = 3; d <= 8; ++d) {
    int64_t streamed = 0;
    for (int64_t t = 2; t <= d; ++t)
      for_each_reduced_pair(d, t, [&](const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
        AdmissiblePair p{a, b};
        CHECK(is_reduced(p));
        CHECK(p.degree() == d);
        ++streamed;
      });
    EnumerateOptions nodedup;
    nodedup.transpose_dedup = false;
    CHECK(streamed == static_cast<int64_t>(enumerate_classes(d, nodedup).size()));
  }
}
