#include "nl_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arith.hpp"
#include "cohomology.hpp"

namespace detsurf {

int64_t delta_of(int64_t h, int64_t d) {
  using checked::mul;
  using checked::sub;
  using checked::add;
  return checked::narrow(add(sub(mul(d, d), mul(8, h)), 8));
}

int64_t canonical_coset(int64_t d) {
  int64_t r = ((d % 4) + 4) % 4;
  return r == 3 ? 1 : r;
}

void validate(const LatticeInvariants& inv) {
  if (inv.disc <= 0) throw std::domain_error("lattice invariants: discriminant must be positive");
  if (inv.coset < 0 || inv.coset > 2) throw std::domain_error("lattice invariants: coset must be 0, 1 or 2");
  if (((inv.disc - inv.coset * inv.coset) % 8 + 8) % 8 != 0)
    throw std::domain_error("lattice invariants: discriminant and coset violate Delta = delta^2 mod 8");
}

RankTwoLattice representative(const LatticeInvariants& inv) {
  validate(inv);
  RankTwoLattice lat;
  lat.d = inv.coset;
  lat.h = (inv.coset * inv.coset - inv.disc) / 8 + 1;
  if (delta_of(lat.h, lat.d) != inv.disc) throw std::logic_error("representative: invariant round trip failed");
  return lat;
}

namespace {

int64_t isqrt(int64_t n) {
  int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

int64_t mu(int64_t h, int64_t d, const LatticeInvariants& inv) {
  validate(inv);
  const int64_t delta = delta_of(h, d);
  if (delta <= 0) throw std::domain_error("mu: requires delta_of(h, d) > 0");
  if (delta % inv.disc != 0) return 0;
  const int64_t q = delta / inv.disc;
  const int64_t y = isqrt(q);
  if (y * y != q) return 0;
  const RankTwoLattice lat = representative(inv);
  int64_t count = 0;
  for (int64_t sign : {+1, -1}) {
    // x = (d - d0*y)/4 must be integral for D = xH + yK to be a lattice class.
    if ((((d - lat.d * sign * y) % 4) + 4) % 4 == 0) ++count;
  }
  return count;
}

DivisorExpansion expand_divisor(int64_t h, int64_t d) {
  const int64_t delta = delta_of(h, d);
  if (delta <= 0) throw std::domain_error("expand_divisor: requires delta_of(h, d) > 0");
  DivisorExpansion terms;
  for (int64_t disc = 1; disc <= delta; ++disc) {
    if (delta % disc != 0) continue;
    const int64_t q = delta / disc;
    const int64_t y = isqrt(q);
    if (y * y != q) continue;
    // The residue of Delta' mod 8 forces the coset: 0 -> 0, 1 -> 1, 4 -> 2.
    int64_t coset;
    switch (disc % 8) {
      case 0: coset = 0; break;
      case 1: coset = 1; break;
      case 4: coset = 2; break;
      default: continue;
    }
    const int64_t m = mu(h, d, LatticeInvariants{disc, coset});
    if (m > 0) terms[LatticeInvariants{disc, coset}] = m;
  }
  if (!terms.count(LatticeInvariants{delta, canonical_coset(d)}))
    throw std::logic_error("expand_divisor: top term missing");
  return terms;
}

int64_t nl_number(int64_t h, int64_t d) {
  const int64_t delta = delta_of(h, d);
  if (delta <= 0) throw std::domain_error("nl_number: requires delta_of(h, d) > 0");
  if (delta > 20) throw std::domain_error("nl_number: discriminant beyond the tabulated range (Delta > 20)");
  switch (delta) {
    case 9: return 320;
    case 12: return 5016;
    case 16: return 76950;
    case 17: return 136512;
    case 20: return 640224;
    default: return 0;
  }
}

namespace {

int64_t degree_P_memo(const LatticeInvariants& inv, int64_t wh, int64_t wd,
                      std::map<LatticeInvariants, int64_t>& memo) {
  if (auto it = memo.find(inv); it != memo.end()) return it->second;
  if (delta_of(wh, wd) != inv.disc || canonical_coset(wd) != inv.coset)
    throw std::invalid_argument("degree_P: witness invariants do not match");
  const DivisorExpansion terms = expand_divisor(wh, wd);
  int64_t total = nl_number(wh, wd);
  for (const auto& [term, m] : terms) {
    if (term == inv) continue;
    const RankTwoLattice rep = representative(term);
    total -= m * degree_P_memo(term, rep.h, rep.d, memo);
  }
  const int64_t top = terms.at(inv);
  if (total % top != 0 || total / top < 0)
    throw std::logic_error("degree_P: inversion produced a non-integral or negative degree");
  const int64_t deg = total / top;
  memo[inv] = deg;
  return deg;
}

}  // namespace

int64_t degree_P(const LatticeInvariants& inv, int64_t witness_h, int64_t witness_d) {
  validate(inv);
  std::map<LatticeInvariants, int64_t> memo;
  return degree_P_memo(inv, witness_h, witness_d, memo);
}

std::array<QuarticRecord, 5> quartic_divisor_degrees() {
  std::vector<QuarticRecord> records;
  for (const PairClass& cls : enumerate_classes(4)) {
    QuarticRecord rec;
    rec.t = cls.representative.length();
    bool chosen = false;
    for (const AdmissiblePair& member : cls.members) {
      const auto [dc, gc] = curve_degree_genus(build_resolution(member));
      // The curves of the two members of an orbit have opposite degrees mod 4
      // (the dual curve is nH - C).  Take the one whose residue is already a
      // canonical coset, so the witness (g_C, d_C) feeds degree_P directly.
      if (chosen && dc % 4 == 3) continue;
      rec.pair = shift_normalize(member, 5);
      rec.curve_degree = dc;
      rec.curve_genus = gc;
      chosen = true;
      if (dc % 4 != 3) break;
    }
    rec.disc = delta_of(rec.curve_genus, rec.curve_degree);
    rec.coset = canonical_coset(rec.curve_degree);
    rec.degree = degree_P(LatticeInvariants{rec.disc, rec.coset}, rec.curve_genus, rec.curve_degree);
    records.push_back(std::move(rec));
  }
  std::sort(records.begin(), records.end(), [](const QuarticRecord& x, const QuarticRecord& y) {
    if (x.t != y.t) return x.t > y.t;
    return x.curve_degree < y.curve_degree;
  });
  if (records.size() != 5) throw std::logic_error("quartic_divisor_degrees: expected five classes");
  std::vector<int64_t> discs;
  for (const auto& r : records) discs.push_back(r.disc);
  std::vector<int64_t> sorted = discs;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<int64_t>{9, 12, 16, 17, 20})
    throw std::logic_error("quartic_divisor_degrees: unexpected discriminants");
  std::array<QuarticRecord, 5> out;
  std::copy(records.begin(), records.end(), out.begin());
  return out;
}

}  // namespace detsurf
