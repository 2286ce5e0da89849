#include "cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace detsurf {

using checked::int128;

Resolution build_resolution(const AdmissiblePair& p) {
  if (!is_reduced(p)) throw std::invalid_argument("build_resolution: pair is not reduced");
  const int64_t d = p.degree();
  AdmissiblePair q = shift_normalize(p, d + 1);
  std::vector<int64_t> at = q.a;
  at.insert(at.begin(), d);
  Resolution r{TwistSum(std::move(at)), TwistSum(q.b), d, p.length()};
  if (r.A.sum() != r.B.sum()) throw std::logic_error("build_resolution: twist totals differ");
  return r;
}

namespace {

int128 power_sum(const TwistSum& s, int exponent) {
  int128 total = 0;
  for (int64_t m : s.twists()) {
    int128 term = m;
    for (int e = 1; e < exponent; ++e) term = checked::mul(term, m);
    total = checked::add(total, term);
  }
  return total;
}

int64_t exact_div(int128 num, int64_t den, const char* what) {
  if (num % den != 0) throw std::logic_error(std::string("non-integral division in ") + what);
  return checked::narrow(num / den);
}

}  // namespace

std::pair<int64_t, int64_t> curve_degree_genus(const Resolution& r) {
  const int128 sq = checked::sub(power_sum(r.B, 2), power_sum(r.A, 2));
  const int64_t dc = exact_div(sq, 2, "curve degree");
  if (dc < 1) throw std::logic_error("curve_degree_genus: nonpositive curve degree");
  const int128 cu = checked::sub(power_sum(r.B, 3), power_sum(r.A, 3));
  const int64_t gc = checked::narrow(checked::sub(checked::add(1, exact_div(cu, 6, "curve genus")), checked::mul(2, dc)));
  return {dc, gc};
}

int64_t hilbert_dim(const Resolution& r) {
  const int128 v = checked::add(
      checked::sub(checked::sub(checked::add(hom_dim(r.B, r.A), hom_dim(r.A, r.B)), hom_dim(r.A, r.A)),
                   hom_dim(r.B, r.B)),
      1);
  return checked::narrow(v);
}

int64_t ideal_h0(const Resolution& r, int64_t k) {
  int128 total = 0;
  for (int64_t m : r.A.twists()) total = checked::add(total, h0_twist(checked::narrow(checked::sub(k, m))));
  for (int64_t m : r.B.twists()) total = checked::sub(total, h0_twist(checked::narrow(checked::sub(k, m))));
  const int64_t v = checked::narrow(total);
  if (v < 0) throw std::logic_error("ideal_h0: negative section count");
  return v;
}

std::pair<int64_t, int64_t> curve_h0_h1(const Resolution& r, int64_t k) {
  const auto [dc, gc] = curve_degree_genus(r);
  const int64_t h0 = checked::narrow(checked::sub(h0_twist(k), ideal_h0(r, k)));
  const int128 chi = checked::sub(checked::add(checked::mul(k, dc), 1), gc);
  const int64_t h1 = checked::narrow(checked::sub(h0, chi));
  if (h0 < 0 || h1 < 0) throw std::logic_error("curve_h0_h1: negative cohomology");
  return {h0, h1};
}

int64_t h0_OXC(const Resolution& r) {
  const auto [dc, gc] = curve_degree_genus(r);
  const int64_t v = checked::narrow(
      checked::sub(checked::add(binom(r.d - 1, 3), gc), checked::mul(checked::sub(r.d, 4), dc)));
  if (v < 1) throw std::logic_error("h0_OXC: expected a positive section count");
  return v;
}

int64_t dim_det(const AdmissiblePair& p) {
  const Resolution r = build_resolution(p);
  const auto [dc, gc] = curve_degree_genus(r);
  int128 v = 2;
  v = checked::add(v, hom_dim(r.B, r.A));
  v = checked::sub(v, hom_dim(r.A, r.A));
  v = checked::sub(v, hom_dim(r.B, r.B));
  v = checked::sub(v, binom(r.d - 1, 3));
  v = checked::sub(v, gc);
  v = checked::add(v, checked::mul(checked::sub(r.d, 4), dc));
  const int64_t dim = checked::narrow(v);
  // The same number must come out of the Hilbert-scheme route: the family of
  // curves fibers over det(a, b) with fibers of dimension h0_OXC - 1.
  const int64_t cross = checked::narrow(checked::sub(hilbert_dim(r), checked::sub(h0_OXC(r), 1)));
  if (dim != cross) throw std::logic_error("dim_det: dimension formula and Hilbert-scheme route disagree");
  return dim;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::WholeSpace: return "WholeSpace";
    case Classification::General: return "General";
    case Classification::Special: return "Special";
  }
  return "?";
}

ComponentReport component_report(const AdmissiblePair& p) {
  const Resolution r = build_resolution(p);
  ComponentReport rep;
  rep.pair = shift_normalize(p, 0);
  rep.d = r.d;
  rep.t = r.t;
  const auto [dc, gc] = curve_degree_genus(r);
  rep.curve.degree = dc;
  rep.curve.genus = gc;
  rep.hilbert_dim = hilbert_dim(r);
  rep.h0_oxc = h0_OXC(r);
  rep.dim = dim_det(p);
  const int64_t ambient = checked::narrow(checked::sub(binom(r.d + 3, 3), 1));
  rep.codim = checked::narrow(checked::sub(ambient, rep.dim));
  const int64_t general_codim = binom(r.d - 1, 3);
  rep.curve.kappa = checked::narrow(checked::sub(general_codim, rep.codim));
  if (rep.curve.kappa < 0) throw std::logic_error("component_report: negative kappa");
  if (rep.codim < r.d - 3) throw std::logic_error("component_report: codimension below the lower bound");
  if (rep.codim == 0 && r.d > 3) throw std::logic_error("component_report: whole-space family above degree 3");
  rep.curve.h1_od = curve_h0_h1(r, r.d).second;
  rep.curve.h1_normal = checked::narrow(checked::add(rep.curve.kappa, rep.curve.h1_od));
  if (rep.codim == 0)
    rep.classification = Classification::WholeSpace;
  else if (rep.codim == general_codim)
    rep.classification = Classification::General;
  else
    rep.classification = Classification::Special;
  return rep;
}

std::pair<AdmissiblePair, AdmissiblePair> extremal_pairs(int64_t d, int64_t t) {
  if (t < 2 || t > d) throw std::invalid_argument("extremal_pairs: requires 2 <= t <= d");
  const int64_t k = d / t, rr = d % t;
  AdmissiblePair min_pair;
  min_pair.a.assign(static_cast<size_t>(t), 0);
  min_pair.b.assign(static_cast<size_t>(t - rr), k);
  min_pair.b.insert(min_pair.b.end(), static_cast<size_t>(rr), k + 1);
  AdmissiblePair max_pair;
  max_pair.a.assign(static_cast<size_t>(t), d - t);
  max_pair.a.front() = 0;
  max_pair.b.assign(static_cast<size_t>(t), d - t + 1);
  validate(min_pair);
  validate(max_pair);
  return {min_pair, max_pair};
}

bool closed_form_check(int64_t d, int64_t t) {
  const auto [min_pair, max_pair] = extremal_pairs(d, t);
  const int64_t ambient = checked::narrow(checked::sub(binom(d + 3, 3), 1));

  const int64_t max_codim = checked::narrow(checked::sub(ambient, dim_det(max_pair)));
  int64_t expected_codim;
  if (t < d) {
    const int128 num = checked::mul(checked::mul(t, t - 1), checked::sub(checked::mul(3, d), 2 * t + 5));
    if (num % 6 != 0) return false;
    expected_codim = checked::narrow(num / 6);
  } else {
    expected_codim = binom(d - 1, 3);
  }
  if (max_codim != expected_codim) return false;

  const int64_t k = d / t, rr = d % t;
  const int128 expected_dim =
      checked::add(checked::add(checked::mul(binom(k - 1, 3), checked::mul(t, t)),
                                checked::mul(binom(k - 1, 2), checked::mul(rr, t))),
                   checked::add(checked::mul(2, checked::mul(d, d)), 1));
  return dim_det(min_pair) == checked::narrow(expected_dim);
}

std::vector<SweepCell> verify_conjecture(int64_t d_max) {
  if (d_max < 3) throw std::invalid_argument("verify_conjecture: requires d_max >= 3");
  std::vector<SweepCell> cells;
  for (int64_t d = 3; d <= d_max; ++d) {
    for (int64_t t = 2; t <= d; ++t) {
      SweepCell cell;
      cell.d = d;
      cell.t = t;
      const auto [min_pair, max_pair] = extremal_pairs(d, t);
      cell.min_dim = dim_det(min_pair);
      cell.max_dim = dim_det(max_pair);
      cell.closed_forms_ok = closed_form_check(d, t);
      int64_t self_dual = 0;
      for_each_reduced_pair(d, t, [&](const std::vector<int64_t>& av, const std::vector<int64_t>& bv) {
        AdmissiblePair p{av, bv};
        ++cell.num_pairs;
        if (transpose_dual(p) == p) ++self_dual;
        const int64_t dim = dim_det(p);
        if (dim < cell.min_dim || dim > cell.max_dim) {
          ++cell.violations;
          if (!cell.counterexample) cell.counterexample = p;
        }
      });
      cell.num_classes = (cell.num_pairs + self_dual) / 2;
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

TableRow component_table(int64_t d) {
  TableRow row;
  row.d = d;
  bool whole_space = false;
  for (const PairClass& cls : enumerate_classes(d)) {
    const ComponentReport rep = component_report(cls.representative);
    if (rep.codim == 0)
      whole_space = true;
    else
      row.codims.push_back(rep.codim);
  }
  std::sort(row.codims.begin(), row.codims.end());
  if (whole_space) row.codims.insert(row.codims.begin(), 0);
  row.count = static_cast<int64_t>(row.codims.size());
  return row;
}

std::string format_codim_multiset(const std::vector<int64_t>& codims) {
  std::string out;
  for (size_t i = 0; i < codims.size();) {
    size_t j = i;
    while (j < codims.size() && codims[j] == codims[i]) ++j;
    if (!out.empty()) out += ", ";
    const size_t run = j - i;
    if (run > 1) out += std::to_string(run) + ":";
    out += std::to_string(codims[i]);
    i = j;
  }
  return out;
}

}  // namespace detsurf
