#include "detsurf/detsurf.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "cohomology.hpp"
#include "ff_oracle.hpp"
#include "nl_lattice.hpp"
#include "pairs.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
detsurf_status wrap(Fn&& fn) {
  try {
    fn();
    return DETSURF_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DETSURF_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return DETSURF_ERR_DOMAIN;
  } catch (const std::overflow_error& e) {
    g_last_error = e.what();
    return DETSURF_ERR_OVERFLOW;
  } catch (const std::logic_error& e) {
    g_last_error = e.what();
    return DETSURF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DETSURF_ERR_FAILED;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

detsurf::AdmissiblePair make_pair(const int64_t* a, const int64_t* b, int64_t t) {
  require(a != nullptr && b != nullptr, "null pair buffer");
  require(t >= 2, "pair length must be >= 2");
  detsurf::AdmissiblePair p;
  p.a.assign(a, a + t);
  p.b.assign(b, b + t);
  detsurf::validate(p);
  return p;
}

void fill_report(const detsurf::ComponentReport& rep, detsurf_report* out) {
  out->d = rep.d;
  out->t = rep.t;
  out->curve_degree = rep.curve.degree;
  out->curve_genus = rep.curve.genus;
  out->h1_od = rep.curve.h1_od;
  out->kappa = rep.curve.kappa;
  out->h1_normal = rep.curve.h1_normal;
  out->hilbert_dim = rep.hilbert_dim;
  out->h0_oxc = rep.h0_oxc;
  out->dim = rep.dim;
  out->codim = rep.codim;
  switch (rep.classification) {
    case detsurf::Classification::WholeSpace: out->classification = DETSURF_CLASS_WHOLE_SPACE; break;
    case detsurf::Classification::General: out->classification = DETSURF_CLASS_GENERAL; break;
    case detsurf::Classification::Special: out->classification = DETSURF_CLASS_SPECIAL; break;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct detsurf_classes {
  std::vector<detsurf::PairClass> classes;
};

struct detsurf_sweep {
  std::vector<detsurf::SweepCell> cells;
};

extern "C" {

const char* detsurf_version(void) { return "1.0.0"; }

const char* detsurf_last_error(void) { return g_last_error.c_str(); }

detsurf_status detsurf_binom(int64_t n, int64_t k, int64_t* out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    *out = detsurf::binom(n, k);
  });
}

detsurf_status detsurf_h0_twist(int64_t m, int64_t* out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    *out = detsurf::h0_twist(m);
  });
}

detsurf_status detsurf_pair_is_reduced(const int64_t* a, const int64_t* b, int64_t t, int32_t* out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    *out = detsurf::is_reduced(make_pair(a, b, t)) ? 1 : 0;
  });
}

detsurf_status detsurf_dim_det(const int64_t* a, const int64_t* b, int64_t t, int64_t* out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    *out = detsurf::dim_det(make_pair(a, b, t));
  });
}

detsurf_status detsurf_classes_create(int64_t d, uint32_t flags, detsurf_classes** out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    detsurf::EnumerateOptions opts;
    opts.include_unreduced = (flags & DETSURF_ENUM_RAW_PAIRS) != 0;
    opts.transpose_dedup = (flags & DETSURF_ENUM_NO_TRANSPOSE_DEDUP) == 0;
    auto handle = std::make_unique<detsurf_classes>();
    handle->classes = detsurf::enumerate_classes(d, opts);
    *out = handle.release();
  });
}

void detsurf_classes_free(detsurf_classes* cls) { delete cls; }

int64_t detsurf_classes_count(const detsurf_classes* cls) {
  return cls ? static_cast<int64_t>(cls->classes.size()) : -1;
}

int64_t detsurf_class_length(const detsurf_classes* cls, int64_t index) {
  if (!cls || index < 0 || index >= detsurf_classes_count(cls)) return -1;
  return cls->classes[static_cast<size_t>(index)].representative.length();
}

int64_t detsurf_class_member_count(const detsurf_classes* cls, int64_t index) {
  if (!cls || index < 0 || index >= detsurf_classes_count(cls)) return -1;
  return static_cast<int64_t>(cls->classes[static_cast<size_t>(index)].members.size());
}

detsurf_status detsurf_class_member(const detsurf_classes* cls, int64_t index, int64_t member,
                                    int64_t* a, int64_t* b, int64_t capacity) {
  return wrap([&] {
    require(cls != nullptr, "null handle");
    require(index >= 0 && index < detsurf_classes_count(cls), "class index out of range");
    const auto& c = cls->classes[static_cast<size_t>(index)];
    require(member >= 0 && member < static_cast<int64_t>(c.members.size()), "member index out of range");
    const auto& p = c.members[static_cast<size_t>(member)];
    require(a != nullptr && b != nullptr, "null pair buffer");
    require(capacity >= p.length(), "buffer too small");
    std::copy(p.a.begin(), p.a.end(), a);
    std::copy(p.b.begin(), p.b.end(), b);
  });
}

detsurf_status detsurf_class_report(const detsurf_classes* cls, int64_t index, detsurf_report* out) {
  return wrap([&] {
    require(cls != nullptr, "null handle");
    require(out != nullptr, "null output");
    require(index >= 0 && index < detsurf_classes_count(cls), "class index out of range");
    fill_report(detsurf::component_report(cls->classes[static_cast<size_t>(index)].representative), out);
  });
}

detsurf_status detsurf_pair_report(const int64_t* a, const int64_t* b, int64_t t, detsurf_report* out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    fill_report(detsurf::component_report(make_pair(a, b, t)), out);
  });
}

detsurf_status detsurf_table_row(int64_t d, int64_t* codims, int64_t* count) {
  return wrap([&] {
    require(count != nullptr, "null output");
    const detsurf::TableRow row = detsurf::component_table(d);
    if (codims == nullptr) {  // size query
      *count = row.count;
      return;
    }
    require(*count >= row.count, "buffer too small");
    std::copy(row.codims.begin(), row.codims.end(), codims);
    *count = row.count;
  });
}

detsurf_status detsurf_table_row_text(int64_t d, char** out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    const detsurf::TableRow row = detsurf::component_table(d);
    const std::string text = std::to_string(row.d) + "  " + detsurf::format_codim_multiset(row.codims) +
                             "  " + std::to_string(row.count);
    *out = dup_string(text);
  });
}

void detsurf_string_free(char* s) { delete[] s; }

detsurf_status detsurf_quartic_degrees(detsurf_quartic out[5]) {
  return wrap([&] {
    require(out != nullptr, "null output");
    const auto records = detsurf::quartic_divisor_degrees();
    for (size_t i = 0; i < records.size(); ++i) {
      const auto& rec = records[i];
      detsurf_quartic& q = out[i];
      q.t = rec.t;
      std::fill(q.a, q.a + 4, 0);
      std::fill(q.b, q.b + 4, 0);
      std::copy(rec.pair.a.begin(), rec.pair.a.end(), q.a);
      std::copy(rec.pair.b.begin(), rec.pair.b.end(), q.b);
      q.curve_degree = rec.curve_degree;
      q.curve_genus = rec.curve_genus;
      q.disc = rec.disc;
      q.coset = rec.coset;
      q.degree = rec.degree;
    }
  });
}

detsurf_status detsurf_delta_of(int64_t h, int64_t d, int64_t* out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    *out = detsurf::delta_of(h, d);
  });
}

int64_t detsurf_canonical_coset(int64_t d) { return detsurf::canonical_coset(d); }

detsurf_status detsurf_mu(int64_t h, int64_t d, int64_t disc, int64_t coset, int64_t* out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    *out = detsurf::mu(h, d, detsurf::LatticeInvariants{disc, coset});
  });
}

detsurf_status detsurf_nl_number(int64_t h, int64_t d, int64_t* out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    *out = detsurf::nl_number(h, d);
  });
}

detsurf_status detsurf_degree_p(int64_t disc, int64_t coset, int64_t witness_h, int64_t witness_d, int64_t* out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    *out = detsurf::degree_P(detsurf::LatticeInvariants{disc, coset}, witness_h, witness_d);
  });
}

detsurf_status detsurf_sweep_run(int64_t d_max, detsurf_sweep** out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    auto handle = std::make_unique<detsurf_sweep>();
    handle->cells = detsurf::verify_conjecture(d_max);
    *out = handle.release();
  });
}

void detsurf_sweep_free(detsurf_sweep* sweep) { delete sweep; }

int64_t detsurf_sweep_count(const detsurf_sweep* sweep) {
  return sweep ? static_cast<int64_t>(sweep->cells.size()) : -1;
}

detsurf_status detsurf_sweep_cell_get(const detsurf_sweep* sweep, int64_t index, detsurf_sweep_cell* out) {
  return wrap([&] {
    require(sweep != nullptr, "null handle");
    require(out != nullptr, "null output");
    require(index >= 0 && index < detsurf_sweep_count(sweep), "cell index out of range");
    const auto& cell = sweep->cells[static_cast<size_t>(index)];
    out->d = cell.d;
    out->t = cell.t;
    out->min_dim = cell.min_dim;
    out->max_dim = cell.max_dim;
    out->num_pairs = cell.num_pairs;
    out->num_classes = cell.num_classes;
    out->violations = cell.violations;
    out->closed_forms_ok = cell.closed_forms_ok ? 1 : 0;
  });
}

int32_t detsurf_sweep_all_pass(const detsurf_sweep* sweep) {
  if (!sweep) return 0;
  for (const auto& cell : sweep->cells)
    if (cell.violations != 0 || !cell.closed_forms_ok) return 0;
  return 1;
}

detsurf_status detsurf_sweep_counterexample(const detsurf_sweep* sweep, int64_t index,
                                            int64_t* a, int64_t* b, int64_t capacity) {
  return wrap([&] {
    require(sweep != nullptr, "null handle");
    require(index >= 0 && index < detsurf_sweep_count(sweep), "cell index out of range");
    const auto& cell = sweep->cells[static_cast<size_t>(index)];
    if (!cell.counterexample) throw std::runtime_error("no counterexample in this cell");
    const auto& p = *cell.counterexample;
    require(a != nullptr && b != nullptr, "null pair buffer");
    require(capacity >= p.length(), "buffer too small");
    std::copy(p.a.begin(), p.a.end(), a);
    std::copy(p.b.begin(), p.b.end(), b);
  });
}

detsurf_status detsurf_jacobian_rank(const int64_t* a, const int64_t* b, int64_t t,
                                     int64_t modulus, uint64_t seed, int64_t* rank) {
  return wrap([&] {
    require(rank != nullptr, "null output");
    require(modulus > 0, "modulus must be positive");
    *rank = detsurf::jacobian_rank(make_pair(a, b, t), static_cast<uint64_t>(modulus), seed);
  });
}

detsurf_status detsurf_fermat_check(const int64_t* a, const int64_t* b, int64_t t,
                                    int64_t modulus, int32_t* ok) {
  return wrap([&] {
    require(ok != nullptr, "null output");
    require(modulus > 0, "modulus must be positive");
    *ok = detsurf::fermat_check(make_pair(a, b, t), static_cast<uint64_t>(modulus)) ? 1 : 0;
  });
}

detsurf_status detsurf_default_fermat_modulus(int64_t d, int64_t* modulus) {
  return wrap([&] {
    require(modulus != nullptr, "null output");
    *modulus = static_cast<int64_t>(detsurf::default_fermat_modulus(d));
  });
}

}  // extern "C"
