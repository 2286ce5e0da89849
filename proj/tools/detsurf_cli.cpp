// Command-line front end for the detsurf shared library.  Everything here is
// argument handling and formatting; the mathematics lives behind the C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <detsurf/detsurf.h>

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

constexpr int64_t kDefaultOracleModulus = 2147483647;  // 2^31 - 1

struct Output {
  std::string format = "text";  // text | json | csv
  std::string out_file;

  std::ofstream file;
  std::ostream* stream = &std::cout;

  bool open() {
    if (!out_file.empty()) {
      file.open(out_file);
      if (!file) {
        std::cerr << "error: cannot open output file '" << out_file << "'\n";
        return false;
      }
      stream = &file;
    }
    return true;
  }
  std::ostream& os() { return *stream; }
};

void add_output_options(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", out.out_file, "Write data to FILE instead of stdout");
}

[[noreturn]] void fail_api(detsurf_status status) {
  std::cerr << "error: " << detsurf_last_error() << "\n";
  std::exit(status == DETSURF_ERR_INVALID_ARGUMENT || status == DETSURF_ERR_DOMAIN ? kExitUsage
                                                                                   : kExitVerifyFailed);
}

void check(detsurf_status status) {
  if (status != DETSURF_OK) fail_api(status);
}

std::string seq_to_text(const std::vector<int64_t>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string seq_to_csv(const std::vector<int64_t>& v) {
  std::string s = "\"";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s + "\"";
}

const char* classification_name(int32_t c) {
  switch (c) {
    case DETSURF_CLASS_WHOLE_SPACE: return "WholeSpace";
    case DETSURF_CLASS_GENERAL: return "General";
    default: return "Special";
  }
}

int64_t env_default_modulus(int64_t fallback) {
  if (const char* env = std::getenv("DETSURF_MODULUS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 2) return static_cast<int64_t>(v);
    std::cerr << "warning: ignoring malformed DETSURF_MODULUS='" << env << "'\n";
  }
  return fallback;
}

struct ClassesHandle {
  detsurf_classes* h = nullptr;
  ~ClassesHandle() { detsurf_classes_free(h); }
};

struct SweepHandle {
  detsurf_sweep* h = nullptr;
  ~SweepHandle() { detsurf_sweep_free(h); }
};

struct MemberData {
  std::vector<int64_t> a, b;
  bool reduced = true;
};

std::vector<MemberData> class_members(const detsurf_classes* cls, int64_t index) {
  const int64_t t = detsurf_class_length(cls, index);
  const int64_t members = detsurf_class_member_count(cls, index);
  std::vector<MemberData> out;
  for (int64_t m = 0; m < members; ++m) {
    MemberData data;
    data.a.resize(static_cast<size_t>(t));
    data.b.resize(static_cast<size_t>(t));
    check(detsurf_class_member(cls, index, m, data.a.data(), data.b.data(), t));
    int32_t reduced = 0;
    check(detsurf_pair_is_reduced(data.a.data(), data.b.data(), t, &reduced));
    data.reduced = reduced != 0;
    out.push_back(std::move(data));
  }
  return out;
}

// ---- pairs ----

int run_pairs(int64_t d, bool raw, bool no_dedup, Output& out) {
  uint32_t flags = 0;
  if (raw) flags |= DETSURF_ENUM_RAW_PAIRS;
  if (no_dedup) flags |= DETSURF_ENUM_NO_TRANSPOSE_DEDUP;
  ClassesHandle cls;
  check(detsurf_classes_create(d, flags, &cls.h));
  const int64_t count = detsurf_classes_count(cls.h);

  if (out.format == "json") {
    ordered_json doc;
    doc["command"] = "pairs";
    doc["d"] = d;
    doc["raw_pairs"] = raw;
    doc["transpose_dedup"] = !no_dedup;
    doc["classes"] = ordered_json::array();
    for (int64_t i = 0; i < count; ++i) {
      const auto members = class_members(cls.h, i);
      ordered_json jc;
      jc["t"] = detsurf_class_length(cls.h, i);
      jc["a"] = members[0].a;
      jc["b"] = members[0].b;
      jc["reduced"] = members[0].reduced;
      jc["members"] = ordered_json::array();
      for (const auto& m : members) {
        ordered_json jm;
        jm["a"] = m.a;
        jm["b"] = m.b;
        jm["reduced"] = m.reduced;
        jc["members"].push_back(std::move(jm));
      }
      doc["classes"].push_back(std::move(jc));
    }
    out.os() << doc.dump(2) << "\n";
  } else if (out.format == "csv") {
    out.os() << "d,t,a,b,members,reduced\n";
    for (int64_t i = 0; i < count; ++i) {
      const auto members = class_members(cls.h, i);
      out.os() << d << "," << detsurf_class_length(cls.h, i) << "," << seq_to_csv(members[0].a) << ","
               << seq_to_csv(members[0].b) << "," << members.size() << ","
               << (members[0].reduced ? 1 : 0) << "\n";
    }
  } else {
    for (int64_t i = 0; i < count; ++i) {
      const auto members = class_members(cls.h, i);
      out.os() << "t=" << detsurf_class_length(cls.h, i) << "  a=" << seq_to_text(members[0].a)
               << " b=" << seq_to_text(members[0].b);
      if (!members[0].reduced) out.os() << " [unreduced]";
      if (members.size() == 2) {
        out.os() << "   dual a=" << seq_to_text(members[1].a) << " b=" << seq_to_text(members[1].b);
        if (!members[1].reduced) out.os() << " [unreduced]";
      } else if (!no_dedup) {
        out.os() << "   self-dual";
      }
      out.os() << "\n";
    }
  }
  return kExitOk;
}

// ---- report ----

int run_report(int64_t d, std::optional<int64_t> t_filter, Output& out) {
  ClassesHandle cls;
  check(detsurf_classes_create(d, 0, &cls.h));
  const int64_t count = detsurf_classes_count(cls.h);

  ordered_json jclasses = ordered_json::array();
  std::ostringstream text, csv;
  csv << "d,t,a,b,d_C,g_C,h1_Od,kappa,h1_normal,hilbert_dim,h0_OXC,dim_det,codim,classification\n";
  for (int64_t i = 0; i < count; ++i) {
    if (t_filter && detsurf_class_length(cls.h, i) != *t_filter) continue;
    const auto members = class_members(cls.h, i);
    detsurf_report rep;
    check(detsurf_class_report(cls.h, i, &rep));
    if (out.format == "json") {
      ordered_json jr;
      jr["a"] = members[0].a;
      jr["b"] = members[0].b;
      jr["d"] = rep.d;
      jr["t"] = rep.t;
      jr["d_C"] = rep.curve_degree;
      jr["g_C"] = rep.curve_genus;
      jr["h1_Od"] = rep.h1_od;
      jr["kappa"] = rep.kappa;
      jr["h1_normal"] = rep.h1_normal;
      jr["hilbert_dim"] = rep.hilbert_dim;
      jr["h0_OXC"] = rep.h0_oxc;
      jr["dim_det"] = rep.dim;
      jr["codim"] = rep.codim;
      jr["classification"] = classification_name(rep.classification);
      jclasses.push_back(std::move(jr));
    } else if (out.format == "csv") {
      csv << rep.d << "," << rep.t << "," << seq_to_csv(members[0].a) << "," << seq_to_csv(members[0].b)
          << "," << rep.curve_degree << "," << rep.curve_genus << "," << rep.h1_od << "," << rep.kappa
          << "," << rep.h1_normal << "," << rep.hilbert_dim << "," << rep.h0_oxc << "," << rep.dim << ","
          << rep.codim << "," << classification_name(rep.classification) << "\n";
    } else {
      text << "t=" << rep.t << " a=" << seq_to_text(members[0].a) << " b=" << seq_to_text(members[0].b)
           << "  d_C=" << rep.curve_degree << " g_C=" << rep.curve_genus << " h1_Od=" << rep.h1_od
           << " kappa=" << rep.kappa << " h1_N=" << rep.h1_normal << " hilb=" << rep.hilbert_dim
           << " h0_OXC=" << rep.h0_oxc << " dim=" << rep.dim << " codim=" << rep.codim << " "
           << classification_name(rep.classification) << "\n";
    }
  }
  if (out.format == "json") {
    ordered_json doc;
    doc["command"] = "report";
    doc["d"] = d;
    doc["classes"] = std::move(jclasses);
    out.os() << doc.dump(2) << "\n";
  } else if (out.format == "csv") {
    out.os() << csv.str();
  } else {
    out.os() << text.str();
  }
  return kExitOk;
}

// ---- table ----

int run_table(int64_t d, Output& out) {
  int64_t count = 0;
  check(detsurf_table_row(d, nullptr, &count));
  std::vector<int64_t> codims(static_cast<size_t>(count));
  check(detsurf_table_row(d, codims.data(), &count));

  if (out.format == "json") {
    char* text = nullptr;
    check(detsurf_table_row_text(d, &text));
    std::string row_text(text);
    detsurf_string_free(text);
    const auto sep = row_text.find("  ");
    const auto sep2 = row_text.rfind("  ");
    ordered_json doc;
    doc["command"] = "table";
    doc["d"] = d;
    doc["codims"] = codims;
    doc["count"] = count;
    doc["notation"] = row_text.substr(sep + 2, sep2 - sep - 2);
    out.os() << doc.dump(2) << "\n";
  } else if (out.format == "csv") {
    out.os() << "d,codim\n";
    for (int64_t c : codims) out.os() << d << "," << c << "\n";
  } else {
    char* text = nullptr;
    check(detsurf_table_row_text(d, &text));
    out.os() << text << "\n";
    detsurf_string_free(text);
  }
  return kExitOk;
}

// ---- quartics ----

int run_quartics(Output& out) {
  detsurf_quartic recs[5];
  check(detsurf_quartic_degrees(recs));

  if (out.format == "json") {
    ordered_json doc;
    doc["command"] = "quartics";
    doc["divisors"] = ordered_json::array();
    for (int i = 0; i < 5; ++i) {
      const auto& r = recs[i];
      ordered_json jr;
      jr["F"] = i + 1;
      jr["a"] = std::vector<int64_t>(r.a, r.a + r.t);
      jr["b"] = std::vector<int64_t>(r.b, r.b + r.t);
      jr["d_C"] = r.curve_degree;
      jr["g_C"] = r.curve_genus;
      jr["delta"] = r.disc;
      jr["coset"] = r.coset;
      jr["degree"] = r.degree;
      doc["divisors"].push_back(std::move(jr));
    }
    out.os() << doc.dump(2) << "\n";
  } else if (out.format == "csv") {
    out.os() << "F,a,b,d_C,g_C,delta,coset,degree\n";
    for (int i = 0; i < 5; ++i) {
      const auto& r = recs[i];
      out.os() << (i + 1) << "," << seq_to_csv({r.a, r.a + r.t}) << "," << seq_to_csv({r.b, r.b + r.t})
               << "," << r.curve_degree << "," << r.curve_genus << "," << r.disc << "," << r.coset << ","
               << r.degree << "\n";
    }
  } else {
    for (int i = 0; i < 5; ++i) {
      const auto& r = recs[i];
      out.os() << "F" << (i + 1) << "  a=" << seq_to_text({r.a, r.a + r.t})
               << " b=" << seq_to_text({r.b, r.b + r.t}) << "  d_C=" << r.curve_degree
               << " g_C=" << r.curve_genus << "  Delta=" << r.disc << " coset=" << r.coset
               << "  degree=" << r.degree << "\n";
    }
  }
  return kExitOk;
}

// ---- conjecture ----

int run_conjecture(int64_t d_max, Output& out) {
  SweepHandle sweep;
  check(detsurf_sweep_run(d_max, &sweep.h));
  const int64_t count = detsurf_sweep_count(sweep.h);
  const bool all_pass = detsurf_sweep_all_pass(sweep.h) != 0;

  if (out.format == "json") {
    ordered_json doc;
    doc["command"] = "conjecture";
    doc["d_max"] = d_max;
    doc["all_pass"] = all_pass;
    doc["cells"] = ordered_json::array();
    for (int64_t i = 0; i < count; ++i) {
      detsurf_sweep_cell cell;
      check(detsurf_sweep_cell_get(sweep.h, i, &cell));
      ordered_json jc;
      jc["d"] = cell.d;
      jc["t"] = cell.t;
      jc["classes"] = cell.num_classes;
      jc["pairs"] = cell.num_pairs;
      jc["min_dim"] = cell.min_dim;
      jc["max_dim"] = cell.max_dim;
      jc["closed_forms_ok"] = cell.closed_forms_ok != 0;
      jc["violations"] = cell.violations;
      doc["cells"].push_back(std::move(jc));
    }
    out.os() << doc.dump(2) << "\n";
  } else if (out.format == "csv") {
    out.os() << "d,t,classes,pairs,min_dim,max_dim,closed_forms_ok,violations\n";
    for (int64_t i = 0; i < count; ++i) {
      detsurf_sweep_cell cell;
      check(detsurf_sweep_cell_get(sweep.h, i, &cell));
      out.os() << cell.d << "," << cell.t << "," << cell.num_classes << "," << cell.num_pairs << ","
               << cell.min_dim << "," << cell.max_dim << "," << cell.closed_forms_ok << ","
               << cell.violations << "\n";
    }
  } else {
    for (int64_t i = 0; i < count; ++i) {
      detsurf_sweep_cell cell;
      check(detsurf_sweep_cell_get(sweep.h, i, &cell));
      out.os() << "d=" << cell.d << " t=" << cell.t << "  classes=" << cell.num_classes
               << " pairs=" << cell.num_pairs << "  dim range [" << cell.min_dim << ", " << cell.max_dim
               << "]  closed-forms " << (cell.closed_forms_ok ? "ok" : "MISMATCH")
               << "  violations=" << cell.violations;
      if (cell.violations > 0) {
        std::vector<int64_t> a(static_cast<size_t>(cell.t)), b(static_cast<size_t>(cell.t));
        if (detsurf_sweep_counterexample(sweep.h, i, a.data(), b.data(), cell.t) == DETSURF_OK)
          out.os() << "  first a=" << seq_to_text(a) << " b=" << seq_to_text(b);
      }
      out.os() << "\n";
    }
    out.os() << "conjecture: " << (all_pass ? "PASS" : "FAIL") << " (d_max=" << d_max << ", " << count
             << " cells)\n";
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

// ---- oracle ----

int run_oracle(int64_t d, int64_t modulus, uint64_t seed, Output& out) {
  if (d < 3 || d > 8) {
    std::cerr << "error: oracle supports 3 <= d <= 8 (the length-d linear class needs t <= 8)\n";
    return kExitUsage;
  }
  ClassesHandle cls;
  check(detsurf_classes_create(d, 0, &cls.h));
  const int64_t count = detsurf_classes_count(cls.h);

  int64_t matched = 0;
  ordered_json jclasses = ordered_json::array();
  std::ostringstream text, csv;
  csv << "d,t,a,b,dim_det,rank,match\n";
  for (int64_t i = 0; i < count; ++i) {
    const auto members = class_members(cls.h, i);
    detsurf_report rep;
    check(detsurf_class_report(cls.h, i, &rep));
    int64_t rank = 0;
    check(detsurf_jacobian_rank(members[0].a.data(), members[0].b.data(), rep.t, modulus, seed, &rank));
    const bool match = rank - 1 == rep.dim;
    if (match) ++matched;
    if (out.format == "json") {
      ordered_json jr;
      jr["a"] = members[0].a;
      jr["b"] = members[0].b;
      jr["dim_det"] = rep.dim;
      jr["rank"] = rank;
      jr["match"] = match;
      jclasses.push_back(std::move(jr));
    } else if (out.format == "csv") {
      csv << d << "," << rep.t << "," << seq_to_csv(members[0].a) << "," << seq_to_csv(members[0].b) << ","
          << rep.dim << "," << rank << "," << (match ? 1 : 0) << "\n";
    } else {
      text << "a=" << seq_to_text(members[0].a) << " b=" << seq_to_text(members[0].b) << "  dim=" << rep.dim
           << "  rank-1=" << (rank - 1) << "  " << (match ? "ok" : "MISMATCH") << "\n";
    }
  }
  const bool all = matched == count;
  if (out.format == "json") {
    ordered_json doc;
    doc["command"] = "oracle";
    doc["d"] = d;
    doc["modulus"] = modulus;
    doc["seed"] = seed;
    doc["all_match"] = all;
    doc["classes"] = std::move(jclasses);
    out.os() << doc.dump(2) << "\n";
  } else if (out.format == "csv") {
    out.os() << csv.str();
  } else {
    out.os() << text.str();
    out.os() << "oracle: " << matched << "/" << count << " matched (d=" << d << ", modulus=" << modulus
             << ", seed=" << seed << ")\n";
  }
  return all ? kExitOk : kExitVerifyFailed;
}

// ---- fermat ----

int run_fermat(int64_t d, int64_t modulus, Output& out) {
  ClassesHandle cls;
  check(detsurf_classes_create(d, DETSURF_ENUM_NO_TRANSPOSE_DEDUP, &cls.h));
  const int64_t count = detsurf_classes_count(cls.h);

  int64_t passed = 0;
  ordered_json jpairs = ordered_json::array();
  std::ostringstream text, csv;
  csv << "d,t,a,b,ok\n";
  for (int64_t i = 0; i < count; ++i) {
    const auto members = class_members(cls.h, i);
    const int64_t t = detsurf_class_length(cls.h, i);
    int32_t ok = 0;
    check(detsurf_fermat_check(members[0].a.data(), members[0].b.data(), t, modulus, &ok));
    if (ok) ++passed;
    if (out.format == "json") {
      ordered_json jr;
      jr["a"] = members[0].a;
      jr["b"] = members[0].b;
      jr["ok"] = ok != 0;
      jpairs.push_back(std::move(jr));
    } else if (out.format == "csv") {
      csv << d << "," << t << "," << seq_to_csv(members[0].a) << "," << seq_to_csv(members[0].b) << ","
          << (ok ? 1 : 0) << "\n";
    } else {
      text << "a=" << seq_to_text(members[0].a) << " b=" << seq_to_text(members[0].b) << "  "
           << (ok ? "ok" : "MISMATCH") << "\n";
    }
  }
  const bool all = passed == count;
  if (out.format == "json") {
    ordered_json doc;
    doc["command"] = "fermat";
    doc["d"] = d;
    doc["modulus"] = modulus;
    doc["all_ok"] = all;
    doc["pairs"] = std::move(jpairs);
    out.os() << doc.dump(2) << "\n";
  } else if (out.format == "csv") {
    out.os() << csv.str();
  } else {
    out.os() << text.str();
    out.os() << "fermat: " << passed << "/" << count << " matched (d=" << d << ", modulus=" << modulus
             << ")\n";
  }
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"detsurf: families of determinantal surfaces in P^3, their dimensions,\n"
               "Noether-Lefschetz classification, quartic divisor degrees, and a\n"
               "finite-field rank oracle"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  int64_t d = 0, t_filter = -1, d_max = 0, modulus = 0;
  uint64_t seed = 0;
  bool raw = false, no_dedup = false;
  Output out;

  auto* pairs_cmd = app.add_subcommand("pairs", "List canonical classes of degree d");
  pairs_cmd->add_option("d", d, "Degree (>= 3)")->required();
  pairs_cmd->add_flag("--raw-pairs", raw, "Keep unreduced pairs (inspection window)");
  pairs_cmd->add_flag("--no-transpose-dedup", no_dedup, "Do not merge transpose orbits");
  add_output_options(pairs_cmd, out);

  auto* report_cmd = app.add_subcommand("report", "Invariants of every class of degree d");
  report_cmd->add_option("d", d, "Degree (>= 3)")->required();
  report_cmd->add_option("--t", t_filter, "Restrict to one matrix size");
  add_output_options(report_cmd, out);

  auto* table_cmd = app.add_subcommand("table", "Codimension multiset of degree d");
  table_cmd->add_option("d", d, "Degree (>= 3)")->required();
  add_output_options(table_cmd, out);

  auto* quartics_cmd = app.add_subcommand("quartics", "Degrees of the five quartic divisors");
  add_output_options(quartics_cmd, out);

  auto* conj_cmd = app.add_subcommand("conjecture", "Check extremal dimension bounds up to d_max");
  conj_cmd->add_option("--d-max", d_max, "Largest degree to sweep (>= 3)")->required();
  add_output_options(conj_cmd, out);

  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check dim det(a,b) against the Jacobian rank");
  oracle_cmd->add_option("d", d, "Degree (3..8)")->required();
  oracle_cmd->add_option("--seed", seed, "Sampling seed (default 0)");
  oracle_cmd->add_option("--modulus", modulus, "Odd prime < 2^31 (default 2147483647)");
  add_output_options(oracle_cmd, out);

  auto* fermat_cmd = app.add_subcommand("fermat", "Verify the structured-matrix determinant identity");
  fermat_cmd->add_option("d", d, "Degree (>= 3)")->required();
  fermat_cmd->add_option("--modulus", modulus, "Odd prime = 1 mod 2d (default: least such > 10^4)");
  add_output_options(fermat_cmd, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  if (!out.open()) return kExitUsage;

  if (pairs_cmd->parsed()) return run_pairs(d, raw, no_dedup, out);
  if (report_cmd->parsed())
    return run_report(d, t_filter >= 0 ? std::optional<int64_t>(t_filter) : std::nullopt, out);
  if (table_cmd->parsed()) return run_table(d, out);
  if (quartics_cmd->parsed()) return run_quartics(out);
  if (conj_cmd->parsed()) return run_conjecture(d_max, out);
  if (oracle_cmd->parsed()) {
    if (modulus == 0) modulus = env_default_modulus(kDefaultOracleModulus);
    return run_oracle(d, modulus, seed, out);
  }
  if (fermat_cmd->parsed()) {
    if (modulus == 0) {
      modulus = env_default_modulus(0);
      if (modulus == 0) check(detsurf_default_fermat_modulus(d, &modulus));
    }
    return run_fermat(d, modulus, out);
  }
  return kExitUsage;
}
