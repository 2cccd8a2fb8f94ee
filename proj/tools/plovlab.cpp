#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "plovlab/filtration.hpp"
#include "plovlab/gallery.hpp"
#include "plovlab/growth.hpp"
#include "plovlab/model_io.hpp"
#include "plovlab/report.hpp"
#include "plovlab/verdict.hpp"

using namespace plovlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFinding = 2;

struct AnalysisFlags {
  std::string report;
  bool filtration = false;
  bool diagnostics = false;
  bool oracle = false;
};

struct Analysis {
  ordered_json json;
  bool geometric_failure = false;
};

void add_analysis_flags(CLI::App* cmd, AnalysisFlags& flags) {
  cmd->add_option("--report", flags.report, "write the JSON report to this file");
  cmd->add_flag("--filtration", flags.filtration, "compute the filtration of the canonical sequence");
  cmd->add_flag("--diagnostics", flags.diagnostics, "evaluate the vanishing diagnostics");
  cmd->add_flag("--oracle", flags.oracle, "include the sampled interpolation oracle");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  out << text;
}

void emit(const ordered_json& j, const std::string& report_path) {
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!report_path.empty()) write_file(report_path, text);
}

ModelWithAction load_pair(const std::string& model_path, const std::string& auto_path) {
  LoadedModel loaded = load_model(model_path);
  if (!auto_path.empty()) {
    RatMatrix f = load_matrix(auto_path);
    if (f.rows() != loaded.model.h()) {
      throw ParseError(auto_path + ": $.matrix: size " + std::to_string(f.rows()) + " does not match h = " +
                       std::to_string(loaded.model.h()));
    }
    return {std::move(loaded.model), AutoAction(std::move(f))};
  }
  if (!loaded.action) throw ParseError(model_path + ": --auto is required for this model type");
  return {std::move(loaded.model), std::move(*loaded.action)};
}

/// Names each class of a canonical sequence by the power of N that produced it.
ordered_json sequence_json(const IntersectionModel& model, const AutoAction& action, const QuasiNefSeq& seq) {
  const UnipotentCert& cert = action.require_cert();
  std::vector<ClassVec> powers{model.kahler()};
  for (int p = 1; p <= cert.k; ++p) powers.push_back(cert.nilpotent * powers.back());
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < seq.classes.size(); ++i) {
    ordered_json m;
    m["i"] = i + 1;
    m["origin"] = to_string(seq.origin[i]);
    for (std::size_t p = 0; p < powers.size(); ++p) {
      if (powers[p] == seq.classes[i]) {
        m["tag"] = p == 0 ? std::string("ω") : "N^" + std::to_string(p) + "ω";
        break;
      }
    }
    m["class"] = to_json(seq.classes[i]);
    out.push_back(std::move(m));
  }
  return out;
}

Analysis analyze(const IntersectionModel& model, AutoAction action, const AnalysisFlags& flags) {
  Analysis out;
  const ValidationReport validation = validate(model, action);
  if (!validation.passed()) {
    for (const auto& c : validation.checks) {
      if (!c.passed) throw PreconditionError("model check \"" + c.name + "\" failed: " + c.detail);
    }
  }
  action.cert = reduce(model, action);
  const GrowthReport growth = plov(model, action);
  const BoundReport bounds = bound_report(model, action, growth);
  out.json = analysis_json(model, bounds, growth, validation);
  out.json["certificate"] = to_json(*action.cert, !model.is_product());
  const bool geometric = model.kind() == ModelKind::geometric;
  if (geometric && !bounds.all_applicable_pass()) out.geometric_failure = true;
  if (geometric && (!growth.ladder_strict() || !growth.oracle_agreed || growth.plov_two_sided != growth.plov)) {
    out.geometric_failure = true;
  }

  if (flags.oracle) out.json["oracle"] = to_json(oracle_plov(model, action));
  if (flags.filtration) {
    ordered_json f;
    const QuasiNefSeq seq = canonical_sequence(model, action);
    f["sequence"] = sequence_json(model, action, seq);
    const VerificationReport ver = verify_quasi_nef(model, action, seq);
    f["verification"] = to_json(ver);
    if (ver.passed) {
      const FiltrationData data = filtration_spaces(model, action, seq);
      f["data"] = to_json(data);
      const bool ok = data.chain_ok && data.equal_prefix_ok && data.vanprod_ok &&
                      data.s_sequence == data.s_sequence_inverse && (model.is_product() || data.k_matches());
      if (geometric && !ok) out.geometric_failure = true;
    } else if (geometric) {
      out.geometric_failure = true;
    }
    out.json["filtration"] = std::move(f);
  }
  if (flags.diagnostics) {
    const DiagnosticsReport diag = vanishing_diagnostics(model, action);
    out.json["diagnostics"] = to_json(diag);
    if (geometric && !diag.passed()) out.geometric_failure = true;
  }
  return out;
}

int finish(const Analysis& a, const std::string& report_path) {
  emit(a.json, report_path);
  return a.geometric_failure ? kExitFinding : kExitOk;
}

long json_long(const ordered_json& v) { return v.is_null() ? -1 : v.get<long>(); }

/// Runs one gallery entry and compares against its expected values.
Analysis run_entry(const GalleryEntry& entry, const AnalysisFlags& flags) {
  auto [model, action] = entry.build();
  Analysis a = analyze(model, std::move(action), flags);
  ordered_json g;
  g["name"] = entry.name;
  g["description"] = entry.description;
  ordered_json expected = ordered_json::array();
  for (const auto& e : entry.expected) {
    long actual = -1;
    if (e.invariant == "order_m") {
      actual = json_long(a.json["certificate"]["order_m"]);
    } else {
      actual = json_long(a.json[e.invariant]);
    }
    ordered_json x;
    x["invariant"] = e.invariant;
    x["expected"] = e.value;
    x["actual"] = actual;
    x["match"] = actual == e.value;
    x["note"] = e.note;
    if (actual != e.value) a.geometric_failure = true;
    expected.push_back(std::move(x));
  }
  g["expected"] = std::move(expected);
  ordered_json with_gallery;
  with_gallery["gallery"] = std::move(g);
  for (auto& item : a.json.items()) with_gallery[item.key()] = item.value();
  a.json = std::move(with_gallery);
  return a;
}

int cmd_gallery_list() {
  ordered_json out = ordered_json::array();
  for (const auto& e : gallery()) {
    ordered_json x;
    x["name"] = e.name;
    x["description"] = e.description;
    ordered_json exp;
    for (const auto& v : e.expected) exp[v.invariant] = v.value;
    x["expected"] = std::move(exp);
    out.push_back(std::move(x));
  }
  emit(out, "");
  return kExitOk;
}

int cmd_gallery_run_all() {
  ordered_json out = ordered_json::array();
  bool failure = false;
  AnalysisFlags flags;
  flags.diagnostics = true;
  for (const auto& e : gallery()) {
    Analysis a = run_entry(e, flags);
    ordered_json x;
    x["name"] = e.name;
    x["d"] = a.json["d"];
    x["k"] = a.json["k"];
    x["plov"] = a.json["plov"];
    x["gkdim"] = a.json["gkdim"];
    bool expected_ok = true;
    for (const auto& v : a.json["gallery"]["expected"]) expected_ok = expected_ok && v["match"].get<bool>();
    x["expected_match"] = expected_ok;
    x["pass"] = !a.geometric_failure;
    failure = failure || a.geometric_failure;
    out.push_back(std::move(x));
  }
  emit(out, "");
  return failure ? kExitFinding : kExitOk;
}

int cmd_hilbert(const std::string& model_path, const std::string& auto_path, int n_max, const std::string& csv) {
  auto [model, action] = load_pair(model_path, auto_path);
  const auto seq = hilbert_sequence(model, action, n_max);
  const std::string text = hilbert_csv(seq);
  if (csv.empty()) {
    std::cout << text;
    return kExitOk;
  }
  write_file(csv, text);
  ordered_json out;
  out["n_max"] = n_max;
  out["csv"] = csv;
  const auto deg = fitted_degree(seq);
  if (deg) {
    out["fitted_degree"] = *deg;
  } else {
    out["fitted_degree"] = nullptr;
  }
  emit(out, "");
  return kExitOk;
}

int cmd_oracle(const std::string& model_path, const std::string& auto_path) {
  auto [model, action] = load_pair(model_path, auto_path);
  const OracleResult r = oracle_plov(model, action);
  ordered_json out = to_json(r);
  out["degree_closed_form"] = r.closed_form.degree();
  out["degree_interpolated"] = r.interpolated.degree();
  emit(out, "");
  return r.agreed ? kExitOk : kExitFinding;
}

int cmd_fuzz(int dim, int count, std::uint64_t seed) {
  if (dim < 1 || count < 0) throw PreconditionError("--dim must be positive and --count non-negative");
  std::mt19937_64 rng(seed);
  ordered_json out = ordered_json::array();
  bool failure = false;
  for (int i = 0; i < count; ++i) {
    const FuzzCase c = random_torus_case(dim, rng);
    auto [model, action] = build_torus(c.a);
    const BoundReport rep = bound_report(model, action);
    ordered_json x;
    x["case"] = i;
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < c.a.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (int s = 0; s < c.a.cols(); ++s) row.push_back(c.a(r, s).to_string());
      rows.push_back(std::move(row));
    }
    x["h10_matrix"] = std::move(rows);
    x["partition"] = c.partition;
    x["expected_plov"] = c.expected_plov;
    x["plov"] = rep.plov;
    x["k"] = rep.k ? *rep.k : -1;
    const bool ok = rep.plov == c.expected_plov && rep.all_applicable_pass();
    x["pass"] = ok;
    failure = failure || !ok;
    out.push_back(std::move(x));
  }
  emit(out, "");
  return failure ? kExitFinding : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();
  CLI::App app{"plovlab: polynomial log-volume growth of automorphisms on intersection models"};
  app.require_subcommand(1);

  AnalysisFlags flags;
  std::string model_path;
  std::string auto_path;

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a model file with an automorphism");
  analyze_cmd->add_option("--model", model_path, "model JSON file")->required();
  analyze_cmd->add_option("--auto", auto_path, "automorphism JSON file (optional for torus shorthand)");
  add_analysis_flags(analyze_cmd, flags);

  std::string h10;
  auto* torus_cmd = app.add_subcommand("torus", "analyze a torus given by its action on H^{1,0}");
  torus_cmd->add_option("--h10-matrix", h10, "integer matrix, inline JSON or a file")->required();
  add_analysis_flags(torus_cmd, flags);

  auto* gallery_cmd = app.add_subcommand("gallery", "reference models");
  gallery_cmd->require_subcommand(1);
  auto* list_cmd = gallery_cmd->add_subcommand("list", "list gallery entries");
  std::string entry_name;
  auto* run_cmd = gallery_cmd->add_subcommand("run", "analyze one gallery entry");
  run_cmd->add_option("name", entry_name, "entry name")->required();
  add_analysis_flags(run_cmd, flags);
  auto* run_all_cmd = gallery_cmd->add_subcommand("run-all", "analyze every gallery entry");

  int n_max = 10;
  std::string csv;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert sequence of the twisted coordinate ring (tori)");
  hilbert_cmd->add_option("--model", model_path, "model JSON file")->required();
  hilbert_cmd->add_option("--auto", auto_path, "automorphism JSON file (optional for torus shorthand)");
  hilbert_cmd->add_option("--n-max", n_max, "number of terms")->check(CLI::PositiveNumber);
  hilbert_cmd->add_option("--csv", csv, "write m,dim rows to this file");

  auto* oracle_cmd = app.add_subcommand("oracle", "closed-form growth polynomial against sampled interpolation");
  oracle_cmd->add_option("--model", model_path, "model JSON file")->required();
  oracle_cmd->add_option("--auto", auto_path, "automorphism JSON file (optional for torus shorthand)");

  int dim = 3;
  int count = 10;
  std::uint64_t seed = 1;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "random conjugated block-unipotent torus actions");
  fuzz_cmd->add_option("--dim", dim, "complex dimension")->required();
  fuzz_cmd->add_option("--count", count, "number of cases");
  fuzz_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze_cmd) {
      auto [model, action] = load_pair(model_path, auto_path);
      return finish(analyze(model, std::move(action), flags), flags.report);
    }
    if (*torus_cmd) {
      auto [model, action] = build_torus(parse_h10_argument(h10));
      return finish(analyze(model, std::move(action), flags), flags.report);
    }
    if (*list_cmd) return cmd_gallery_list();
    if (*run_cmd) return finish(run_entry(gallery_entry(entry_name), flags), flags.report);
    if (*run_all_cmd) return cmd_gallery_run_all();
    if (*hilbert_cmd) return cmd_hilbert(model_path, auto_path, n_max, csv);
    if (*oracle_cmd) return cmd_oracle(model_path, auto_path);
    if (*fuzz_cmd) return cmd_fuzz(dim, count, seed);
  } catch (const InfinitePlov& e) {
    std::cerr << "plovlab: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "plovlab: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
