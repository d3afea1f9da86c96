// Command-line front end: parse matrices, run detectors / modulus / thermal
// analyses, emit structured reports, and drive the property suites.
//
// One source of truth: every command first builds a JSON document; the human
// format is rendered from that document, never computed separately.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sepcert/io.hpp"
#include "sepcert/modulus.hpp"
#include "sepcert/random.hpp"
#include "sepcert/simplex.hpp"
#include "sepcert/table.hpp"
#include "sepcert/thermal.hpp"
#include "sepcert/verify.hpp"

using nlohmann::json;
using namespace sepcert;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
  std::string input;
  std::vector<int> dims;  // override / for table
  std::uint64_t seed = 42;
  int samples = 0;
  double tol = tol::bisection;
  double beta_max = 2.0;
  double min_temperature = 0.0;  // convenience: beta_max = 1/T, T = inf <-> beta = 0
  std::string format = "human";
  std::string output;
  std::string suite = "all";
  std::string counterexample = "counterexample.json";
};

std::string fmt12(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

// ---------------------------------------------------------------- loading ---

DensityMatrix load_state(const Options& opt) {
  auto [m, dims] = load_matrix_file(opt.input);
  if (!opt.dims.empty()) {
    CompositeDims override_dims(opt.dims);
    if (override_dims.total() != dims.total())
      throw ParseError("--dims product " + std::to_string(override_dims.total()) +
                       " does not match matrix size " + std::to_string(dims.total()));
    dims = override_dims;
  }
  return DensityMatrix::validate(m, dims);
}

Hamiltonian load_hamiltonian(const Options& opt) {
  auto [m, dims] = load_matrix_file(opt.input);
  if (!opt.dims.empty()) {
    CompositeDims override_dims(opt.dims);
    if (override_dims.total() != dims.total())
      throw ParseError("--dims product " + std::to_string(override_dims.total()) +
                       " does not match matrix size " + std::to_string(dims.total()));
    dims = override_dims;
  }
  return Hamiltonian(m, dims);
}

// --------------------------------------------------------------- commands ---

json run_spec(const Options& opt) {
  DensityMatrix rho = load_state(opt);
  auto lam = spectrum(rho);
  auto bary = to_barycentric(lam);
  auto rep = gap_representation(rho);
  json j;
  j["dims"] = rho.dims().factors();
  j["spectrum"] = lam.values();
  j["barycentric"] = bary.values();
  j["gap"] = {{"mu", rep.mu}, {"tail_weight", rep.tail_weight}};
  j["min_eigenvalue"] = min_eigenvalue(rho);
  j["purity"] = purity(rho);
  return j;
}

json run_detect(const Options& opt) {
  DensityMatrix rho = load_state(opt);
  json j;
  j["dims"] = rho.dims().factors();
  json reports = json::array();
  bool any = false;
  for (const auto& r : run_all_detectors(rho)) {
    if (r.verdict == Verdict::certified_separable) any = true;
    reports.push_back(to_json(r));
  }
  j["detectors"] = std::move(reports);
  j["summary_verdict"] = any ? "certified-separable" : "inconclusive";
  // PPT evidence: decisive for (2,2)/(2,3), otherwise a necessary condition.
  if (rho.dims().count() == 2) {
    auto ppt = is_ppt(rho);
    j["ppt"] = {{"min_pt_eigenvalue", ppt.min_pt_eigenvalue},
                {"is_ppt", ppt.is_ppt},
                {"decisive", ppt_decisive(rho.dims())}};
    if (ppt_decisive(rho.dims()))
      j["summary_verdict"] = ppt.is_ppt ? "certified-separable" : "entangled";
  } else {
    json cuts = json::array();
    for (int k = 1; k < rho.dims().count(); ++k) {
      auto ppt = is_ppt_bipartition(rho, k);
      cuts.push_back({{"cut_after_factor", k},
                      {"min_pt_eigenvalue", ppt.min_pt_eigenvalue},
                      {"is_ppt", ppt.is_ppt}});
    }
    j["ppt_bipartitions"] = std::move(cuts);
  }
  return j;
}

json run_modulus(const Options& opt) {
  DensityMatrix rho = load_state(opt);
  auto est = modulus_ppt(rho, opt.tol);
  json j;
  j["dims"] = rho.dims().factors();
  j["modulus"] = to_json(est);
  const LBound L = l_constant(rho.dims());
  j["universal_floor"] = L.value;
  if (!ppt_decisive(rho.dims()))
    j["note"] = "PPT is only necessary for these dims; the bisection value is an upper bound";
  return j;
}

json run_thermal(const Options& opt) {
  Hamiltonian h = load_hamiltonian(opt);
  const double beta_max =
      opt.min_temperature > 0.0 ? 1.0 / opt.min_temperature : opt.beta_max;
  ThermalWindow w;
  w.beta_o = beta_o_bound(h, &w.beta_o_infinite);
  Rng rng(opt.seed);
  auto eta = eta_extrema(h, 32, rng);
  w.eta_minus = eta.eta_minus;
  w.eta_plus = eta.eta_plus;
  w = toth_bounds(h, w, opt.tol);
  bool reentrant = false;
  if (ppt_decisive(h.dims()))
    w.exact_beta_c_plus = exact_beta_c_scan(h, beta_max, opt.tol, 200, &reentrant);
  json j;
  j["dims"] = h.dims().factors();
  j["window"] = to_json(w);
  j["beta_max"] = beta_max;
  j["optimizer"] = {{"restarts", eta.restarts},
                    {"converged_to_min", eta.converged_to_min},
                    {"converged_to_max", eta.converged_to_max}};
  if (ppt_decisive(h.dims())) j["ppt_reentrant_on_grid"] = reentrant;
  return j;
}

json run_table(const Options& opt) {
  if (opt.dims.empty()) throw ParseError("table requires --dims");
  CompositeDims dims(opt.dims);
  json j;
  j["dims"] = dims.factors();
  json entries = json::array();
  for (const auto& e : critical_table(dims)) entries.push_back(to_json(e));
  j["entries"] = std::move(entries);
  return j;
}

json run_verify(const Options& opt) {
  auto results = run_suite(opt.suite, opt.samples, opt.seed, opt.counterexample);
  json j;
  j["suite"] = opt.suite;
  j["seed"] = opt.seed;
  j["samples"] = opt.samples;
  json checks = json::array();
  int failures = 0;
  for (const auto& r : results) {
    json c = {{"name", r.name}, {"passed", r.passed}};
    if (!r.passed) {
      c["detail"] = r.detail;
      ++failures;
    }
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["failures"] = failures;
  if (failures > 0) j["counterexample_path"] = opt.counterexample;
  return j;
}

// -------------------------------------------------------- human rendering ---

void render_human(const std::string& command, const json& j, std::ostream& out) {
  if (command == "spec") {
    out << "dims:";
    for (int f : j["dims"]) out << " " << f;
    out << "\nspectrum:";
    for (double v : j["spectrum"]) out << " " << fmt12(v);
    out << "\nbarycentric:";
    for (double v : j["barycentric"]) out << " " << fmt12(v);
    out << "\ngap mu:";
    for (double v : j["gap"]["mu"]) out << " " << fmt12(v);
    out << "\ngap tail weight: " << fmt12(j["gap"]["tail_weight"].get<double>());
    out << "\nmin eigenvalue: " << fmt12(j["min_eigenvalue"].get<double>());
    out << "\npurity: " << fmt12(j["purity"].get<double>()) << "\n";
  } else if (command == "detect") {
    for (const auto& r : j["detectors"]) {
      out << r["detector"].get<std::string>() << ": value "
          << fmt12(r["value"].get<double>()) << " vs threshold "
          << fmt12(r["threshold"].get<double>()) << " ("
          << r["threshold_provenance"].get<std::string>() << ") -> "
          << r["verdict"].get<std::string>();
      if (r.contains("conditional")) out << " [conditional]";
      if (r.contains("bracket"))
        out << "  bracket [" << fmt12(r["bracket"][0].get<double>()) << ", "
            << fmt12(r["bracket"][1].get<double>()) << "]";
      out << "\n";
    }
    if (j.contains("ppt")) {
      out << "ppt: min PT eigenvalue " << fmt12(j["ppt"]["min_pt_eigenvalue"].get<double>())
          << " -> " << (j["ppt"]["is_ppt"].get<bool>() ? "PPT" : "NPT")
          << (j["ppt"]["decisive"].get<bool>() ? " (decisive)" : " (necessary only)") << "\n";
    }
    if (j.contains("ppt_bipartitions")) {
      for (const auto& c : j["ppt_bipartitions"])
        out << "ppt cut 1.." << c["cut_after_factor"].get<int>() << ": min PT eigenvalue "
            << fmt12(c["min_pt_eigenvalue"].get<double>()) << " -> "
            << (c["is_ppt"].get<bool>() ? "PPT" : "NPT") << "\n";
    }
    out << "summary: " << j["summary_verdict"].get<std::string>() << "\n";
  } else if (command == "modulus") {
    const auto& m = j["modulus"];
    out << "modulus: [" << fmt12(m["lower"].get<double>()) << ", "
        << fmt12(m["upper"].get<double>()) << "]"
        << (m["exact"].get<bool>() ? " (exact)" : " (bound)") << " via "
        << m["method"].get<std::string>() << "\n"
        << "random robustness: " << fmt12(m["random_robustness"].get<double>()) << "\n"
        << "universal floor L: " << fmt12(j["universal_floor"].get<double>()) << "\n";
    if (j.contains("note")) out << "note: " << j["note"].get<std::string>() << "\n";
  } else if (command == "thermal") {
    const auto& w = j["window"];
    if (w["beta_o"].is_string())
      out << "beta_o: infinity (scalar Hamiltonian)\n";
    else
      out << "beta_o: " << fmt12(w["beta_o"].get<double>()) << "\n";
    out << "eta_-: " << fmt12(w["eta_minus"].get<double>())
        << "  eta_+: " << fmt12(w["eta_plus"].get<double>()) << "\n";
    if (w.contains("beta_minus_toth"))
      out << "beta_- (Toth): " << fmt12(w["beta_minus_toth"].get<double>()) << "\n";
    if (w.contains("beta_plus_toth"))
      out << "beta_+ (Toth): " << fmt12(w["beta_plus_toth"].get<double>()) << "\n";
    if (w.contains("exact_beta_c_plus"))
      out << "beta_c^+ (exact PPT scan): " << fmt12(w["exact_beta_c_plus"].get<double>())
          << "\n";
    else if (j.contains("ppt_reentrant_on_grid"))
      out << "beta_c^+ (exact PPT scan): none up to beta_max "
          << fmt12(j["beta_max"].get<double>()) << "\n";
    if (j.contains("ppt_reentrant_on_grid") && j["ppt_reentrant_on_grid"].get<bool>())
      out << "warning: PPT re-entrance observed on the scan grid\n";
    out << "optimizer restarts converged to min/max: "
        << j["optimizer"]["converged_to_min"].get<int>() << "/"
        << j["optimizer"]["converged_to_max"].get<int>() << " of "
        << j["optimizer"]["restarts"].get<int>() << "\n";
  } else if (command == "table") {
    for (const auto& e : j["entries"]) {
      out << e["name"].get<std::string>() << ": ";
      if (e["exact"].get<bool>()) {
        if (e.contains("lower_fraction"))
          out << e["lower_fraction"].get<std::string>() << " = ";
        out << fmt12(e["lower"].get<double>());
      } else {
        out << "[";
        if (e.contains("lower_fraction"))
          out << e["lower_fraction"].get<std::string>() << " = ";
        out << fmt12(e["lower"].get<double>()) << ", ";
        if (e.contains("upper_fraction"))
          out << e["upper_fraction"].get<std::string>() << " = ";
        out << fmt12(e["upper"].get<double>()) << "]";
      }
      out << "\n";
    }
  } else if (command == "verify") {
    for (const auto& c : j["checks"]) {
      out << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "  "
          << c["name"].get<std::string>();
      if (c.contains("detail")) out << "  (" << c["detail"].get<std::string>() << ")";
      out << "\n";
    }
    out << j["checks"].size() << " checks, " << j["failures"].get<int>() << " failures\n";
  }
}

int emit(const std::string& command, const Options& opt, json payload) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["config"] = {{"seed", opt.seed}, {"tol", opt.tol}, {"format", opt.format}};
  doc["result"] = std::move(payload);

  std::ostringstream body;
  if (opt.format == "structured")
    body << doc.dump(2) << "\n";
  else
    render_human(command, doc["result"], body);

  if (opt.output.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(opt.output);
    if (!f) {
      std::cerr << "error: cannot write " << opt.output << "\n";
      return 2;
    }
    f << body.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Spectral separability certification toolkit"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* c, bool with_input) {
    if (with_input) c->add_option("input", opt.input, "matrix file")->required();
    c->add_option("--dims", opt.dims, "factor dimensions (overrides the file)")->delimiter(',');
    c->add_option("--seed", opt.seed, "RNG seed");
    c->add_option("--tol", opt.tol, "numeric tolerance");
    c->add_option("--format", opt.format, "human|structured")
        ->check(CLI::IsMember({"human", "structured"}));
    c->add_option("--output", opt.output, "write the report to this path");
  };

  add_common(app.add_subcommand("spec", "spectrum, barycentric and gap data of a state"), true);
  add_common(app.add_subcommand("detect", "run all separability detectors on a state"), true);
  add_common(app.add_subcommand("modulus", "separability modulus by PPT bisection"), true);
  auto* thermal =
      app.add_subcommand("thermal", "separable temperature window of a Hamiltonian");
  add_common(thermal, true);
  thermal->add_option("--beta-max", opt.beta_max, "scan limit for the exact PPT transition");
  thermal->add_option("--min-temperature", opt.min_temperature,
                      "scan down to this temperature (beta = 1/T; T = inf is beta = 0)");
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", opt.suite,
                     "simplex|gap|ppt-appendixA|modulus|detectors|thermal|all");
  verify->add_option("--samples", opt.samples,
                     "Monte Carlo size, percent of the per-check defaults");
  verify->add_option("--counterexample", opt.counterexample,
                     "where to dump a counterexample state");
  add_common(verify, false);
  add_common(app.add_subcommand("table", "critical-value table for given dims"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    json payload;
    if (command == "spec")
      payload = run_spec(opt);
    else if (command == "detect")
      payload = run_detect(opt);
    else if (command == "modulus")
      payload = run_modulus(opt);
    else if (command == "thermal")
      payload = run_thermal(opt);
    else if (command == "table")
      payload = run_table(opt);
    else
      payload = run_verify(opt);
    const int rc = emit(command, opt, payload);
    if (rc != 0) return rc;
    if (command == "verify" && payload["failures"].get<int>() > 0) return 1;
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
