// gmec: coherence and genuine-multipartite-entanglement toolbox.
//
// Subcommands: coh, gme, uio, check-theorem3, hardy max, hardy sweep.
// Single-value reports are JSON on stdout (or --out); sweeps are CSV.
// Identical seed + flags + inputs produce byte-identical data outputs;
// file outputs get a sidecar <out>.manifest.json with timing added.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmec/bell_hardy.hpp"
#include "gmec/convex_roof.hpp"
#include "gmec/core.hpp"
#include "gmec/json_io.hpp"
#include "gmec/measures.hpp"
#include "gmec/uio.hpp"
#include "gmec/version.hpp"

using nlohmann::json;
using namespace gmec;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::string out;
  bool pretty = false;
};

struct RoofFlags {
  int m = 0;
  int restarts = 16;
  int iters = 2000;
  double tol = 1e-6;
};

void add_roof_flags(CLI::App* cmd, RoofFlags& rf) {
  cmd->add_option("--roof-m", rf.m, "ensemble size (0: rank^2, capped at 16)");
  cmd->add_option("--roof-restarts", rf.restarts, "optimizer restarts");
  cmd->add_option("--roof-iters", rf.iters, "max iterations per restart");
  cmd->add_option("--roof-tol", rf.tol, "objective convergence tolerance");
}

RoofConfig roof_config(const RoofFlags& rf, std::uint64_t seed) {
  RoofConfig cfg;
  cfg.ensemble_size = rf.m;
  cfg.restarts = rf.restarts;
  cfg.max_iterations = rf.iters;
  cfg.tolerance = rf.tol;
  cfg.seed = seed;
  return cfg;
}

json roof_flags_json(const RoofFlags& rf) {
  return {{"roof_m", rf.m}, {"roof_restarts", rf.restarts},
          {"roof_iters", rf.iters}, {"roof_tol", rf.tol}};
}

json manifest_json(const std::string& subcommand, const GlobalOpts& g,
                   const json& flags, const json& inputs) {
  return {{"tool", "gmec"}, {"version", kVersion}, {"subcommand", subcommand},
          {"seed", g.seed}, {"flags", flags}, {"inputs", inputs}};
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(Error::Kind::Io, "cannot write file: " + path);
  out << content;
}

// Reports go to stdout unless --out is set; file outputs get a sidecar
// manifest that additionally records the wall-clock duration.
void emit_report(const json& report, const GlobalOpts& g, const json& manifest,
                 std::chrono::steady_clock::time_point start) {
  const std::string text = g.pretty ? report.dump(2) + "\n" : report.dump() + "\n";
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  write_text_file(g.out, text);
  json side = manifest;
  side["duration_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  write_text_file(g.out + ".manifest.json", side.dump(2) + "\n");
}

json decomposition_json(const Decomposition& dec) {
  json weights = json::array();
  json states = json::array();
  for (std::size_t j = 0; j < dec.weights.size(); ++j) {
    weights.push_back(dec.weights[j]);
    states.push_back(to_json(dec.states[j]));
  }
  return {{"weights", std::move(weights)}, {"states", std::move(states)}};
}

ConcaveFunction parse_concave(const std::string& name, int gbc_dmin) {
  if (name == "concurrence") return ConcaveFunction::concurrence();
  if (name == "gbc") return ConcaveFunction::gbc(gbc_dmin);
  if (name == "entropy") return ConcaveFunction::entropy();
  fail(Error::Kind::InvalidParameter, "unknown measure kind: " + name);
}

// ---------------------------------------------------------------------------
// coh

int cmd_coh(const std::string& state_path, const std::string& measure,
            int gbc_dmin, const RoofFlags& rf, const GlobalOpts& g) {
  const auto start = std::chrono::steady_clock::now();
  const std::string digest = file_digest(state_path);
  const LoadedState loaded = load_state(state_path);
  const DensityMatrix rho = loaded.as_density();

  json report{{"subcommand", "coh"}, {"measure", measure}};
  if (measure == "l1") {
    report["value"] = l1_coherence(rho);
    report["method"] = to_string(Method::ClosedForm);
  } else {
    const int dmin = gbc_dmin > 0 ? gbc_dmin : static_cast<int>(rho.mat.rows());
    const ConcaveFunction f = parse_concave(measure, dmin);
    const std::optional<PureState> psi = as_pure_state(rho);
    if (psi) {
      report["value"] = coherence_pure(f, *psi);
      report["method"] = to_string(Method::ClosedForm);
    } else {
      const RoofResult res =
          convex_roof(PureMeasure::coherence(f), rho, roof_config(rf, g.seed));
      report["value"] = res.value;
      report["method"] = to_string(Method::Roof);
      report["converged"] = res.converged;
      report["best_restart"] = res.best_restart;
      report["restart_values"] = res.restart_values;
      report["decomposition"] = decomposition_json(res.decomposition);
    }
  }

  json flags = roof_flags_json(rf);
  flags["measure"] = measure;
  const json manifest =
      manifest_json("coh", g, flags, json{{state_path, digest}});
  report["manifest"] = manifest;
  emit_report(report, g, manifest, start);
  return 0;
}

// ---------------------------------------------------------------------------
// gme

int cmd_gme(const std::string& state_path, const std::string& measure,
            const std::string& kind, int gbc_dmin, const RoofFlags& rf,
            const GlobalOpts& g) {
  const auto start = std::chrono::steady_clock::now();
  const std::string digest = file_digest(state_path);
  const LoadedState loaded = load_state(state_path);
  const DensityMatrix rho = loaded.as_density();
  if (rho.dims.size() < 2)
    fail(Error::Kind::InvalidParameter, "gme needs a multipartite state");
  if (kind != "min" && kind != "geo")
    fail(Error::Kind::InvalidParameter, "kind must be min or geo");

  const int dmin = gbc_dmin > 0 ? gbc_dmin : 2;
  const ConcaveFunction f = parse_concave(measure, dmin);

  json report{{"subcommand", "gme"}, {"measure", measure}, {"kind", kind}};
  const std::optional<PureState> psi = as_pure_state(rho);
  if (psi) {
    report["value"] =
        kind == "min" ? e_min_gme_pure(f, *psi) : g_geo_gme_pure(f, *psi);
    report["method"] = to_string(Method::ClosedForm);
  } else if (kind == "min" && f.kind == ConcaveFunction::Kind::Concurrence &&
             is_diagonal_correlation_state(rho)) {
    report["value"] = xstate_gme_concurrence(rho);
    report["method"] = to_string(Method::ClosedForm);
  } else {
    const PureMeasure pm = kind == "min" ? PureMeasure::e_min_gme(f)
                                         : PureMeasure::g_geo_gme(f);
    const RoofResult res = convex_roof(pm, rho, roof_config(rf, g.seed));
    report["value"] = res.value;
    report["method"] = to_string(Method::Roof);
    report["converged"] = res.converged;
    report["best_restart"] = res.best_restart;
    report["restart_values"] = res.restart_values;
    report["decomposition"] = decomposition_json(res.decomposition);
  }

  json flags = roof_flags_json(rf);
  flags["measure"] = measure;
  flags["kind"] = kind;
  const json manifest =
      manifest_json("gme", g, flags, json{{state_path, digest}});
  report["manifest"] = manifest;
  emit_report(report, g, manifest, start);
  return 0;
}

// ---------------------------------------------------------------------------
// uio

int cmd_uio(const std::string& state_path, int parties, const GlobalOpts& g) {
  const auto start = std::chrono::steady_clock::now();
  if (g.out.empty()) fail(Error::Kind::InvalidParameter, "uio requires --out");
  const std::string digest = file_digest(state_path);
  const LoadedState loaded = load_state(state_path);

  if (loaded.pure) {
    save_state(g.out, convert(*loaded.pure, parties));
  } else {
    save_state(g.out, convert(*loaded.density, parties));
  }

  json manifest = manifest_json("uio", g, json{{"parties", parties}},
                                json{{state_path, digest}});
  manifest["duration_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
  write_text_file(g.out + ".manifest.json", manifest.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// check-theorem3

int cmd_check_theorem3(int trials, int dim, int parties, const std::string& measure,
                       double tol, const std::string& family, int rank,
                       const RoofFlags& rf, const GlobalOpts& g) {
  const auto start = std::chrono::steady_clock::now();
  const ConcaveFunction f = parse_concave(measure == "l1" ? "concurrence" : measure, dim);

  json trial_reports = json::array();
  int passed = 0;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = splitmix64(g.seed + static_cast<std::uint64_t>(t));
    DensityMatrix rho{{}, {}};
    if (family == "pure") {
      rho = pure_to_density(random_pure_state({dim}, trial_seed));
    } else if (family == "incoherent") {
      std::mt19937_64 rng(trial_seed);
      std::exponential_distribution<double> expd(1.0);
      Eigen::VectorXd w(dim);
      for (int i = 0; i < dim; ++i) w(i) = expd(rng);
      w /= w.sum();
      Mat m = Mat::Zero(dim, dim);
      for (int i = 0; i < dim; ++i) m(i, i) = w(i);
      rho = validate_density_matrix(m, {dim});
    } else if (family == "mixed") {
      rho = random_density_matrix({dim}, rank, trial_seed);
    } else {
      fail(Error::Kind::InvalidParameter, "family must be mixed, pure or incoherent");
    }

    const Theorem3Report rep =
        check_theorem3(rho, f, parties, roof_config(rf, trial_seed));
    const bool ok = rep.max_discrepancy <= tol;
    passed += ok ? 1 : 0;
    trial_reports.push_back(
        {{"trial", t},
         {"coherence", rep.coherence},
         {"coherence_method", to_string(rep.coherence_method)},
         {"e_min_gme", rep.e_min},
         {"e_min_method", to_string(rep.e_min_method)},
         {"g_geo_gme", rep.g_geo},
         {"g_geo_method", to_string(rep.g_geo_method)},
         {"max_discrepancy", rep.max_discrepancy},
         {"pass", ok}});
  }

  json flags = roof_flags_json(rf);
  flags.update(json{{"trials", trials}, {"dim", dim}, {"parties", parties},
                    {"measure", measure}, {"tol", tol}, {"family", family},
                    {"rank", rank}});
  const json manifest = manifest_json("check-theorem3", g, flags, json::object());

  json report{{"subcommand", "check-theorem3"}, {"trials", trial_reports},
              {"passed", passed}, {"total", trials},
              {"all_passed", passed == trials}, {"tol", tol},
              {"manifest", manifest}};
  emit_report(report, g, manifest, start);
  return 0;
}

// ---------------------------------------------------------------------------
// hardy

json flag_with_provenance(bool value, const std::string& provenance) {
  return {{"value", value}, {"provenance", provenance}};
}

int cmd_hardy_max(double p, double r, int restarts, bool free_angles,
                  const GlobalOpts& g) {
  const auto start = std::chrono::steady_clock::now();
  const XStateParams params = make_xstate_params(p, r);

  json report{{"subcommand", "hardy max"}, {"p", p}, {"r", r},
              {"restarts", restarts}, {"method", "multistart_ascent"}};
  if (free_angles) {
    const FreeAnglesResult res = maximize_hardy_free(params, restarts, g.seed);
    report["h_max"] = res.h_max;
    report["angles"] = res.angles;
    report["converged"] = res.converged;
    report["beyond_shared_angles"] = true;
  } else {
    const HardyResult res = maximize_hardy(params, restarts, g.seed);
    report["h_max"] = res.h_max;
    report["angles"] = {res.best.theta1, res.best.theta2, res.best.theta3,
                        res.best.theta4};
    report["converged"] = res.converged;
    const CorrelationFlags fl = gmnl_gms_flags(params, restarts, g.seed);
    report["flags"] = {
        {"gme_positive", flag_with_provenance(fl.gme_positive, "computed")},
        {"gmnl", flag_with_provenance(fl.gmnl, "computed")},
        {"gms", flag_with_provenance(fl.gms, "asserted_equal_to_gmnl")}};
    report["gme_concurrence"] = fl.gme_concurrence;
  }

  const json flags{{"p", p}, {"r", r}, {"restarts", restarts},
                   {"free_angles", free_angles}};
  const json manifest = manifest_json("hardy max", g, flags, json::object());
  report["manifest"] = manifest;
  emit_report(report, g, manifest, start);
  return 0;
}

int cmd_hardy_sweep(int p_steps, int r_steps, int restarts, const GlobalOpts& g) {
  const auto start = std::chrono::steady_clock::now();
  const SweepResult sweep = sweep_hardy(p_steps, r_steps, restarts, g.seed);
  const std::string csv = sweep_to_csv(sweep);

  for (int i : sweep.non_monotone_p_indices)
    std::cerr << "note: h_max not nondecreasing in r along p index " << i << "\n";

  const json flags{{"p_steps", p_steps}, {"r_steps", r_steps},
                   {"restarts", restarts}};
  json manifest = manifest_json("hardy sweep", g, flags, json::object());

  if (g.out.empty()) {
    std::cout << csv;
  } else {
    write_text_file(g.out, csv);
    manifest["duration_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count();
    write_text_file(g.out + ".manifest.json", manifest.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence and genuine-multipartite-entanglement toolbox"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--seed", g.seed, "random seed for all stochastic steps");
  app.add_option("--out", g.out, "write data output to this file");
  app.add_flag("--json", g.pretty, "pretty-print JSON reports");

  // coh
  auto* coh = app.add_subcommand("coh", "coherence of a state");
  std::string coh_state, coh_measure = "l1";
  int coh_gbc_dmin = 0;
  RoofFlags coh_rf;
  coh->add_option("--state", coh_state, "state file (JSON)")->required();
  coh->add_option("--measure", coh_measure, "concurrence|gbc|entropy|l1");
  coh->add_option("--gbc-dmin", coh_gbc_dmin, "d_min for gbc (default: state dimension)");
  add_roof_flags(coh, coh_rf);

  // gme
  auto* gme = app.add_subcommand("gme", "genuine multipartite entanglement");
  std::string gme_state, gme_measure = "concurrence", gme_kind = "min";
  int gme_gbc_dmin = 0;
  RoofFlags gme_rf;
  gme->add_option("--state", gme_state, "state file (JSON)")->required();
  gme->add_option("--measure", gme_measure, "concurrence|gbc|entropy");
  gme->add_option("--kind", gme_kind, "min|geo");
  gme->add_option("--gbc-dmin", gme_gbc_dmin, "simplex-level d_min for gbc");
  add_roof_flags(gme, gme_rf);

  // uio
  auto* uio = app.add_subcommand("uio", "convert a state with the incoherent unitary");
  std::string uio_state;
  int uio_parties = 3;
  uio->add_option("--state", uio_state, "state file (JSON)")->required();
  uio->add_option("--parties", uio_parties, "party count of the converted state");

  // check-theorem3
  auto* chk = app.add_subcommand("check-theorem3",
                                 "coherence vs converted-state GME on random states");
  int chk_trials = 10, chk_dim = 2, chk_parties = 3, chk_rank = 2;
  std::string chk_measure = "concurrence", chk_family = "mixed";
  double chk_tol = 2e-3;
  RoofFlags chk_rf;
  chk->add_option("--trials", chk_trials, "number of random trials");
  chk->add_option("--dim", chk_dim, "input state dimension");
  chk->add_option("--parties", chk_parties, "party count after conversion");
  chk->add_option("--measure", chk_measure, "concurrence|gbc|entropy");
  chk->add_option("--tol", chk_tol, "pass/fail tolerance per trial");
  chk->add_option("--family", chk_family, "mixed|pure|incoherent");
  chk->add_option("--rank", chk_rank, "rank of random mixed states");
  add_roof_flags(chk, chk_rf);

  // hardy
  auto* hardy = app.add_subcommand("hardy", "Hardy-type nonlocality for X-states");
  hardy->require_subcommand(1);
  auto* hmax = hardy->add_subcommand("max", "maximize H for one (p, r)");
  double h_p = 0.5, h_r = 0.0;
  int h_restarts = 32;
  bool h_free = false;
  hmax->add_option("--p", h_p, "population of |000>")->required();
  hmax->add_option("--r", h_r, "antidiagonal element")->required();
  hmax->add_option("--restarts", h_restarts, "ascent restarts");
  hmax->add_flag("--free-angles", h_free,
                 "six independent angles (beyond the shared-angle family)");

  auto* hsweep = hardy->add_subcommand("sweep", "maximize H over a (p, r) grid");
  int sw_p = 21, sw_r = 21, sw_restarts = 32;
  hsweep->add_option("--p-steps", sw_p, "grid points along p");
  hsweep->add_option("--r-steps", sw_r, "grid points along r");
  hsweep->add_option("--restarts", sw_restarts, "ascent restarts per cell");

  CLI11_PARSE(app, argc, argv);

  try {
    if (coh->parsed()) return cmd_coh(coh_state, coh_measure, coh_gbc_dmin, coh_rf, g);
    if (gme->parsed())
      return cmd_gme(gme_state, gme_measure, gme_kind, gme_gbc_dmin, gme_rf, g);
    if (uio->parsed()) return cmd_uio(uio_state, uio_parties, g);
    if (chk->parsed())
      return cmd_check_theorem3(chk_trials, chk_dim, chk_parties, chk_measure,
                                chk_tol, chk_family, chk_rank, chk_rf, g);
    if (hardy->parsed()) {
      if (hmax->parsed()) return cmd_hardy_max(h_p, h_r, h_restarts, h_free, g);
      if (hsweep->parsed()) return cmd_hardy_sweep(sw_p, sw_r, sw_restarts, g);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
