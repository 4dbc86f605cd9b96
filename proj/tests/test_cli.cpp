// End-to-end checks of the command-line tool: every subcommand runs against
// the generated fixtures and reports are parsed back as JSON.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gmec/core.hpp"
#include "gmec/json_io.hpp"
#include "test_helpers.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kCli = GMEC_CLI_BIN;
const std::string kFixturesBin = GMEC_FIXTURES_BIN;

struct CliRun {
  int status = -1;
  std::string stdout_text;
};

std::string work_dir() {
  static std::string dir = [] {
    const fs::path d = fs::temp_directory_path() / "gmec_cli_tests";
    fs::create_directories(d);
    const int rc = std::system(("\"" + kFixturesBin + "\" \"" + (d / "fixtures").string() +
                                "\" > /dev/null")
                                   .c_str());
    REQUIRE(rc == 0);
    return d.string();
  }();
  return dir;
}

std::string fixture(const std::string& name) {
  return work_dir() + "/fixtures/" + name;
}

CliRun run_cli(const std::string& args) {
  const std::string out_path = work_dir() + "/stdout.txt";
  const std::string cmd =
      "\"" + kCli + "\" " + args + " > \"" + out_path + "\" 2> /dev/null";
  CliRun run;
  const int rc = std::system(cmd.c_str());
  run.status = rc == -1 ? -1 : WEXITSTATUS(rc);
  std::ifstream in(out_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  run.stdout_text = ss.str();
  return run;
}

json parse_report(const CliRun& run) {
  REQUIRE(run.status == 0);
  return json::parse(run.stdout_text);
}

}  // namespace

TEST_CASE("coh reports the l1 value of the plus state") {
  const json rep = parse_report(run_cli("coh --state " + fixture("plus.json") +
                                        " --measure l1"));
  CHECK(rep["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep["method"] == "closed_form");
  CHECK(rep["manifest"]["version"] == "0.1.0");
}

TEST_CASE("coh roof reproduces the closed value on the r=0.4 state") {
  const json rep = parse_report(run_cli("coh --state " + fixture("eq11_r04.json") +
                                        " --measure concurrence --seed 5"));
  CHECK(std::abs(rep["value"].get<double>() - 0.8) <= 1e-3);
  CHECK(rep["method"] == "roof");
  CHECK(rep.contains("decomposition"));
}

TEST_CASE("coh entropy of a diagonal state vanishes") {
  const json rep = parse_report(run_cli("coh --state " + fixture("diag.json") +
                                        " --measure entropy --seed 2"));
  CHECK(rep["value"].get<double>() <= 1e-9);
}

TEST_CASE("gme closed forms on fixtures") {
  const json ghz = parse_report(run_cli("gme --state " + fixture("ghz3.json") +
                                        " --measure concurrence --kind min"));
  CHECK(ghz["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ghz["method"] == "closed_form");

  const json x = parse_report(run_cli("gme --state " + fixture("eq12_r04.json") +
                                      " --measure concurrence --kind min"));
  CHECK(x["value"].get<double>() == doctest::Approx(0.8).epsilon(1e-9));
  CHECK(x["method"] == "closed_form");

  const json geo = parse_report(run_cli("gme --state " + fixture("ghz3.json") +
                                        " --measure entropy --kind geo"));
  CHECK(geo["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gme vanishes on a biseparable pure state file") {
  const std::string path = work_dir() + "/bisep.json";
  std::mt19937_64 rng(13);
  gmec::save_state(path, gmec::tensor_product(gmec::random_pure_state({2, 2}, rng),
                                              gmec::random_pure_state({2}, rng)));
  for (const char* kind : {"min", "geo"}) {
    const json rep = parse_report(run_cli("gme --state " + path +
                                          " --measure concurrence --kind " + kind));
    CHECK(rep["value"].get<double>() <= 1e-9);
    CHECK(rep["method"] == "closed_form");
  }
}

TEST_CASE("uio converts fixtures into fixtures") {
  const std::string out = work_dir() + "/converted.json";

  CliRun run = run_cli("uio --state " + fixture("plus.json") +
                       " --parties 3 --out " + out);
  CHECK(run.status == 0);
  const auto ghz_file = gmec::load_state(fixture("ghz3.json"));
  const auto converted = gmec::load_state(out);
  REQUIRE(converted.pure.has_value());
  CHECK((converted.pure->amps - ghz_file.pure->amps).norm() < 1e-12);
  CHECK(fs::exists(out + ".manifest.json"));

  run = run_cli("uio --state " + fixture("eq11_r04.json") + " --parties 3 --out " + out);
  CHECK(run.status == 0);
  const auto x = gmec::load_state(out);
  const auto x_expected = gmec::load_state(fixture("eq12_r04.json"));
  CHECK(gmec::testing::max_abs_diff(x.density->mat, x_expected.density->mat) < 1e-12);

  run = run_cli("uio --state " + fixture("diag.json") + " --parties 3 --out " + out);
  CHECK(run.status == 0);
  const auto diag = gmec::load_state(out);
  REQUIRE(diag.density.has_value());
  CHECK(diag.density->mat.rows() == 8);
  for (long i = 0; i < 8; ++i)
    for (long j = 0; j < 8; ++j)
      if (i != j) CHECK(std::abs(diag.density->mat(i, j)) == 0.0);
}

TEST_CASE("check-theorem3 passes on all three state families") {
  json rep = parse_report(run_cli(
      "check-theorem3 --trials 3 --dim 2 --parties 3 --measure concurrence "
      "--tol 2e-3 --seed 9"));
  CHECK(rep["all_passed"].get<bool>());

  rep = parse_report(run_cli(
      "check-theorem3 --trials 3 --dim 3 --parties 2 --measure entropy "
      "--family pure --tol 1e-10 --seed 9"));
  CHECK(rep["all_passed"].get<bool>());
  CHECK(rep["trials"][0]["coherence_method"] == "closed_form");

  rep = parse_report(run_cli(
      "check-theorem3 --trials 2 --dim 2 --parties 3 --measure concurrence "
      "--family incoherent --tol 1e-6 --seed 9"));
  CHECK(rep["all_passed"].get<bool>());
  CHECK(rep["trials"][0]["coherence"].get<double>() <= 1e-6);
}

TEST_CASE("hardy max reports value, angles and provenance-tagged flags") {
  const json rep = parse_report(run_cli("hardy max --p 0.5 --r 0.4 --seed 3"));
  CHECK(rep["h_max"].get<double>() > 0.0);
  CHECK(rep["angles"].size() == 4);
  CHECK(rep["flags"]["gmnl"]["value"].get<bool>());
  CHECK(rep["flags"]["gmnl"]["provenance"] == "computed");
  CHECK(rep["flags"]["gms"]["provenance"] == "asserted_equal_to_gmnl");
  CHECK(rep["gme_concurrence"].get<double>() == doctest::Approx(0.8));

  const json zero = parse_report(run_cli("hardy max --p 0.3 --r 0 --seed 3"));
  CHECK(zero["h_max"].get<double>() <= 1e-8);
  CHECK_FALSE(zero["flags"]["gmnl"]["value"].get<bool>());

  const json free6 = parse_report(
      run_cli("hardy max --p 0.5 --r 0.4 --free-angles --restarts 8 --seed 3"));
  CHECK(free6["angles"].size() == 6);
  CHECK(free6["beyond_shared_angles"].get<bool>());
}

TEST_CASE("hardy sweep writes a well-formed deterministic CSV") {
  const std::string out = work_dir() + "/sweep.csv";
  CliRun run = run_cli("hardy sweep --p-steps 5 --r-steps 5 --restarts 4 --seed 11 --out " +
                       out);
  CHECK(run.status == 0);

  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "p,r,h_max,theta1,theta2,theta3,theta4,converged");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 25);
  CHECK(fs::exists(out + ".manifest.json"));

  // byte-identical on rerun with the same seed and flags
  std::ostringstream first;
  first << std::ifstream(out).rdbuf();
  run = run_cli("hardy sweep --p-steps 5 --r-steps 5 --restarts 4 --seed 11 --out " + out);
  CHECK(run.status == 0);
  std::ostringstream second;
  second << std::ifstream(out).rdbuf();
  CHECK(first.str() == second.str());
}

TEST_CASE("reports are byte-identical for identical invocations") {
  const std::string args = "coh --state " + fixture("eq11_r04.json") +
                           " --measure concurrence --seed 5";
  const CliRun a = run_cli(args);
  const CliRun b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(a.stdout_text == b.stdout_text);
}

TEST_CASE("errors exit nonzero with empty stdout") {
  const CliRun missing = run_cli("coh --state /nonexistent.json --measure l1");
  CHECK(missing.status != 0);
  CHECK(missing.stdout_text.empty());

  const CliRun bad = run_cli("hardy max --p 0.5 --r 0.6 --seed 1");
  CHECK(bad.status != 0);
}
