// Writes the named example states used by the CLI tests and the README.
// Fixtures are generated from library code so they cannot drift.

#include <cmath>
#include <filesystem>
#include <iostream>

#include "gmec/bell_hardy.hpp"
#include "gmec/json_io.hpp"
#include "gmec/state.hpp"
#include "gmec/uio.hpp"

using namespace gmec;

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "fixtures";
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "error: cannot create " << dir << ": " << ec.message() << "\n";
    return 1;
  }

  const double s = 1.0 / std::sqrt(2.0);

  Vec plus(2);
  plus << s, s;
  save_state(dir + "/plus.json", make_pure_state({2}, plus));

  Vec ghz = Vec::Zero(8);
  ghz(0) = s;
  ghz(7) = s;
  save_state(dir + "/ghz3.json", make_pure_state({2, 2, 2}, ghz));

  Mat eq11(2, 2);
  eq11 << 0.5, 0.4, 0.4, 0.5;
  save_state(dir + "/eq11_r04.json", validate_density_matrix(eq11, {2}));

  save_state(dir + "/eq12_r04.json", build_xstate(XStateParams{0.5, 0.4}));

  Mat diag = Mat::Zero(2, 2);
  diag(0, 0) = 0.7;
  diag(1, 1) = 0.3;
  save_state(dir + "/diag.json", validate_density_matrix(diag, {2}));

  std::cout << "wrote plus.json ghz3.json eq11_r04.json eq12_r04.json diag.json to "
            << dir << "\n";
  return 0;
}
