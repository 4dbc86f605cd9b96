#pragma once

#include <Eigen/Dense>
#include <functional>

namespace gmec {

struct NelderMeadOptions {
  int max_iterations = 2000;
  double f_tol = 1e-9;       // stop when the simplex value spread is below this
  double initial_step = 0.5; // per-coordinate offset of the initial simplex
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Standard downhill simplex (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5). Deterministic: no internal randomness.
NelderMeadResult nelder_mead_minimize(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x0, const NelderMeadOptions& options);

}  // namespace gmec
