#include "gmec/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace gmec {

NelderMeadResult nelder_mead_minimize(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x0, const NelderMeadOptions& options) {
  const int n = static_cast<int>(x0.size());
  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

  std::vector<Eigen::VectorXd> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  fs[0] = f(xs[0]);
  for (int i = 1; i <= n; ++i) {
    xs[i](i - 1) += options.initial_step;
    fs[i] = f(xs[i]);
  }

  std::vector<int> order(n + 1);
  std::iota(order.begin(), order.end(), 0);
  auto sort_simplex = [&] {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fs[a] < fs[b]; });
  };

  NelderMeadResult result;
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    sort_simplex();
    const int best = order[0], worst = order[n], second = order[n - 1];
    if (fs[worst] - fs[best] < options.f_tol) {
      result.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += xs[i];
    centroid /= n;

    const Eigen::VectorXd xr = centroid + alpha * (centroid - xs[worst]);
    const double fr = f(xr);

    if (fr < fs[best]) {
      const Eigen::VectorXd xe = centroid + gamma * (xr - centroid);
      const double fe = f(xe);
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
    } else if (fr < fs[second]) {
      xs[worst] = xr;
      fs[worst] = fr;
    } else {
      // contraction: outside if the reflected point improved on the worst
      const bool outside = fr < fs[worst];
      const Eigen::VectorXd base = outside ? xr : xs[worst];
      const Eigen::VectorXd xc = centroid + rho * (base - centroid);
      const double fc = f(xc);
      if (fc < std::min(fr, fs[worst])) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        for (int i = 0; i <= n; ++i) {
          if (i == best) continue;
          xs[i] = xs[best] + sigma * (xs[i] - xs[best]);
          fs[i] = f(xs[i]);
        }
      }
    }
  }

  sort_simplex();
  result.x = xs[order[0]];
  result.value = fs[order[0]];
  result.iterations = iter;
  return result;
}

}  // namespace gmec
