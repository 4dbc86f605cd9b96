#include "gmec/bell_hardy.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "gmec/core.hpp"
#include "gmec/measures.hpp"
#include "gmec/nelder_mead.hpp"

namespace gmec {

namespace {

const double kPi = std::acos(-1.0);

using Mat2 = Eigen::Matrix2cd;

// Projector onto cos(t)|0> + sin(t)|1>.
Mat2 proj(double t) {
  const double c = std::cos(t), s = std::sin(t);
  Mat2 m;
  m << c * c, c * s, c * s, s * s;
  return m;
}

// Projector onto the orthogonal direction sin(t)|0> - cos(t)|1>.
Mat2 proj_bar(double t) {
  const double c = std::cos(t), s = std::sin(t);
  Mat2 m;
  m << s * s, -s * c, -s * c, c * c;
  return m;
}

double born(const Mat& rho, const Mat2& p1, const Mat2& p2, const Mat2& p3) {
  Mat op(8, 8);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          op.block(4 * a + 2 * c, 4 * b + 2 * d, 2, 2) = p1(a, b) * p2(c, d) * p3;
  return (rho * op).trace().real();
}

double hardy_six_terms(const Mat& rho, double t1, double t2, double t3a,
                       double t4a, double t3b, double t4b) {
  const Mat2 a1 = proj(t1), b1 = proj(t2);
  const Mat2 a2 = proj(t3a), b2 = proj(t4a);
  const Mat2 a3 = proj(t3b), b3 = proj(t4b);
  const Mat2 b1_bar = proj_bar(t2), b2_bar = proj_bar(t4a), b3_bar = proj_bar(t4b);

  const double term1 = born(rho, a1, a2, a3);
  const double term2 = born(rho, b1, a2, a3);
  const double term3 = born(rho, a1, b2, a3);
  const double term4 = born(rho, a1, a2, b3);
  const double term5 = born(rho, b1_bar, b2_bar, a3);
  const double term6 = born(rho, b1_bar, a2, b3_bar);
  return term1 - term2 - term3 - term4 - term5 - term6;
}

double wrap_to_period(double t) {
  const double w = t - kPi * std::floor(t / kPi);
  return (w < 0.0 || w > kPi) ? 0.0 : w;
}

}  // namespace

XStateParams make_xstate_params(double p, double r) {
  if (p < 0.0 || p > 1.0) fail(Error::Kind::InvalidParameter, "p must lie in [0, 1]");
  if (r < 0.0) fail(Error::Kind::InvalidParameter, "r must be nonnegative");
  if (r * r > p * (1.0 - p) + kEigenvalueClamp)
    fail(Error::Kind::PositivityViolated, "r^2 exceeds p(1-p)");
  return XStateParams{p, r};
}

MeasurementAngles make_angles(double t1, double t2, double t3, double t4) {
  for (double t : {t1, t2, t3, t4})
    if (t < 0.0 || t > kPi)
      fail(Error::Kind::InvalidParameter, "measurement angle outside [0, pi]");
  return MeasurementAngles{t1, t2, t3, t4};
}

DensityMatrix build_xstate(const XStateParams& params) {
  const XStateParams v = make_xstate_params(params.p, params.r);
  Mat m = Mat::Zero(8, 8);
  m(0, 0) = v.p;
  m(7, 7) = 1.0 - v.p;
  m(0, 7) = v.r;
  m(7, 0) = v.r;
  return DensityMatrix{{2, 2, 2}, std::move(m)};
}

double hardy_from_state(const DensityMatrix& rho, const MeasurementAngles& angles) {
  if (rho.dims != std::vector<int>{2, 2, 2})
    fail(Error::Kind::DimensionMismatch, "hardy evaluation needs a three-qubit state");
  return hardy_six_terms(rho.mat, angles.theta1, angles.theta2, angles.theta3,
                         angles.theta4, angles.theta3, angles.theta4);
}

double hardy_closed_form(const MeasurementAngles& a, const XStateParams& params) {
  const double p = params.p, r = params.r;
  const double c1 = std::cos(a.theta1), s1 = std::sin(a.theta1);
  const double c2 = std::cos(a.theta2), s2 = std::sin(a.theta2);
  const double c3 = std::cos(a.theta3), s3 = std::sin(a.theta3);
  const double c4 = std::cos(a.theta4), s4 = std::sin(a.theta4);
  const double sin2t3 = std::sin(2.0 * a.theta3);
  const double sin2t4 = std::sin(2.0 * a.theta4);

  return (p - 1.0) * s3 * s3 *
             (2.0 * c2 * c2 * c4 * c4 + (s2 * s2 - s1 * s1) * s3 * s3 +
              2.0 * s1 * s1 * s4 * s4) +
         p * c3 * c3 *
             (c1 * c1 * (c3 * c3 - 2.0 * c4 * c4) - c2 * c2 * c3 * c3 -
              2.0 * s2 * s2 * s4 * s4) +
         r * sin2t3 *
             (c1 * s1 * (c3 * s3 - sin2t4) - c2 * s2 * (c3 * s3 + sin2t4));
}

HardyResult maximize_hardy(const XStateParams& params, int restarts,
                           std::uint64_t seed) {
  const XStateParams v = make_xstate_params(params.p, params.r);
  if (restarts < 1) fail(Error::Kind::InvalidParameter, "restarts must be >= 1");

  auto objective = [&](const Eigen::VectorXd& x) {
    const MeasurementAngles a{x(0), x(1), x(2), x(3)};
    return -hardy_closed_form(a, v);
  };

  NelderMeadOptions nm;
  nm.max_iterations = 1000;
  nm.f_tol = 1e-9;
  nm.initial_step = 0.4;

  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_real_distribution<double> uniform(0.0, kPi);

  HardyResult result;
  result.params = v;
  result.restarts = restarts;
  double best = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_x(4);
  bool best_converged = false;

  for (int rs = 0; rs < restarts; ++rs) {
    Eigen::VectorXd x0(4);
    if (rs == 0) {
      x0 << kPi / 2.0, kPi / 2.0, 3.0 * kPi / 4.0, 0.0;
    } else {
      for (int i = 0; i < 4; ++i) x0(i) = uniform(rng);
    }
    const NelderMeadResult r_nm = nelder_mead_minimize(objective, x0, nm);
    if (-r_nm.value > best + 1e-15) {
      best = -r_nm.value;
      best_x = r_nm.x;
      best_converged = r_nm.converged;
    }
  }

  // the objective is pi-periodic in every angle
  const MeasurementAngles wrapped =
      make_angles(wrap_to_period(best_x(0)), wrap_to_period(best_x(1)),
                  wrap_to_period(best_x(2)), wrap_to_period(best_x(3)));
  result.best = wrapped;
  result.h_max = hardy_closed_form(wrapped, v);
  result.converged = best_converged;
  return result;
}

SweepResult sweep_hardy(int p_steps, int r_steps, int restarts, std::uint64_t seed) {
  if (p_steps < 2 || r_steps < 2)
    fail(Error::Kind::InvalidParameter, "sweep needs at least two steps per axis");

  SweepResult sweep;
  sweep.p_steps = p_steps;
  sweep.r_steps = r_steps;
  sweep.rows.reserve(static_cast<std::size_t>(p_steps) * r_steps);

  for (int i = 0; i < p_steps; ++i) {
    const double p = 0.5 * i / (p_steps - 1);
    const double r_max = std::sqrt(p * (1.0 - p));
    bool monotone = true;
    double prev = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < r_steps; ++j) {
      const double r = r_max * j / (r_steps - 1);
      const std::uint64_t cell_seed =
          splitmix64(seed ^ (static_cast<std::uint64_t>(i) * 0x10003ull + j));
      const HardyResult h = maximize_hardy(XStateParams{p, r}, restarts, cell_seed);
      sweep.rows.push_back(SweepRow{p, r, h.h_max, h.best, h.converged});
      if (h.h_max < prev - 1e-9) monotone = false;
      prev = h.h_max;
    }
    if (!monotone) sweep.non_monotone_p_indices.push_back(i);
  }
  return sweep;
}

std::string sweep_to_csv(const SweepResult& sweep) {
  std::string out = "p,r,h_max,theta1,theta2,theta3,theta4,converged\n";
  char buf[256];
  for (const auto& row : sweep.rows) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%d\n",
                  row.p, row.r, row.h_max, row.angles.theta1, row.angles.theta2,
                  row.angles.theta3, row.angles.theta4, row.converged ? 1 : 0);
    out += buf;
  }
  return out;
}

CorrelationFlags gmnl_gms_flags(const XStateParams& params, int restarts,
                                std::uint64_t seed) {
  CorrelationFlags flags;
  const HardyResult h = maximize_hardy(params, restarts, seed);
  flags.h_max = h.h_max;
  flags.gmnl = h.h_max > kViolationThreshold;
  flags.gms = flags.gmnl;
  flags.gme_concurrence = xstate_gme_concurrence(build_xstate(params));
  flags.gme_positive = flags.gme_concurrence > kSimplexTol;
  return flags;
}

FreeAnglesResult maximize_hardy_free(const XStateParams& params, int restarts,
                                     std::uint64_t seed) {
  const XStateParams v = make_xstate_params(params.p, params.r);
  if (restarts < 1) fail(Error::Kind::InvalidParameter, "restarts must be >= 1");
  const DensityMatrix rho = build_xstate(v);

  auto objective = [&](const Eigen::VectorXd& x) {
    return -hardy_six_terms(rho.mat, x(0), x(1), x(2), x(3), x(4), x(5));
  };

  NelderMeadOptions nm;
  nm.max_iterations = 1500;
  nm.f_tol = 1e-9;
  nm.initial_step = 0.4;

  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_real_distribution<double> uniform(0.0, kPi);

  FreeAnglesResult result;
  double best = -std::numeric_limits<double>::infinity();
  for (int rs = 0; rs < restarts; ++rs) {
    Eigen::VectorXd x0(6);
    if (rs == 0) {
      x0 << kPi / 2.0, kPi / 2.0, 3.0 * kPi / 4.0, 0.0, 3.0 * kPi / 4.0, 0.0;
    } else {
      for (int i = 0; i < 6; ++i) x0(i) = uniform(rng);
    }
    const NelderMeadResult r_nm = nelder_mead_minimize(objective, x0, nm);
    if (-r_nm.value > best + 1e-15) {
      best = -r_nm.value;
      for (int i = 0; i < 6; ++i) result.angles[i] = wrap_to_period(r_nm.x(i));
      result.converged = r_nm.converged;
    }
  }
  result.h_max = hardy_six_terms(rho.mat, result.angles[0], result.angles[1],
                                 result.angles[2], result.angles[3],
                                 result.angles[4], result.angles[5]);
  return result;
}

}  // namespace gmec
