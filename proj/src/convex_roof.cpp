#include "gmec/convex_roof.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gmec/core.hpp"
#include "gmec/nelder_mead.hpp"

namespace gmec {

namespace {

constexpr double kWeightDrop = 1e-14;
constexpr int kEnsembleCap = 16;

struct SpectralData {
  Eigen::VectorXd eigenvalues;  // descending, above kEigenvalueClamp
  Mat weighted_vectors;         // D x r, column k = sqrt(l_k) e_k
  int rank = 0;
};

SpectralData spectral_data(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.mat);
  const long d = rho.mat.rows();
  SpectralData out;
  std::vector<std::pair<double, long>> ev;
  for (long k = 0; k < d; ++k) ev.push_back({es.eigenvalues()(k), k});
  std::sort(ev.begin(), ev.end(), [](auto& a, auto& b) { return a.first > b.first; });
  int r = 0;
  while (r < d && ev[r].first > kEigenvalueClamp) ++r;
  out.rank = r;
  out.eigenvalues.resize(r);
  out.weighted_vectors.resize(d, r);
  for (int k = 0; k < r; ++k) {
    out.eigenvalues(k) = ev[k].first;
    out.weighted_vectors.col(k) = std::sqrt(ev[k].first) * es.eigenvectors().col(ev[k].second);
  }
  return out;
}

// exp(A) for anti-Hermitian A via the spectral decomposition of -iA.
Mat anti_hermitian_exp(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(cplx(0.0, -1.0) * a);
  const long m = a.rows();
  Vec phases(m);
  for (long k = 0; k < m; ++k) phases(k) = std::exp(cplx(0.0, es.eigenvalues()(k)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Mat isometry_from_params(const Eigen::VectorXd& x, int m, int r) {
  Mat a = Mat::Zero(m, m);
  int idx = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const cplx v(x(idx), x(idx + 1));
      idx += 2;
      a(i, j) = v;
      a(j, i) = -std::conj(v);
    }
  return anti_hermitian_exp(a).leftCols(r);
}

// Ensemble average of the measure for member vectors sqrt(p_j)|psi_j>
// stacked as columns.
double ensemble_average(const Mat& members, const std::vector<int>& dims,
                        const PureMeasure& measure) {
  double total = 0.0;
  for (long j = 0; j < members.cols(); ++j) {
    const double pj = members.col(j).squaredNorm();
    if (pj < kWeightDrop) continue;
    const PureState psi{dims, members.col(j) / std::sqrt(pj)};
    total += pj * measure(psi);
  }
  return total;
}

}  // namespace

double PureMeasure::operator()(const PureState& psi) const {
  switch (kind) {
    case Kind::Coherence:
      return coherence_pure(f, psi);
    case Kind::EGamma:
      if (!gamma) fail(Error::Kind::InvalidParameter, "e_gamma measure needs a bipartition");
      return e_f_gamma_pure(f, psi, *gamma);
    case Kind::EMinGme:
      return e_min_gme_pure(f, psi);
    case Kind::GGeoGme:
      return g_geo_gme_pure(f, psi);
  }
  fail(Error::Kind::InvalidParameter, "unknown pure measure kind");
}

Decomposition decomposition_from_isometry(const DensityMatrix& rho, const Mat& v) {
  const SpectralData sd = spectral_data(rho);
  if (v.cols() != sd.rank)
    fail(Error::Kind::RankMismatch, "isometry column count differs from state rank");
  if (v.rows() < v.cols())
    fail(Error::Kind::RankMismatch, "isometry needs at least rank rows");
  const Mat gram = v.adjoint() * v;
  if ((gram - Mat::Identity(sd.rank, sd.rank)).cwiseAbs().maxCoeff() > 1e-9)
    fail(Error::Kind::NotAnIsometry, "columns are not orthonormal");

  const Mat members = sd.weighted_vectors * v.transpose();
  Decomposition dec;
  for (long j = 0; j < members.cols(); ++j) {
    const double pj = members.col(j).squaredNorm();
    if (pj < kWeightDrop) continue;
    dec.weights.push_back(pj);
    dec.states.push_back(PureState{rho.dims, members.col(j) / std::sqrt(pj)});
  }
  return dec;
}

RoofResult convex_roof(const PureMeasure& measure, const DensityMatrix& rho,
                       const RoofConfig& cfg) {
  if (cfg.restarts < 1) fail(Error::Kind::InvalidParameter, "restarts must be >= 1");
  if (cfg.max_iterations < 1) fail(Error::Kind::InvalidParameter, "max_iterations must be >= 1");

  const SpectralData sd = spectral_data(rho);
  if (sd.rank < 1) fail(Error::Kind::NotPositive, "state has no positive eigenvalue");

  RoofResult result;
  if (sd.rank == 1) {
    Vec psi = sd.weighted_vectors.col(0);
    psi /= psi.norm();
    PureState pure{rho.dims, std::move(psi)};
    result.value = measure(pure);
    result.decomposition = Decomposition{{1.0}, {pure}};
    result.converged = true;
    return result;
  }

  const int m = cfg.ensemble_size > 0 ? cfg.ensemble_size
                                      : std::min(sd.rank * sd.rank, kEnsembleCap);
  if (m < sd.rank)
    fail(Error::Kind::RankMismatch, "ensemble size below the state rank");

  const int n_params = m * (m - 1);
  auto objective = [&](const Eigen::VectorXd& x) {
    const Mat v = isometry_from_params(x, m, sd.rank);
    return ensemble_average(sd.weighted_vectors * v.transpose(), rho.dims, measure);
  };

  NelderMeadOptions nm;
  nm.max_iterations = cfg.max_iterations;
  nm.f_tol = cfg.tolerance;
  nm.initial_step = 0.5;

  double best_value = 0.0;
  Eigen::VectorXd best_x;
  bool any_converged = false;

  for (int rs = 0; rs < cfg.restarts; ++rs) {
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(n_params);
    if (rs > 0) {
      std::mt19937_64 rng(splitmix64(cfg.seed + static_cast<std::uint64_t>(rs)));
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (int i = 0; i < n_params; ++i) x0(i) = gauss(rng);
    }
    const NelderMeadResult nm_result = nelder_mead_minimize(objective, x0, nm);
    result.restart_values.push_back(nm_result.value);
    any_converged = any_converged || nm_result.converged;
    if (result.best_restart < 0 || nm_result.value < best_value - 1e-12) {
      best_value = nm_result.value;
      best_x = nm_result.x;
      result.best_restart = rs;
    }
  }

  const Mat v = isometry_from_params(best_x, m, sd.rank);
  result.decomposition = decomposition_from_isometry(rho, v);
  double value = 0.0;
  for (std::size_t j = 0; j < result.decomposition.weights.size(); ++j)
    value += result.decomposition.weights[j] * measure(result.decomposition.states[j]);
  result.value = value;
  result.converged = any_converged;
  return result;
}

namespace {

// Unitary Givens rotation acting on coordinates (a, b) with mixing angle t
// and relative phase phi.
Mat givens(int dim, int a, int b, double t, double phi) {
  Mat g = Mat::Identity(dim, dim);
  const double c = std::cos(t), s = std::sin(t);
  const cplx e = std::exp(cplx(0.0, phi));
  g(a, a) = c;
  g(a, b) = s * e;
  g(b, a) = -s * std::conj(e);
  g(b, b) = c;
  return g;
}

}  // namespace

double brute_force_roof(const PureMeasure& measure, const DensityMatrix& rho,
                        int grid_resolution) {
  if (grid_resolution < 2) fail(Error::Kind::InvalidParameter, "grid resolution must be >= 2");
  if (rho.mat.rows() > 4)
    fail(Error::Kind::InvalidParameter, "brute-force oracle limited to dimension <= 4");
  const SpectralData sd = spectral_data(rho);
  if (sd.rank > 2) fail(Error::Kind::RankTooHigh, "brute-force oracle limited to rank <= 2");

  if (sd.rank == 1) {
    Vec psi = sd.weighted_vectors.col(0);
    psi /= psi.norm();
    return measure(PureState{rho.dims, std::move(psi)});
  }

  const double pi = std::acos(-1.0);
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](const Mat& v) {
    const double val = ensemble_average(sd.weighted_vectors * v.transpose(), rho.dims, measure);
    best = std::min(best, val);
  };

  // m = 2: exhaustive over U(2) modulo row phases.
  {
    const int nt = grid_resolution;
    const int np = 2 * grid_resolution;
    for (int it = 0; it <= nt; ++it) {
      const double t = 0.5 * pi * it / nt;
      const double c = std::cos(t), s = std::sin(t);
      for (int ip = 0; ip < np; ++ip) {
        const double phi = 2.0 * pi * ip / np;
        const cplx e = std::exp(cplx(0.0, phi));
        Mat v(2, 2);
        v << c, s * e, -s, c * e;
        consider(v);
      }
    }
  }

  // m = 3 and m = 4: coarser grids over Givens-product families.
  {
    const int res3 = std::max(5, grid_resolution / 12);
    const int nt = res3, np = res3;
    for (int i1 = 0; i1 <= nt; ++i1)
      for (int j1 = 0; j1 < np; ++j1)
        for (int i2 = 0; i2 <= nt; ++i2)
          for (int j2 = 0; j2 < np; ++j2)
            for (int i3 = 0; i3 <= nt; ++i3)
              for (int j3 = 0; j3 < np; ++j3) {
                const double t1 = 0.5 * pi * i1 / nt, p1 = 2.0 * pi * j1 / np;
                const double t2 = 0.5 * pi * i2 / nt, p2 = 2.0 * pi * j2 / np;
                const double t3 = 0.5 * pi * i3 / nt, p3 = 2.0 * pi * j3 / np;
                const Mat u = givens(3, 0, 1, t1, p1) * givens(3, 0, 2, t2, p2) *
                              givens(3, 1, 2, t3, p3);
                consider(u.leftCols(2));
              }
  }
  {
    const int res4 = std::max(3, grid_resolution / 20);
    const int nt = res4, np = res4;
    for (int i1 = 0; i1 <= nt; ++i1)
      for (int j1 = 0; j1 < np; ++j1)
        for (int i2 = 0; i2 <= nt; ++i2)
          for (int j2 = 0; j2 < np; ++j2)
            for (int i3 = 0; i3 <= nt; ++i3)
              for (int j3 = 0; j3 < np; ++j3) {
                const double t1 = 0.5 * pi * i1 / nt, p1 = 2.0 * pi * j1 / np;
                const double t2 = 0.5 * pi * i2 / nt, p2 = 2.0 * pi * j2 / np;
                const double t3 = 0.5 * pi * i3 / nt, p3 = 2.0 * pi * j3 / np;
                const Mat u = givens(4, 0, 1, t1, p1) * givens(4, 1, 2, t2, p2) *
                              givens(4, 2, 3, t3, p3);
                consider(u.leftCols(2));
              }
  }

  return best;
}

}  // namespace gmec
