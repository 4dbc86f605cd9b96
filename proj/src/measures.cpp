#include "gmec/measures.hpp"

#include <algorithm>
#include <cmath>

namespace gmec {

namespace {

// Sum over ordered pairs i != j of p_i p_j, computed as (sum p)^2 - sum p^2.
double pairwise_sum(const Eigen::VectorXd& p) {
  const double s = p.sum();
  const double s2 = p.squaredNorm();
  return std::max(0.0, s * s - s2);
}

Eigen::VectorXd clamped(const Eigen::VectorXd& p) {
  Eigen::VectorXd q = p;
  for (long i = 0; i < q.size(); ++i)
    if (q(i) <= 0.0) q(i) = 0.0;
  return q;
}

}  // namespace

std::string to_string(ConcaveFunction::Kind kind) {
  switch (kind) {
    case ConcaveFunction::Kind::Concurrence: return "concurrence";
    case ConcaveFunction::Kind::Gbc: return "gbc";
    case ConcaveFunction::Kind::Entropy: return "entropy";
  }
  return "?";
}

Eigen::VectorXd coherence_vector(const PureState& psi) {
  return psi.amps.cwiseAbs2();
}

double eval_f(const ConcaveFunction& f, const Eigen::VectorXd& p) {
  if (p.size() == 0) fail(Error::Kind::NotASimplexVector, "empty probability vector");
  for (long i = 0; i < p.size(); ++i)
    if (p(i) < -kEigenvalueClamp)
      fail(Error::Kind::NotASimplexVector, "negative probability entry");
  if (std::abs(p.sum() - 1.0) > kSimplexTol)
    fail(Error::Kind::NotASimplexVector, "probabilities do not sum to one");
  const Eigen::VectorXd q = clamped(p);

  switch (f.kind) {
    case ConcaveFunction::Kind::Concurrence:
      return std::sqrt(2.0 * pairwise_sum(q));
    case ConcaveFunction::Kind::Gbc: {
      if (f.gbc_dmin < 2) fail(Error::Kind::InvalidParameter, "gbc d_min must be >= 2");
      const double dm = static_cast<double>(f.gbc_dmin);
      return std::sqrt(dm / (dm - 1.0) * pairwise_sum(q));
    }
    case ConcaveFunction::Kind::Entropy: {
      double h = 0.0;
      for (long i = 0; i < q.size(); ++i)
        if (q(i) > 0.0) h -= q(i) * std::log2(q(i));
      return std::max(0.0, h);
    }
  }
  fail(Error::Kind::InvalidParameter, "unknown measure kind");
}

double coherence_pure(const ConcaveFunction& f, const PureState& psi) {
  return eval_f(f, coherence_vector(psi));
}

double l1_coherence(const DensityMatrix& rho) {
  double sum = 0.0;
  for (long i = 0; i < rho.mat.rows(); ++i)
    for (long j = 0; j < rho.mat.cols(); ++j)
      if (i != j) sum += std::abs(rho.mat(i, j));
  return sum;
}

double e_f_gamma_pure(const ConcaveFunction& f, const PureState& psi,
                      const Bipartition& gamma) {
  const Eigen::VectorXd lam = schmidt_vector(psi, gamma);
  if (f.kind == ConcaveFunction::Kind::Gbc) {
    // schmidt_vector is already truncated to the smaller split dimension
    ConcaveFunction g = ConcaveFunction::gbc(static_cast<int>(lam.size()));
    return eval_f(g, lam);
  }
  return eval_f(f, lam);
}

double e_min_gme_pure(const ConcaveFunction& f, const PureState& psi) {
  return e_min_gme_pure_argmin(f, psi).first;
}

std::pair<double, Bipartition> e_min_gme_pure_argmin(const ConcaveFunction& f,
                                                     const PureState& psi) {
  const auto parts = enumerate_bipartitions(static_cast<int>(psi.dims.size()));
  double best = 0.0;
  std::size_t best_idx = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const double v = e_f_gamma_pure(f, psi, parts[k]);
    if (k == 0 || v < best) {
      best = v;
      best_idx = k;
    }
  }
  return {best, parts[best_idx]};
}

long long c_alpha(int n_parties) {
  if (n_parties < 2) fail(Error::Kind::InvalidParameter, "need at least two parties");
  const int n = n_parties;
  auto binom = [](int nn, int kk) {
    long long r = 1;
    for (int i = 1; i <= kk; ++i) r = r * (nn - kk + i) / i;
    return r;
  };
  long long c = 0;
  if (n % 2 == 1) {
    for (int m = 1; m <= (n - 1) / 2; ++m) c += binom(n, m);
  } else {
    for (int m = 1; m <= (n - 2) / 2; ++m) c += binom(n, m);
    c += binom(n, n / 2) / 2;
  }
  return c;
}

double g_geo_gme_pure(const ConcaveFunction& f, const PureState& psi) {
  const auto parts = enumerate_bipartitions(static_cast<int>(psi.dims.size()));
  const long long c = c_alpha(static_cast<int>(psi.dims.size()));
  double log_sum = 0.0;
  for (const auto& gamma : parts) {
    const double v = e_f_gamma_pure(f, psi, gamma);
    if (v <= 1e-300) return 0.0;
    log_sum += std::log(v);
  }
  return std::exp(log_sum / static_cast<double>(c));
}

namespace {

// Composite indices of the repeated-digit basis states |ii...i>.
std::vector<long> repeated_indices(const std::vector<int>& dims) {
  const int d = *std::min_element(dims.begin(), dims.end());
  std::vector<long> idx(d, 0);
  for (int i = 0; i < d; ++i) {
    long v = 0;
    for (int dim : dims) v = v * dim + i;
    idx[i] = v;
  }
  return idx;
}

}  // namespace

bool is_diagonal_correlation_state(const DensityMatrix& rho, double tol) {
  const auto rep = repeated_indices(rho.dims);
  std::vector<bool> on_support(rho.mat.rows(), false);
  for (long v : rep) on_support[v] = true;
  for (long i = 0; i < rho.mat.rows(); ++i)
    for (long j = 0; j < rho.mat.cols(); ++j)
      if (!(on_support[i] && on_support[j]) && std::abs(rho.mat(i, j)) > tol)
        return false;
  return true;
}

double xstate_gme_concurrence(const DensityMatrix& rho) {
  if (!is_diagonal_correlation_state(rho))
    fail(Error::Kind::NotADiagonalCorrelationState,
         "state has support outside the repeated-digit subspace");
  const auto rep = repeated_indices(rho.dims);
  double sum = 0.0;
  for (std::size_t i = 0; i < rep.size(); ++i)
    for (std::size_t j = 0; j < rep.size(); ++j)
      if (i != j) sum += std::abs(rho.mat(rep[i], rep[j]));
  return sum;
}

}  // namespace gmec
