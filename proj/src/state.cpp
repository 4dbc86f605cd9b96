#include "gmec/state.hpp"

#include <algorithm>
#include <cmath>

namespace gmec {

long total_dim(const std::vector<int>& dims) {
  if (dims.empty()) fail(Error::Kind::DimensionMismatch, "empty dimension list");
  long d = 1;
  for (int x : dims) {
    if (x < 2) fail(Error::Kind::DimensionMismatch, "subsystem dimension must be >= 2");
    d *= x;
  }
  return d;
}

PureState make_pure_state(std::vector<int> dims, Vec amps) {
  const long d = total_dim(dims);
  if (amps.size() != d)
    fail(Error::Kind::DimensionMismatch, "amplitude length does not match product of dims");
  const double norm = amps.norm();
  if (std::abs(norm - 1.0) > kValidationTol)
    fail(Error::Kind::InvalidParameter, "pure state is not normalized");
  return PureState{std::move(dims), std::move(amps)};
}

DensityMatrix validate_density_matrix(const Mat& m, std::vector<int> dims) {
  const long d = total_dim(dims);
  if (m.rows() != m.cols() || m.rows() != d)
    fail(Error::Kind::DimensionMismatch, "matrix side does not match product of dims");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kValidationTol)
    fail(Error::Kind::NotHermitian, "matrix is not Hermitian");
  const cplx tr = m.trace();
  if (std::abs(tr - cplx(1.0, 0.0)) > kValidationTol)
    fail(Error::Kind::TraceNotOne, "trace differs from one");
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kValidationTol)
    fail(Error::Kind::NotPositive, "matrix has a negative eigenvalue");
  return DensityMatrix{std::move(dims), m};
}

DensityMatrix pure_to_density(const PureState& psi) {
  return DensityMatrix{psi.dims, psi.amps * psi.amps.adjoint()};
}

Bipartition make_bipartition(std::vector<int> gamma, int n_parties) {
  if (n_parties < 2) fail(Error::Kind::InvalidParameter, "need at least two parties");
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  for (int p : gamma)
    if (p < 1 || p > n_parties) fail(Error::Kind::IndexOutOfRange, "party index out of range");
  if (gamma.empty() || static_cast<int>(gamma.size()) == n_parties)
    fail(Error::Kind::InvalidParameter, "bipartition must be a nonempty proper subset");
  if (gamma.front() != 1) {
    std::vector<int> comp;
    std::size_t k = 0;
    for (int p = 1; p <= n_parties; ++p) {
      if (k < gamma.size() && gamma[k] == p) {
        ++k;
      } else {
        comp.push_back(p);
      }
    }
    gamma = std::move(comp);
  }
  return Bipartition{std::move(gamma), n_parties};
}

std::vector<int> complement_parties(const Bipartition& b) {
  std::vector<int> comp;
  std::size_t k = 0;
  for (int p = 1; p <= b.n_parties; ++p) {
    if (k < b.gamma.size() && b.gamma[k] == p) {
      ++k;
    } else {
      comp.push_back(p);
    }
  }
  return comp;
}

DensityMatrix mix(const Decomposition& dec) {
  if (dec.weights.empty() || dec.weights.size() != dec.states.size())
    fail(Error::Kind::InvalidParameter, "decomposition weights/states size mismatch");
  double sum = 0;
  for (double w : dec.weights) {
    if (w < -kSimplexTol) fail(Error::Kind::InvalidParameter, "negative ensemble weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSimplexTol)
    fail(Error::Kind::InvalidParameter, "ensemble weights do not sum to one");
  const auto& dims = dec.states.front().dims;
  Mat acc = Mat::Zero(dec.states.front().amps.size(), dec.states.front().amps.size());
  for (std::size_t j = 0; j < dec.states.size(); ++j) {
    if (dec.states[j].dims != dims)
      fail(Error::Kind::DimensionMismatch, "inconsistent dims across ensemble members");
    acc += dec.weights[j] * (dec.states[j].amps * dec.states[j].amps.adjoint());
  }
  return DensityMatrix{dims, std::move(acc)};
}

}  // namespace gmec
