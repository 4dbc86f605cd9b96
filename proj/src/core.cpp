#include "gmec/core.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace gmec {

namespace {

// Stride of each party in the big-endian composite index.
std::vector<long> strides(const std::vector<int>& dims) {
  std::vector<long> s(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
    s[k] = s[k + 1] * dims[k + 1];
  return s;
}

// Composite-index offsets of all digit combinations over a subset of
// parties (1-based, sorted). Enumeration is big-endian within the subset.
std::vector<long> subset_offsets(const std::vector<int>& dims,
                                 const std::vector<int>& parties) {
  const auto s = strides(dims);
  std::vector<long> offsets{0};
  for (int p : parties) {
    const int d = dims[p - 1];
    const long stride = s[p - 1];
    std::vector<long> next;
    next.reserve(offsets.size() * d);
    for (long base : offsets)
      for (int digit = 0; digit < d; ++digit) next.push_back(base + digit * stride);
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<int> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  const long ra = a.mat.rows(), rb = b.mat.rows();
  Mat out(ra * rb, ra * rb);
  for (long i = 0; i < ra; ++i)
    for (long j = 0; j < ra; ++j) out.block(i * rb, j * rb, rb, rb) = a.mat(i, j) * b.mat;
  return DensityMatrix{std::move(dims), std::move(out)};
}

PureState tensor_product(const PureState& a, const PureState& b) {
  std::vector<int> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  Vec out(a.amps.size() * b.amps.size());
  for (long i = 0; i < a.amps.size(); ++i)
    out.segment(i * b.amps.size(), b.amps.size()) = a.amps(i) * b.amps;
  return PureState{std::move(dims), std::move(out)};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  if (keep.empty()) fail(Error::Kind::EmptyKeepSet, "keep set must be nonempty");
  const int n = static_cast<int>(rho.dims.size());
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (int p : kept)
    if (p < 1 || p > n) fail(Error::Kind::IndexOutOfRange, "kept party index out of range");

  std::vector<int> traced;
  for (int p = 1; p <= n; ++p)
    if (!std::binary_search(kept.begin(), kept.end(), p)) traced.push_back(p);

  std::vector<int> kept_dims;
  for (int p : kept) kept_dims.push_back(rho.dims[p - 1]);
  if (traced.empty()) return DensityMatrix{kept_dims, rho.mat};

  const auto keep_off = subset_offsets(rho.dims, kept);
  const auto trace_off = subset_offsets(rho.dims, traced);
  const long dk = static_cast<long>(keep_off.size());

  Mat out = Mat::Zero(dk, dk);
  for (long i = 0; i < dk; ++i)
    for (long j = 0; j < dk; ++j) {
      cplx acc(0.0, 0.0);
      for (long t : trace_off) acc += rho.mat(keep_off[i] + t, keep_off[j] + t);
      out(i, j) = acc;
    }
  return DensityMatrix{std::move(kept_dims), std::move(out)};
}

Eigen::VectorXd schmidt_vector(const PureState& psi, const Bipartition& gamma) {
  if (static_cast<int>(psi.dims.size()) != gamma.n_parties)
    fail(Error::Kind::DimensionMismatch, "bipartition party count does not match state");
  const DensityMatrix reduced = partial_trace(pure_to_density(psi), gamma.gamma);
  const long d_gamma = reduced.mat.rows();
  const long d_comp = psi.amps.size() / d_gamma;
  const long d_small = std::min(d_gamma, d_comp);

  Eigen::SelfAdjointEigenSolver<Mat> es(reduced.mat, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues().reverse();
  for (long k = 0; k < ev.size(); ++k)
    if (ev(k) < kEigenvalueClamp) ev(k) = 0.0;
  const double sum = ev.sum();
  if (sum > 0) ev /= sum;

  Eigen::VectorXd out = Eigen::VectorXd::Zero(d_small);
  out.head(std::min(d_small, ev.size())) = ev.head(std::min(d_small, ev.size()));
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n_parties) {
  if (n_parties < 2) fail(Error::Kind::InvalidParameter, "need at least two parties");
  std::vector<Bipartition> out;
  const unsigned long top = 1ul << (n_parties - 1);
  for (unsigned long mask = 0; mask + 1 < top; ++mask) {
    std::vector<int> gamma{1};
    for (int p = 2; p <= n_parties; ++p)
      if (mask & (1ul << (p - 2))) gamma.push_back(p);
    out.push_back(Bipartition{std::move(gamma), n_parties});
  }
  return out;
}

PureState random_pure_state(const std::vector<int>& dims, std::mt19937_64& rng) {
  const long d = total_dim(dims);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec amps(d);
  for (long i = 0; i < d; ++i) amps(i) = cplx(gauss(rng), gauss(rng));
  amps /= amps.norm();
  return PureState{dims, std::move(amps)};
}

PureState random_pure_state(const std::vector<int>& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_pure_state(dims, rng);
}

DensityMatrix random_density_matrix(const std::vector<int>& dims, int rank,
                                    std::mt19937_64& rng) {
  const long d = total_dim(dims);
  if (rank < 1 || rank > d) fail(Error::Kind::InvalidParameter, "rank must be in [1, prod dims]");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(d, rank);
  for (long i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  Mat m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix{dims, std::move(m)};
}

DensityMatrix random_density_matrix(const std::vector<int>& dims, int rank,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_density_matrix(dims, rank, rng);
}

Mat random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const cplx rjj = r(j, j);
    const cplx phase = std::abs(rjj) > 0 ? rjj / std::abs(rjj) : cplx(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

std::optional<PureState> as_pure_state(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.mat);
  int rank = 0;
  for (long k = 0; k < es.eigenvalues().size(); ++k)
    if (es.eigenvalues()(k) > kEigenvalueClamp) ++rank;
  if (rank != 1) return std::nullopt;
  long top = 0;
  es.eigenvalues().maxCoeff(&top);
  Vec psi = es.eigenvectors().col(top);
  psi /= psi.norm();
  return PureState{rho.dims, std::move(psi)};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace gmec
