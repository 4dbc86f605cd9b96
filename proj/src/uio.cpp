#include "gmec/uio.hpp"

#include <algorithm>
#include <cmath>

#include "gmec/core.hpp"

namespace gmec {

Mat permutation_operator(int basis_index, int dim) {
  if (basis_index < 0 || basis_index >= dim)
    fail(Error::Kind::IndexOutOfRange, "permutation target outside the ancilla dimension");
  Mat p = Mat::Identity(dim, dim);
  if (basis_index != 0) {
    p(0, 0) = 0.0;
    p(basis_index, basis_index) = 0.0;
    p(0, basis_index) = 1.0;
    p(basis_index, 0) = 1.0;
  }
  return p;
}

UioOperator build_uio(int system_dim, const std::vector<int>& ancilla_dims) {
  if (system_dim < 2) fail(Error::Kind::DimensionMismatch, "system dimension must be >= 2");
  if (ancilla_dims.empty())
    fail(Error::Kind::DimensionMismatch, "at least one ancilla is required");
  long a_total = 1;
  for (int d : ancilla_dims) {
    if (d < system_dim)
      fail(Error::Kind::AncillaTooSmall, "ancilla dimension below the system dimension");
    a_total *= d;
  }

  Mat u = Mat::Zero(system_dim * a_total, system_dim * a_total);
  for (int i = 0; i < system_dim; ++i) {
    Mat block = Mat::Identity(1, 1);
    for (int d : ancilla_dims) {
      const Mat sigma = permutation_operator(i, d);
      Mat next = Mat::Zero(block.rows() * d, block.cols() * d);
      for (long r = 0; r < block.rows(); ++r)
        for (long c = 0; c < block.cols(); ++c)
          next.block(r * d, c * d, d, d) = block(r, c) * sigma;
      block = std::move(next);
    }
    // system party is the most significant digit, so |i><i| (x) block is
    // the i-th diagonal block
    u.block(static_cast<long>(i) * a_total, static_cast<long>(i) * a_total, a_total, a_total) =
        block;
  }
  return UioOperator{system_dim, ancilla_dims, std::move(u)};
}

DensityMatrix convert(const DensityMatrix& rho, int n_parties) {
  if (n_parties < 2) fail(Error::Kind::InvalidParameter, "need at least two parties");
  const int d = static_cast<int>(rho.mat.rows());
  const std::vector<int> ancillas(static_cast<std::size_t>(n_parties - 1), d);
  const UioOperator u = build_uio(d, ancillas);

  long a_total = 1;
  for (int a : ancillas) a_total *= a;
  Mat input = Mat::Zero(d * a_total, d * a_total);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      input(static_cast<long>(i) * a_total, static_cast<long>(j) * a_total) = rho.mat(i, j);

  Mat out = u.matrix * input * u.matrix.adjoint();
  std::vector<int> dims(static_cast<std::size_t>(n_parties), d);
  return validate_density_matrix(out, dims);
}

PureState convert(const PureState& psi, int n_parties) {
  if (n_parties < 2) fail(Error::Kind::InvalidParameter, "need at least two parties");
  const int d = static_cast<int>(psi.amps.size());
  const std::vector<int> ancillas(static_cast<std::size_t>(n_parties - 1), d);
  const UioOperator u = build_uio(d, ancillas);

  long a_total = 1;
  for (int a : ancillas) a_total *= a;
  Vec input = Vec::Zero(d * a_total);
  for (int i = 0; i < d; ++i) input(static_cast<long>(i) * a_total) = psi.amps(i);

  std::vector<int> dims(static_cast<std::size_t>(n_parties), d);
  return make_pure_state(dims, u.matrix * input);
}

std::string to_string(Method m) {
  return m == Method::ClosedForm ? "closed_form" : "roof";
}

Theorem3Report check_theorem3(const DensityMatrix& rho, const ConcaveFunction& f,
                              int n_parties, const RoofConfig& cfg) {
  Theorem3Report report;
  const std::optional<PureState> psi_opt = as_pure_state(rho);

  if (psi_opt) {
    const PureState& psi = *psi_opt;
    const PureState converted = convert(psi, n_parties);
    report.coherence = coherence_pure(f, psi);
    report.coherence_method = Method::ClosedForm;
    report.e_min = e_min_gme_pure(f, converted);
    report.e_min_method = Method::ClosedForm;
    report.g_geo = g_geo_gme_pure(f, converted);
    report.g_geo_method = Method::ClosedForm;
  } else {
    const DensityMatrix converted = convert(rho, n_parties);
    report.coherence = convex_roof(PureMeasure::coherence(f), rho, cfg).value;
    report.coherence_method = Method::Roof;
    if (f.kind == ConcaveFunction::Kind::Concurrence &&
        is_diagonal_correlation_state(converted)) {
      report.e_min = xstate_gme_concurrence(converted);
      report.e_min_method = Method::ClosedForm;
    } else {
      report.e_min = convex_roof(PureMeasure::e_min_gme(f), converted, cfg).value;
      report.e_min_method = Method::Roof;
    }
    report.g_geo = convex_roof(PureMeasure::g_geo_gme(f), converted, cfg).value;
    report.g_geo_method = Method::Roof;
  }

  const double d1 = std::abs(report.coherence - report.e_min);
  const double d2 = std::abs(report.coherence - report.g_geo);
  const double d3 = std::abs(report.e_min - report.g_geo);
  report.max_discrepancy = std::max({d1, d2, d3});
  return report;
}

}  // namespace gmec
