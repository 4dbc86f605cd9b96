#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "gmec/error.hpp"

namespace gmec {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Validation tolerances are fixed, not configurable, so results and test
// expectations agree everywhere.
inline constexpr double kValidationTol = 1e-10;
inline constexpr double kSimplexTol = 1e-9;
inline constexpr double kEigenvalueClamp = 1e-12;
inline constexpr double kReconstructTol = 1e-8;

// Product of subsystem dimensions; every entry must be >= 2.
long total_dim(const std::vector<int>& dims);

// Normalized complex amplitude vector over an ordered list of subsystem
// dimensions. Parties are numbered 1..N; the computational basis is
// big-endian (party 1 is the most significant digit).
struct PureState {
  std::vector<int> dims;
  Vec amps;
};

// Validates norm and length; never repairs.
PureState make_pure_state(std::vector<int> dims, Vec amps);

// Hermitian, positive-semidefinite, unit-trace matrix over subsystem dims.
struct DensityMatrix {
  std::vector<int> dims;
  Mat mat;
};

// Returns the validated state or throws (DimensionMismatch, NotHermitian,
// NotPositive, TraceNotOne); never silently repairs.
DensityMatrix validate_density_matrix(const Mat& m, std::vector<int> dims);

DensityMatrix pure_to_density(const PureState& psi);

// Nonempty proper subset of the party set {1..N}. Canonical form contains
// party 1 so each unordered split is stored exactly once.
struct Bipartition {
  std::vector<int> gamma;  // sorted, 1-based, contains 1
  int n_parties = 0;
};

// Sorts, deduplicates and canonicalizes (replaces gamma by its complement
// when party 1 is absent).
Bipartition make_bipartition(std::vector<int> gamma, int n_parties);

std::vector<int> complement_parties(const Bipartition& b);

// Pure-state ensemble {p_j, |psi_j>}.
struct Decomposition {
  std::vector<double> weights;
  std::vector<PureState> states;
};

// Sum_j p_j |psi_j><psi_j| as a DensityMatrix.
DensityMatrix mix(const Decomposition& dec);

}  // namespace gmec
