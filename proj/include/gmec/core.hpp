#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gmec/state.hpp"

namespace gmec {

// Kronecker product; dims are concatenated.
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);
PureState tensor_product(const PureState& a, const PureState& b);

// Reduced state on the kept parties (1-based indices); trace preserving.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Eigenvalues of the reduced state on gamma, sorted descending, clamped at
// kEigenvalueClamp, renormalized, and truncated to the smaller bipartite
// dimension.
Eigen::VectorXd schmidt_vector(const PureState& psi, const Bipartition& gamma);

// All canonical bipartitions of {1..n}; count is 2^(n-1) - 1. The order is
// deterministic and defines tie-breaking wherever an arg-min is reported.
std::vector<Bipartition> enumerate_bipartitions(int n_parties);

// Haar-random pure state: independent standard complex Gaussians, normalized.
PureState random_pure_state(const std::vector<int>& dims, std::mt19937_64& rng);
PureState random_pure_state(const std::vector<int>& dims, std::uint64_t seed);

// Normalized G G^dag with G a (prod dims) x rank complex Gaussian matrix.
DensityMatrix random_density_matrix(const std::vector<int>& dims, int rank,
                                    std::mt19937_64& rng);
DensityMatrix random_density_matrix(const std::vector<int>& dims, int rank,
                                    std::uint64_t seed);

// Haar-random unitary (QR of a Ginibre matrix with phase fix).
Mat random_unitary(int dim, std::mt19937_64& rng);

// Top eigenvector when the state is numerically rank one (a single
// eigenvalue above kEigenvalueClamp), empty otherwise.
std::optional<PureState> as_pure_state(const DensityMatrix& rho);

// Deterministic substream derivation for seeded multistart / sweep cells.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace gmec
