#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gmec/measures.hpp"
#include "gmec/state.hpp"

namespace gmec {

// Pure-state functional minimized by the roof: a concave function bound to
// one of the four measure shapes.
struct PureMeasure {
  enum class Kind { Coherence, EGamma, EMinGme, GGeoGme };

  Kind kind = Kind::Coherence;
  ConcaveFunction f;
  std::optional<Bipartition> gamma;  // EGamma only

  double operator()(const PureState& psi) const;

  static PureMeasure coherence(ConcaveFunction f) { return {Kind::Coherence, f, {}}; }
  static PureMeasure e_gamma(ConcaveFunction f, Bipartition g) {
    return {Kind::EGamma, f, std::move(g)};
  }
  static PureMeasure e_min_gme(ConcaveFunction f) { return {Kind::EMinGme, f, {}}; }
  static PureMeasure g_geo_gme(ConcaveFunction f) { return {Kind::GGeoGme, f, {}}; }
};

struct RoofConfig {
  int ensemble_size = 0;     // 0: rank^2, capped at 16
  int restarts = 16;
  int max_iterations = 2000; // per restart
  double tolerance = 1e-6;   // objective convergence tolerance
  std::uint64_t seed = 0;
};

// The reported value is an upper bound on the true roof: it is the exact
// ensemble average of the reported decomposition.
struct RoofResult {
  double value = 0.0;
  Decomposition decomposition;
  bool converged = false;
  int best_restart = -1;
  std::vector<double> restart_values;
};

// Ensemble {p_j, |psi_j>} built from an m x r isometry applied to the
// weighted eigenvectors of rho: sqrt(p_j)|psi_j> = sum_k V_jk sqrt(l_k)|e_k>.
// Members with weight below 1e-14 are dropped.
Decomposition decomposition_from_isometry(const DensityMatrix& rho, const Mat& v);

// Multistart derivative-free minimization of the ensemble average over the
// isometry manifold (V = first r columns of exp(A), A anti-Hermitian with
// zero diagonal; parameters are the real and imaginary parts of the strict
// upper triangle). Restart 0 starts at A = 0, the eigendecomposition itself.
RoofResult convex_roof(const PureMeasure& measure, const DensityMatrix& rho,
                       const RoofConfig& cfg);

// Independent oracle for rank <= 2 states of dimension <= 4: dense scans
// over explicitly gridded 2-, 3- and 4-member decompositions. The
// resolution controls the exhaustive two-member grid; the larger families
// use coarser derived grids.
double brute_force_roof(const PureMeasure& measure, const DensityMatrix& rho,
                        int grid_resolution);

}  // namespace gmec
