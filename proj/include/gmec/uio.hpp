#pragma once

#include <vector>

#include "gmec/convex_roof.hpp"
#include "gmec/state.hpp"

namespace gmec {

// Controlled-permutation unitary: on system basis state |i> every ancilla
// is permuted so that |0> goes to |i>. Columns contain exactly one nonzero
// entry, equal to 1, so the operator maps incoherent states to incoherent
// states.
struct UioOperator {
  int system_dim = 0;
  std::vector<int> ancilla_dims;
  Mat matrix;
};

// Identity for i = 0, otherwise the transposition swapping |0> and |i>.
Mat permutation_operator(int basis_index, int dim);

// Each ancilla dimension must be at least the system dimension.
UioOperator build_uio(int system_dim, const std::vector<int>& ancilla_dims);

// rho' = U (rho (x) |0><0|^(N-1)) U^dag, with the input treated as a single
// system over its full dimension and N-1 ancillas of the same dimension.
// The result lives on span{|ii...i>} and embeds rho entrywise.
DensityMatrix convert(const DensityMatrix& rho, int n_parties);
PureState convert(const PureState& psi, int n_parties);

enum class Method { ClosedForm, Roof };

std::string to_string(Method m);

struct Theorem3Report {
  double coherence = 0.0;
  Method coherence_method = Method::Roof;
  double e_min = 0.0;
  Method e_min_method = Method::Roof;
  double g_geo = 0.0;
  Method g_geo_method = Method::Roof;
  double max_discrepancy = 0.0;
};

// Computes the coherence of rho and the min/geo GME of the converted state
// and reports the largest pairwise difference. Exact paths are used where
// they exist (pure inputs; the diagonal-correlation closed form for the
// concurrence kind), the roof optimizer otherwise.
Theorem3Report check_theorem3(const DensityMatrix& rho, const ConcaveFunction& f,
                              int n_parties, const RoofConfig& cfg);

}  // namespace gmec
