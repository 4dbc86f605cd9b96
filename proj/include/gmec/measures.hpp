#pragma once

#include <string>
#include <utility>

#include "gmec/core.hpp"
#include "gmec/state.hpp"

namespace gmec {

// Symmetric concave function on the probability simplex. All three kinds
// vanish exactly at the simplex vertices.
struct ConcaveFunction {
  enum class Kind { Concurrence, Gbc, Entropy };

  Kind kind = Kind::Concurrence;
  // Default for simplex-level evaluation; bipartition-level measures
  // override it with the smaller split dimension.
  int gbc_dmin = 2;

  static ConcaveFunction concurrence() { return {Kind::Concurrence, 2}; }
  static ConcaveFunction gbc(int d_min) { return {Kind::Gbc, d_min}; }
  static ConcaveFunction entropy() { return {Kind::Entropy, 2}; }
};

std::string to_string(ConcaveFunction::Kind kind);

// Entrywise squared moduli of the amplitudes.
Eigen::VectorXd coherence_vector(const PureState& psi);

// Value of the named function on a probability vector. Entries in
// [-kEigenvalueClamp, 0] are clamped to zero first; 0 log 0 = 0 and the
// entropy logarithm is base 2.
double eval_f(const ConcaveFunction& f, const Eigen::VectorXd& p);

// f applied to the coherence vector.
double coherence_pure(const ConcaveFunction& f, const PureState& psi);

// Sum of the moduli of the off-diagonal entries.
double l1_coherence(const DensityMatrix& rho);

// f of the Schmidt vector under gamma|complement. For the Gbc kind the
// smaller split dimension replaces the stored d_min.
double e_f_gamma_pure(const ConcaveFunction& f, const PureState& psi,
                      const Bipartition& gamma);

// Minimum of e_f_gamma_pure over all bipartitions; the argmin variant
// breaks ties by canonical enumeration order.
double e_min_gme_pure(const ConcaveFunction& f, const PureState& psi);
std::pair<double, Bipartition> e_min_gme_pure_argmin(const ConcaveFunction& f,
                                                     const PureState& psi);

// Piecewise binomial-sum normalization constant; equals the number of
// canonical bipartitions, 2^(n-1) - 1.
long long c_alpha(int n_parties);

// Geometric mean of e_f_gamma_pure over all bipartitions, evaluated in the
// log domain; zero as soon as any factor underflows.
double g_geo_gme_pure(const ConcaveFunction& f, const PureState& psi);

// True when all matrix entries outside the repeated-digit rows/columns
// |ii...i> are below tol.
bool is_diagonal_correlation_state(const DensityMatrix& rho,
                                   double tol = kEigenvalueClamp);

// Closed form for states supported on span{|ii...i>}: the off-diagonal
// modulus sum of the compressed d x d matrix.
double xstate_gme_concurrence(const DensityMatrix& rho);

}  // namespace gmec
