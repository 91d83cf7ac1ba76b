#pragma once

// Two-point potential (divergence) functions, classical and quantum.
// All evaluators vanish on the diagonal and are non-negative on valid
// state pairs.

#include <functional>

#include "qig/hermitian.hpp"

namespace qig {

enum class DivergenceKind {
  ClassicalShannonRelative,
  ClassicalHellinger,
  ClassicalTsallis,
  QuantumTsallisRescaled,
  QuantumVonNeumannRelative,
  QuantumHalfHalf,
};

// Dispatch window around the endpoint values of q; (q(1-q))^-1 amplifies
// roundoff near 0 and 1, the von Neumann forms are used instead.
inline constexpr double kQLimitWindow = 1e-8;

// Sum_j p_j (ln p_j - ln r_j); requires r > 0 wherever p > 0.
double shannon_relative(const ProbabilityVector& p, const ProbabilityVector& r);

// 4 (1 - Sum_j sqrt(p_j r_j)), values in [0, 4].
double hellinger_potential(const ProbabilityVector& p,
                           const ProbabilityVector& r);

// Rescaled quantum Tsallis divergence (1 - Tr rho^q sigma^(1-q)) / (q(1-q)),
// symmetric under (rho,sigma,q) <-> (sigma,rho,1-q). q within kQLimitWindow
// of 0 or 1 dispatches to the von Neumann forms.
double quantum_tsallis(const DensityMatrix& rho, const DensityMatrix& sigma,
                       double q);

// Tr rho (ln rho - ln sigma); sigma full rank.
double von_neumann_relative(const DensityMatrix& rho,
                            const DensityMatrix& sigma);

// 1 - Tr sqrt(rho sigma). Note: the square root is of the *product*; this is
// not the common fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)), which happens
// to coincide only in special cases (e.g. commuting pairs).
double half_half_divergence(const DensityMatrix& rho,
                            const DensityMatrix& sigma);

// Tr sqrt(rho sigma), the paper-literal fidelity companion of the above.
double product_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// Classical Tsallis divergence; equals the quantum one on diag embeddings.
double classical_tsallis(const ProbabilityVector& p, const ProbabilityVector& r,
                         double q);

// A divergence as a value: kind + parameter + state-pair evaluator.
// Classical kinds act on the diagonals of the supplied states, so they can
// be driven through simplex charts uniformly.
struct Divergence {
  DivergenceKind kind;
  double q = 0.5;
  std::function<double(const DensityMatrix&, const DensityMatrix&)> evaluate;

  static Divergence make(DivergenceKind kind, double q = 0.5);
};

}  // namespace qig
