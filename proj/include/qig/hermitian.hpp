#pragma once

// Exact-ish numerics for small complex Hermitian matrices: spectral
// decomposition, functional calculus and density-matrix validation.

#include "qig/types.hpp"

namespace qig {

inline constexpr double kHermTol = 1e-10;
inline constexpr double kStateTol = 1e-12;
inline constexpr double kRankTol = 1e-12;

struct SpectralDecomposition {
  RealVector eigenvalues;    // descending
  ComplexMatrix eigenvectors;  // columns, orthonormal
};

class DensityMatrix {
 public:
  // Validates Hermiticity, unit trace and positivity; throws NotAState.
  explicit DensityMatrix(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  ComplexMatrix m_;
};

// Probability vector: non-negative entries summing to 1 (tolerance 1e-12).
class ProbabilityVector {
 public:
  explicit ProbabilityVector(const RealVector& p);
  ProbabilityVector(std::initializer_list<double> p)
      : ProbabilityVector(RealVector(Eigen::Map<const RealVector>(
            std::data(p), static_cast<Eigen::Index>(p.size())))) {}

  const RealVector& entries() const { return p_; }
  int dim() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_(i); }

  DensityMatrix to_state() const;  // diag(p) embedding

 private:
  RealVector p_;
};

// Spectral decomposition of a Hermitian matrix; symmetrizes 1e-14-level
// asymmetry, throws NotHermitian beyond tolerance.
SpectralDecomposition eigendecompose_hermitian(const ComplexMatrix& m);

// rho^s by functional calculus. Eigenvalues are clamped below at 0 before
// powering; s < 0 requires full rank (SingularPower otherwise).
ComplexMatrix matrix_power(const DensityMatrix& rho, double s);

// ln(rho); full rank required (SingularLog otherwise).
ComplexMatrix matrix_log(const DensityMatrix& rho);

// Typed validation of an arbitrary complex matrix as a quantum state.
DensityMatrix validate_density(const ComplexMatrix& m);

double min_eigenvalue(const DensityMatrix& rho);

}  // namespace qig
