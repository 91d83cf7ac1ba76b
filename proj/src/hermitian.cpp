#include "qig/hermitian.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace qig {

namespace {

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : m_(m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw NotAState("density matrix must be square, dim >= 1");
  double herm = hermiticity_defect(m);
  if (herm > kStateTol)
    throw NotAState("not Hermitian: defect " + std::to_string(herm));
  m_ = 0.5 * (m + m.adjoint());
  double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > kStateTol)
    throw NotAState("trace != 1: " + std::to_string(tr));
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m_, Eigen::EigenvaluesOnly);
  double lmin = es.eigenvalues().minCoeff();
  if (lmin < -kStateTol)
    throw NotAState("negative eigenvalue " + std::to_string(lmin));
}

ProbabilityVector::ProbabilityVector(const RealVector& p) : p_(p) {
  if (p.size() < 1) throw NotAState("empty probability vector");
  if (p.minCoeff() < -kStateTol)
    throw NotAState("negative probability " + std::to_string(p.minCoeff()));
  if (std::abs(p.sum() - 1.0) > kStateTol)
    throw NotAState("probabilities sum to " + std::to_string(p.sum()));
}

DensityMatrix ProbabilityVector::to_state() const {
  ComplexMatrix m = ComplexMatrix::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) m(i, i) = p_(i);
  return DensityMatrix(m);
}

SpectralDecomposition eigendecompose_hermitian(const ComplexMatrix& m) {
  double herm = hermiticity_defect(m);
  if (herm > kHermTol)
    throw NotHermitian("Hermiticity defect " + std::to_string(herm));
  // Symmetrize: FD-perturbed charts produce 1e-14 asymmetry.
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success)
    throw Error("eigendecomposition did not converge");
  // Eigen returns ascending order; the contract is descending.
  const int n = static_cast<int>(h.rows());
  SpectralDecomposition d;
  d.eigenvalues = es.eigenvalues().reverse();
  d.eigenvectors = ComplexMatrix(n, n);
  for (int i = 0; i < n; ++i)
    d.eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i);
  return d;
}

ComplexMatrix matrix_power(const DensityMatrix& rho, double s) {
  SpectralDecomposition d = eigendecompose_hermitian(rho.matrix());
  const int n = rho.dim();
  RealVector lam = d.eigenvalues.cwiseMax(0.0);
  if (s < 0.0 && lam.minCoeff() <= kRankTol)
    throw SingularPower("negative power of rank-deficient state");
  RealVector powed(n);
  for (int i = 0; i < n; ++i)
    powed(i) = (lam(i) == 0.0 && s > 0.0) ? 0.0 : std::pow(lam(i), s);
  return d.eigenvectors * powed.asDiagonal() * d.eigenvectors.adjoint();
}

ComplexMatrix matrix_log(const DensityMatrix& rho) {
  SpectralDecomposition d = eigendecompose_hermitian(rho.matrix());
  if (d.eigenvalues.minCoeff() <= kRankTol)
    throw SingularLog("log of rank-deficient state");
  RealVector logged = d.eigenvalues.array().log();
  return d.eigenvectors * logged.asDiagonal() * d.eigenvectors.adjoint();
}

DensityMatrix validate_density(const ComplexMatrix& m) {
  return DensityMatrix(m);
}

double min_eigenvalue(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix(),
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace qig
