#include "qig/divergences.hpp"

#include <cmath>

namespace qig {

namespace {

RealVector diagonal_probabilities(const DensityMatrix& rho) {
  return rho.matrix().diagonal().real();
}

}  // namespace

double shannon_relative(const ProbabilityVector& p,
                        const ProbabilityVector& r) {
  double s = 0.0;
  for (int j = 0; j < p.dim(); ++j) {
    if (p[j] <= 0.0) continue;
    if (r[j] <= 0.0)
      throw SupportMismatch("r vanishes where p > 0 (entry " +
                            std::to_string(j) + ")");
    s += p[j] * (std::log(p[j]) - std::log(r[j]));
  }
  return s;
}

double hellinger_potential(const ProbabilityVector& p,
                           const ProbabilityVector& r) {
  double bc = 0.0;
  for (int j = 0; j < p.dim(); ++j) bc += std::sqrt(p[j] * r[j]);
  return 4.0 * (1.0 - bc);
}

double von_neumann_relative(const DensityMatrix& rho,
                            const DensityMatrix& sigma) {
  // Tr rho log rho over the support of rho (0 log 0 = 0); only a singular
  // second argument is an error.
  SpectralDecomposition d = eigendecompose_hermitian(rho.matrix());
  double entropy_term = 0.0;
  for (int i = 0; i < d.eigenvalues.size(); ++i) {
    double lam = d.eigenvalues(i);
    if (lam > 0.0) entropy_term += lam * std::log(lam);
  }
  return entropy_term - (rho.matrix() * matrix_log(sigma)).trace().real();
}

double quantum_tsallis(const DensityMatrix& rho, const DensityMatrix& sigma,
                       double q) {
  if (std::abs(q - 1.0) < kQLimitWindow) return von_neumann_relative(rho, sigma);
  if (std::abs(q) < kQLimitWindow) return von_neumann_relative(sigma, rho);
  if (q <= 0.0 || q >= 1.0)
    throw BadParameter("q must lie in (0,1); got " + std::to_string(q));
  double overlap =
      (matrix_power(rho, q) * matrix_power(sigma, 1.0 - q)).trace().real();
  return (1.0 - overlap) / (q * (1.0 - q));
}

double product_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  // spec(rho sigma) = spec(sqrt(sigma) rho sqrt(sigma)), which is Hermitian
  // PSD, so the principal square root is along a real spectrum.
  ComplexMatrix sqs = matrix_power(sigma, 0.5);
  ComplexMatrix prod = sqs * rho.matrix() * sqs;
  SpectralDecomposition d = eigendecompose_hermitian(prod);
  double fid = 0.0;
  for (int i = 0; i < d.eigenvalues.size(); ++i) {
    double lam = d.eigenvalues(i);
    if (lam < -1e-10)
      throw NumericalSpectrum("product eigenvalue " + std::to_string(lam));
    fid += std::sqrt(std::max(lam, 0.0));
  }
  return fid;
}

double half_half_divergence(const DensityMatrix& rho,
                            const DensityMatrix& sigma) {
  return 1.0 - product_fidelity(rho, sigma);
}

double classical_tsallis(const ProbabilityVector& p, const ProbabilityVector& r,
                         double q) {
  return quantum_tsallis(p.to_state(), r.to_state(), q);
}

Divergence Divergence::make(DivergenceKind kind, double q) {
  Divergence d;
  d.kind = kind;
  d.q = q;
  switch (kind) {
    case DivergenceKind::ClassicalShannonRelative:
      d.evaluate = [](const DensityMatrix& a, const DensityMatrix& b) {
        return shannon_relative(ProbabilityVector(diagonal_probabilities(a)),
                                ProbabilityVector(diagonal_probabilities(b)));
      };
      break;
    case DivergenceKind::ClassicalHellinger:
      d.evaluate = [](const DensityMatrix& a, const DensityMatrix& b) {
        return hellinger_potential(ProbabilityVector(diagonal_probabilities(a)),
                                   ProbabilityVector(diagonal_probabilities(b)));
      };
      break;
    case DivergenceKind::ClassicalTsallis:
      d.evaluate = [q](const DensityMatrix& a, const DensityMatrix& b) {
        return classical_tsallis(ProbabilityVector(diagonal_probabilities(a)),
                                 ProbabilityVector(diagonal_probabilities(b)),
                                 q);
      };
      break;
    case DivergenceKind::QuantumTsallisRescaled:
      d.evaluate = [q](const DensityMatrix& a, const DensityMatrix& b) {
        return quantum_tsallis(a, b, q);
      };
      break;
    case DivergenceKind::QuantumVonNeumannRelative:
      d.evaluate = [](const DensityMatrix& a, const DensityMatrix& b) {
        return von_neumann_relative(a, b);
      };
      break;
    case DivergenceKind::QuantumHalfHalf:
      d.evaluate = [](const DensityMatrix& a, const DensityMatrix& b) {
        return half_half_divergence(a, b);
      };
      break;
  }
  return d;
}

}  // namespace qig
