#include "qig/metrics.hpp"

#include <cmath>

#include "qig/charts.hpp"

namespace qig {

namespace {

void require_interior(const ProbabilityVector& k) {
  if (k.entries().minCoeff() <= 0.0)
    throw OutOfDomain("simplex point not interior");
}

void require_q_open(double q) {
  if (q <= 0.0 || q >= 1.0)
    throw BadParameter("q must lie in (0,1); got " + std::to_string(q));
}

double a_coeff(double w, double s) { return std::pow(0.5 * (1.0 + w), s); }
double b_coeff(double w, double s) { return std::pow(0.5 * (1.0 - w), s); }

}  // namespace

MetricTensor fisher_rao_simplex(const ProbabilityVector& k) {
  require_interior(k);
  const int n = k.dim();
  MetricTensor g;
  g.q = 1.0;
  g.basepoint = k.entries().head(n - 1);
  g.components = RealMatrix::Constant(n - 1, n - 1, 1.0 / k[n - 1]);
  for (int i = 0; i < n - 1; ++i) {
    g.components(i, i) += 1.0 / k[i];
    g.coframe_labels.push_back("dk" + std::to_string(i + 1));
  }
  return g;
}

double tangential_pair_coefficient(double ka, double kb, double q) {
  require_q_open(q);
  return 2.0 * (std::pow(ka, q) - std::pow(kb, q)) *
         (std::pow(ka, 1.0 - q) - std::pow(kb, 1.0 - q)) / (q * (1.0 - q));
}

MetricTensor qubit_metric(double q, double w) {
  require_q_open(q);
  if (w <= 0.0 || w >= 1.0) throw OutOfDomain("w outside (0,1)");
  MetricTensor g;
  g.q = q;
  g.basepoint = RealVector::Constant(1, w);
  g.coframe_labels = {"dw", "theta1", "theta2", "theta3"};
  g.components = RealMatrix::Zero(4, 4);
  g.components(0, 0) = 1.0 / (1.0 - w * w);
  const double c = 2.0 * (a_coeff(w, q) - b_coeff(w, q)) *
                   (a_coeff(w, 1.0 - q) - b_coeff(w, 1.0 - q)) /
                   (q * (1.0 - q));
  g.components(1, 1) = g.components(2, 2) = c;
  return g;
}

MetricTensor qubit_metric_q1(double w) {
  if (w <= 0.0 || w >= 1.0) throw OutOfDomain("w outside (0,1)");
  MetricTensor g;
  g.q = 1.0;
  g.basepoint = RealVector::Constant(1, w);
  g.coframe_labels = {"dw", "theta1", "theta2", "theta3"};
  g.components = RealMatrix::Zero(4, 4);
  g.components(0, 0) = 1.0 / (1.0 - w * w);
  const double c = 2.0 * w * std::log((1.0 + w) / (1.0 - w));
  g.components(1, 1) = g.components(2, 2) = c;
  return g;
}

MetricTensor qutrit_metric(double q, const ProbabilityVector& k) {
  require_q_open(q);
  require_interior(k);
  if (k.dim() != 3) throw OutOfDomain("qutrit metric needs a 3-point spectrum");
  MetricTensor g;
  g.q = q;
  g.basepoint = k.entries();
  g.coframe_labels = {"dk1", "dk2", "theta1", "theta2", "theta3", "theta4",
                      "theta5", "theta6", "theta7", "theta8"};
  g.components = RealMatrix::Zero(10, 10);
  g.components.topLeftCorner(2, 2) = fisher_rao_simplex(k).components;
  const double c12 = tangential_pair_coefficient(k[0], k[1], q);
  const double c13 = tangential_pair_coefficient(k[0], k[2], q);
  const double c23 = tangential_pair_coefficient(k[1], k[2], q);
  g.components(2, 2) = g.components(3, 3) = c12;   // theta1, theta2
  g.components(5, 5) = g.components(6, 6) = c13;   // theta4, theta5
  g.components(7, 7) = g.components(8, 8) = c23;   // theta6, theta7
  return g;
}

MetricTensor radial_limit_metric(double q, int dim, Stratum stratum,
                                 const ProbabilityVector* k) {
  require_q_open(q);
  const double pure_c = 2.0 / (q * (1.0 - q));
  MetricTensor g;
  g.q = q;
  if (dim == 2) {
    if (stratum != Stratum::Pure)
      throw BadParameter("dim 2 has only the pure boundary stratum");
    g.coframe_labels = {"theta1", "theta2"};
    g.components = pure_c * RealMatrix::Identity(2, 2);
    return g;
  }
  if (dim != 3) throw BadParameter("radial limits provided for dim 2 and 3");
  if (stratum == Stratum::Pure) {
    g.coframe_labels = {"theta1", "theta2", "theta4", "theta5"};
    g.components = pure_c * RealMatrix::Identity(4, 4);
    return g;
  }
  if (!k || k->dim() != 2)
    throw BadParameter("rank-2 stratum needs a (k1,k2) spectrum");
  require_interior(*k);
  g.basepoint = k->entries();
  g.coframe_labels = {"theta1", "theta2", "theta4", "theta5", "theta6",
                      "theta7"};
  g.components = RealMatrix::Zero(6, 6);
  const double c12 = tangential_pair_coefficient((*k)[0], (*k)[1], q);
  g.components(0, 0) = g.components(1, 1) = c12;
  g.components(2, 2) = g.components(3, 3) = 2.0 * (*k)[0] / (q * (1.0 - q));
  g.components(4, 4) = g.components(5, 5) = 2.0 * (*k)[1] / (q * (1.0 - q));
  return g;
}

double MonotoneFunction::operator()(double t) const {
  if (t <= 0.0) throw BadParameter("monotone function defined for t > 0");
  if (t == 1.0) return 1.0;
  const double lt = std::log(t);
  if (q == 0.0 || q == 1.0) return (t - 1.0) / lt;
  // expm1 keeps the t -> 1 cancellation benign.
  return q * (1.0 - q) * (t - 1.0) * (t - 1.0) /
         (std::expm1(q * lt) * std::expm1((1.0 - q) * lt));
}

double MonotoneFunction::at_zero() const {
  if (q == 0.0 || q == 1.0) return 0.0;
  return q * (1.0 - q);
}

MonotoneFunction petz_f(double q) {
  if (q < 0.0 || q > 1.0) throw BadParameter("q outside [0,1]");
  return MonotoneFunction{q};
}

RealMatrix tangential_coefficients_general(const ProbabilityVector& k,
                                           double q) {
  require_q_open(q);
  require_interior(k);
  const int dim = k.dim();
  const auto basis = su_basis(dim);
  const int n = static_cast<int>(basis.size());
  ComplexMatrix dq = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix d1q = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    dq(i, i) = std::pow(k[i], q);
    d1q(i, i) = std::pow(k[i], 1.0 - q);
  }
  RealMatrix g(n, n);
  for (int a = 0; a < n; ++a) {
    ComplexMatrix ca = basis[a] * dq - dq * basis[a];
    for (int b = a; b < n; ++b) {
      ComplexMatrix cb = basis[b] * d1q - d1q * basis[b];
      g(a, b) = g(b, a) = -(ca * cb).trace().real() / (q * (1.0 - q));
    }
  }
  return g;
}

double qubit_petz_form(double q, double w) {
  if (w < 0.0 || w >= 1.0) throw OutOfDomain("w outside [0,1)");
  if (w == 0.0) return 0.0;
  return w * w / ((1.0 + w) * petz_f(q)((1.0 - w) / (1.0 + w)));
}

MetricTensor qubit_polar_metric(double q, double w, double theta) {
  MetricTensor g;
  g.q = q;
  g.basepoint = RealVector(3);
  g.basepoint << w, theta, 0.0;
  g.coframe_labels = {"dw", "dtheta", "dphi"};
  g.components = RealMatrix::Zero(3, 3);
  g.components(0, 0) = 1.0 / (1.0 - w * w);
  const double big_k = (q == 1.0)
                           ? 0.5 * w * std::log((1.0 + w) / (1.0 - w))
                           : (a_coeff(w, q) - b_coeff(w, q)) *
                                 (a_coeff(w, 1.0 - q) - b_coeff(w, 1.0 - q)) /
                                 (2.0 * q * (1.0 - q));
  g.components(1, 1) = big_k;
  g.components(2, 2) = big_k * std::sin(theta) * std::sin(theta);
  return g;
}

}  // namespace qig
