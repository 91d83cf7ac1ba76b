#include "qig/charts.hpp"

#include <array>
#include <cmath>

namespace qig {

namespace {

const Complex I{0.0, 1.0};

std::array<ComplexMatrix, 3> make_pauli() {
  std::array<ComplexMatrix, 3> s;
  s[0] = ComplexMatrix{{0, 1}, {1, 0}};
  s[1] = ComplexMatrix{{0, -I}, {I, 0}};
  s[2] = ComplexMatrix{{1, 0}, {0, -1}};
  return s;
}

std::array<ComplexMatrix, 8> make_gell_mann() {
  std::array<ComplexMatrix, 8> l;
  for (auto& m : l) m = ComplexMatrix::Zero(3, 3);
  l[0](0, 1) = l[0](1, 0) = 1;
  l[1](0, 1) = -I; l[1](1, 0) = I;
  l[2](0, 0) = 1; l[2](1, 1) = -1;
  l[3](0, 2) = l[3](2, 0) = 1;
  l[4](0, 2) = -I; l[4](2, 0) = I;
  l[5](1, 2) = l[5](2, 1) = 1;
  l[6](1, 2) = -I; l[6](2, 1) = I;
  const double s3 = 1.0 / std::sqrt(3.0);
  l[7](0, 0) = s3; l[7](1, 1) = s3; l[7](2, 2) = -2.0 * s3;
  return l;
}

}  // namespace

const ComplexMatrix& pauli(int j) {
  static const auto s = make_pauli();
  return s.at(j - 1);
}

const ComplexMatrix& gell_mann(int j) {
  static const auto l = make_gell_mann();
  return l.at(j - 1);
}

const ComplexMatrix& su_generator(int dim, int a) {
  if (dim == 2) return pauli(a);
  if (dim == 3) return gell_mann(a);
  throw BadParameter("generator basis provided for dim 2 and 3 only");
}

int su_generator_count(int dim) { return dim * dim - 1; }

std::vector<ComplexMatrix> su_basis(int dim) {
  std::vector<ComplexMatrix> basis;
  if (dim == 2) {
    for (int j = 1; j <= 3; ++j) basis.push_back(pauli(j));
    return basis;
  }
  if (dim == 3) {
    for (int j = 1; j <= 8; ++j) basis.push_back(gell_mann(j));
    return basis;
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
      s(j, k) = s(k, j) = 1;
      basis.push_back(s);
      ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
      a(j, k) = -I;
      a(k, j) = I;
      basis.push_back(a);
    }
  }
  for (int l = 1; l < dim; ++l) {
    ComplexMatrix d = ComplexMatrix::Zero(dim, dim);
    const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) d(j, j) = norm;
    d(l, l) = -l * norm;
    basis.push_back(d);
  }
  return basis;
}

ComplexMatrix su_n_exponential(const RealVector& t, int dim) {
  const int n = su_generator_count(dim);
  if (t.size() != n)
    throw BadParameter("expected " + std::to_string(n) + " group coordinates");
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int a = 0; a < n; ++a) h += t(a) * su_generator(dim, a + 1);
  SpectralDecomposition d = eigendecompose_hermitian(h);
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i) phases(i) = std::exp(I * d.eigenvalues(i));
  return d.eigenvectors * phases.asDiagonal() * d.eigenvectors.adjoint();
}

DensityMatrix qubit_state(double w, double theta, double phi) {
  if (w < 0.0 || w > 1.0) throw OutOfDomain("w outside [0,1]");
  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);
  ComplexMatrix m = 0.5 * (ComplexMatrix::Identity(2, 2) +
                           w * (nx * pauli(1) + ny * pauli(2) + nz * pauli(3)));
  return DensityMatrix(m);
}

DensityMatrix qutrit_state(const ProbabilityVector& k, const RealVector& t) {
  if (k.dim() != 3) throw OutOfDomain("qutrit requires a 3-point spectrum");
  ComplexMatrix u = su_n_exponential(t, 3);
  ComplexMatrix rho0 = k.to_state().matrix();
  return DensityMatrix(u * rho0 * u.adjoint());
}

Chart qubit_polar_chart() {
  Chart c;
  c.name = "qubit-polar";
  c.dim = 3;
  c.coframe_labels = {"dw", "dtheta", "dphi"};
  c.domain_check = [](const RealVector& x) {
    return x.size() == 3 && x(0) > kChartMargin && x(0) < 1.0 - kChartMargin &&
           x(1) > kChartMargin && x(1) < M_PI - kChartMargin;
  };
  c.to_state = [](const RealVector& x) {
    return qubit_state(x(0), x(1), x(2));
  };
  return c;
}

Chart qubit_exp_chart() {
  Chart c;
  c.name = "qubit-exp";
  c.dim = 4;
  c.coframe_labels = {"dw", "theta1", "theta2", "theta3"};
  c.domain_check = [](const RealVector& x) {
    return x.size() == 4 && x(0) > kChartMargin && x(0) < 1.0 - kChartMargin;
  };
  c.to_state = [](const RealVector& x) {
    ComplexMatrix rho0 =
        0.5 * (ComplexMatrix::Identity(2, 2) + x(0) * pauli(3));
    ComplexMatrix u = su_n_exponential(x.tail(3), 2);
    return DensityMatrix(u * rho0 * u.adjoint());
  };
  return c;
}

Chart qutrit_exp_chart() {
  Chart c;
  c.name = "qutrit-exp";
  c.dim = 10;
  c.coframe_labels = {"dk1", "dk2", "theta1", "theta2", "theta3", "theta4",
                      "theta5", "theta6", "theta7", "theta8"};
  c.domain_check = [](const RealVector& x) {
    return x.size() == 10 && x(0) > kChartMargin && x(1) > kChartMargin &&
           x(0) + x(1) < 1.0 - kChartMargin;
  };
  c.to_state = [](const RealVector& x) {
    RealVector k(3);
    k << x(0), x(1), 1.0 - x(0) - x(1);
    return qutrit_state(ProbabilityVector(k), x.tail(8));
  };
  return c;
}

Chart simplex_chart(int n) {
  if (n < 2) throw BadParameter("simplex chart needs n >= 2");
  Chart c;
  c.name = "simplex-" + std::to_string(n);
  c.dim = n - 1;
  for (int i = 1; i < n; ++i) c.coframe_labels.push_back("dk" + std::to_string(i));
  c.domain_check = [n](const RealVector& x) {
    if (x.size() != n - 1) return false;
    if (x.minCoeff() <= kChartMargin) return false;
    return x.sum() < 1.0 - kChartMargin;
  };
  c.to_state = [n](const RealVector& x) {
    RealVector k(n);
    k.head(n - 1) = x;
    k(n - 1) = 1.0 - x.sum();
    return ProbabilityVector(k).to_state();
  };
  return c;
}

}  // namespace qig
