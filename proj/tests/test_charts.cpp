#include "doctest.h"

#include <random>

#include "qig/charts.hpp"

using namespace qig;

TEST_CASE("Pauli and Gell-Mann bases") {
  for (int j = 1; j <= 3; ++j) {
    const ComplexMatrix& s = pauli(j);
    CHECK(std::abs(s.trace()) < 1e-15);
    CHECK((s - s.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
  }
  // sigma_1 sigma_2 = i sigma_3
  CHECK((pauli(1) * pauli(2) - Complex(0, 1) * pauli(3)).cwiseAbs().maxCoeff() <
        1e-15);
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      double expected = (a == b) ? 2.0 : 0.0;
      CHECK(std::abs((gell_mann(a) * gell_mann(b)).trace().real() - expected) <
            1e-14);
    }
    CHECK(std::abs(gell_mann(a).trace()) < 1e-14);
  }
  // [lambda_1, lambda_2] = 2 i lambda_3
  CHECK((gell_mann(1) * gell_mann(2) - gell_mann(2) * gell_mann(1) -
         Complex(0, 2) * gell_mann(3)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("generalized basis normalization for N=4") {
  auto basis = su_basis(4);
  CHECK(basis.size() == 15);
  for (size_t a = 0; a < basis.size(); ++a) {
    CHECK(std::abs(basis[a].trace()) < 1e-14);
    CHECK((basis[a] - basis[a].adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    for (size_t b = 0; b < basis.size(); ++b) {
      double expected = (a == b) ? 2.0 : 0.0;
      CHECK(std::abs((basis[a] * basis[b]).trace().real() - expected) < 1e-13);
    }
  }
}

TEST_CASE("su_n_exponential unitarity and special values") {
  RealVector t = RealVector::Zero(3);
  CHECK((su_n_exponential(t, 2) - ComplexMatrix::Identity(2, 2))
            .cwiseAbs().maxCoeff() < 1e-15);
  // exp(i (pi/2) sigma_1) = i sigma_1
  t << M_PI / 2, 0, 0;
  CHECK((su_n_exponential(t, 2) - Complex(0, 1) * pauli(1))
            .cwiseAbs().maxCoeff() < 1e-12);

  std::mt19937 rng(3);
  std::normal_distribution<double> n;
  for (int dim : {2, 3}) {
    int cnt = su_generator_count(dim);
    RealVector v(cnt);
    for (int i = 0; i < cnt; ++i) v(i) = n(rng);
    ComplexMatrix u = su_n_exponential(v, dim);
    CHECK((u.adjoint() * u - ComplexMatrix::Identity(dim, dim))
              .cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(u.determinant() - Complex(1, 0)) < 1e-12);
  }
}

TEST_CASE("qubit_state examples") {
  DensityMatrix max = qubit_state(0.0, 0.3, 1.2);
  CHECK((max.matrix() - 0.5 * ComplexMatrix::Identity(2, 2))
            .cwiseAbs().maxCoeff() < 1e-14);

  DensityMatrix z = qubit_state(0.6, 0.0, 0.0);
  CHECK(z.matrix()(0, 0).real() == doctest::Approx(0.8));
  CHECK(z.matrix()(1, 1).real() == doctest::Approx(0.2));

  DensityMatrix x = qubit_state(0.6, M_PI / 2, 0.0);
  CHECK(x.matrix()(0, 1).real() == doctest::Approx(0.3));
  auto sd = eigendecompose_hermitian(x.matrix());
  CHECK(sd.eigenvalues(0) == doctest::Approx(0.8));
  CHECK(sd.eigenvalues(1) == doctest::Approx(0.2));
}

TEST_CASE("qutrit_state spectrum is the simplex point") {
  ProbabilityVector k({0.5, 0.3, 0.2});
  RealVector t(8);
  t << 0.1, -0.4, 0.2, 0.9, -0.2, 0.3, 0.05, -0.6;
  DensityMatrix rho = qutrit_state(k, t);
  auto sd = eigendecompose_hermitian(rho.matrix());
  CHECK(sd.eigenvalues(0) == doctest::Approx(0.5));
  CHECK(sd.eigenvalues(1) == doctest::Approx(0.3));
  CHECK(sd.eigenvalues(2) == doctest::Approx(0.2));
  CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));
}

TEST_CASE("chart consistency between polar and exponential qubit charts") {
  Chart polar = qubit_polar_chart();
  Chart expc = qubit_exp_chart();
  CHECK(polar.dim == 3);
  CHECK(expc.dim == 4);
  CHECK(polar.coframe_labels.size() == 3);
  CHECK(expc.coframe_labels.size() == 4);

  // At t = 0 the exponential chart is the diagonal state, which is the
  // polar chart at theta = 0.
  RealVector xe(4);
  xe << 0.6, 0.0, 0.0, 0.0;
  RealVector xp(3);
  xp << 0.6, kChartMargin, 0.0;
  DensityMatrix a = expc.to_state(xe);
  DensityMatrix b = polar.to_state(xp);
  CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() < 1e-5);

  // Both charts hit the same spectrum anywhere.
  xe << 0.6, 0.3, -0.2, 0.7;
  DensityMatrix c = expc.to_state(xe);
  auto sd = eigendecompose_hermitian(c.matrix());
  CHECK(sd.eigenvalues(0) == doctest::Approx(0.8));
  CHECK(sd.eigenvalues(1) == doctest::Approx(0.2));
}

TEST_CASE("chart domain checks") {
  Chart polar = qubit_polar_chart();
  RealVector x(3);
  x << 0.5, 1.0, 1.0;
  CHECK(polar.domain_check(x));
  x << 1.0, 1.0, 1.0;
  CHECK_FALSE(polar.domain_check(x));
  x << 0.5, 0.0, 1.0;
  CHECK_FALSE(polar.domain_check(x));

  Chart sx = simplex_chart(3);
  CHECK(sx.dim == 2);
  RealVector k(2);
  k << 0.5, 0.3;
  CHECK(sx.domain_check(k));
  DensityMatrix d = sx.to_state(k);
  CHECK(d.matrix()(2, 2).real() == doctest::Approx(0.2));
  k << 0.7, 0.4;
  CHECK_FALSE(sx.domain_check(k));

  Chart qe = qutrit_exp_chart();
  CHECK(qe.dim == 10);
  RealVector y = RealVector::Zero(10);
  y(0) = 0.5;
  y(1) = 0.3;
  CHECK(qe.domain_check(y));
  DensityMatrix rho = qe.to_state(y);
  CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.5));
  CHECK(rho.matrix()(2, 2).real() == doctest::Approx(0.2));
}
