#include "doctest.h"

#include <random>

#include "qig/charts.hpp"
#include "qig/hermitian.hpp"

using namespace qig;

namespace {

DensityMatrix random_state(int dim, std::mt19937& rng) {
  std::normal_distribution<double> n;
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(n(rng), n(rng));
  ComplexMatrix m = g * g.adjoint();
  return DensityMatrix(m / m.trace());
}

}  // namespace

TEST_CASE("eigendecompose diagonal and Pauli matrices") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 0.8;
  d(1, 1) = 0.2;
  auto sd = eigendecompose_hermitian(d);
  CHECK(sd.eigenvalues(0) == doctest::Approx(0.8));
  CHECK(sd.eigenvalues(1) == doctest::Approx(0.2));
  CHECK((sd.eigenvectors.cwiseAbs() - RealMatrix::Identity(2, 2))
            .cwiseAbs().maxCoeff() < 1e-12);

  auto sx = eigendecompose_hermitian(pauli(1));
  CHECK(sx.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(sx.eigenvalues(1) == doctest::Approx(-1.0));

  // 1/2 (sigma0 + 0.6 sigma1): characteristic polynomial gives (0.8, 0.2).
  ComplexMatrix m = 0.5 * (ComplexMatrix::Identity(2, 2) + 0.6 * pauli(1));
  auto sm = eigendecompose_hermitian(m);
  CHECK(sm.eigenvalues(0) == doctest::Approx(0.8));
  CHECK(sm.eigenvalues(1) == doctest::Approx(0.2));
}

TEST_CASE("eigendecomposition invariants on random Hermitian matrices") {
  std::mt19937 rng(11);
  std::normal_distribution<double> n;
  for (int dim : {2, 3, 5}) {
    ComplexMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g(i, j) = Complex(n(rng), n(rng));
    ComplexMatrix h = 0.5 * (g + g.adjoint());
    auto sd = eigendecompose_hermitian(h);
    ComplexMatrix rec = sd.eigenvectors *
                        sd.eigenvalues.cast<Complex>().asDiagonal() *
                        sd.eigenvectors.adjoint();
    CHECK((rec - h).cwiseAbs().maxCoeff() < 1e-11);
    CHECK((sd.eigenvectors.adjoint() * sd.eigenvectors -
           ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-11);
    for (int i = 1; i < dim; ++i)
      CHECK(sd.eigenvalues(i - 1) >= sd.eigenvalues(i));
  }
}

TEST_CASE("eigendecompose rejects non-Hermitian input") {
  ComplexMatrix m{{1.0, 0.5}, {0.0, 1.0}};
  CHECK_THROWS_AS(eigendecompose_hermitian(m), NotHermitian);
}

TEST_CASE("matrix_power examples") {
  RealVector p(2);
  p << 0.8, 0.2;
  DensityMatrix rho = ProbabilityVector(p).to_state();

  ComplexMatrix id = matrix_power(rho, 1.0);
  CHECK((id - rho.matrix()).cwiseAbs().maxCoeff() < 1e-12);

  ComplexMatrix half = matrix_power(rho, 0.5);
  CHECK(half(0, 0).real() == doctest::Approx(0.894427).epsilon(1e-6));
  CHECK(half(1, 1).real() == doctest::Approx(0.447214).epsilon(1e-6));

  DensityMatrix one(ComplexMatrix::Constant(1, 1, 1.0));
  CHECK(matrix_power(one, 0.5)(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("matrix_power errors and clamping") {
  RealVector p(2);
  p << 1.0, 0.0;
  DensityMatrix pure = ProbabilityVector(p).to_state();
  CHECK_THROWS_AS(matrix_power(pure, -0.5), SingularPower);
  // 0^q := 0 for q in (0,1).
  ComplexMatrix r = matrix_power(pure, 0.5);
  CHECK(r(1, 1).real() == doctest::Approx(0.0));
  CHECK(r(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("matrix_log examples") {
  RealVector p(2);
  p << 0.5, 0.5;
  ComplexMatrix l = matrix_log(ProbabilityVector(p).to_state());
  CHECK(l(0, 0).real() == doctest::Approx(-std::log(2.0)));

  p << 0.8, 0.2;
  l = matrix_log(ProbabilityVector(p).to_state());
  CHECK(l(0, 0).real() == doctest::Approx(-0.223144).epsilon(1e-6));
  CHECK(l(1, 1).real() == doctest::Approx(-1.609438).epsilon(1e-6));

  p << 1.0, 0.0;
  CHECK_THROWS_AS(matrix_log(ProbabilityVector(p).to_state()), SingularLog);
}

TEST_CASE("validate_density examples") {
  CHECK_NOTHROW(validate_density(0.5 * ComplexMatrix::Identity(2, 2)));
  // 1/2 (sigma0 + 1.2 sigma3) has eigenvalues (1.1, -0.1).
  ComplexMatrix bad = 0.5 * (ComplexMatrix::Identity(2, 2) + 1.2 * pauli(3));
  CHECK_THROWS_AS(validate_density(bad), NotAState);
  // Bloch norm 1: pure state, eigenvalues (1, 0).
  ComplexMatrix pure = 0.5 * (ComplexMatrix::Identity(2, 2) + 0.6 * pauli(1) +
                              0.8 * pauli(3));
  DensityMatrix rho = validate_density(pure);
  CHECK(min_eigenvalue(rho) == doctest::Approx(0.0));
}

TEST_CASE("power composition and splitting properties") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    int dim = 2 + rep % 2;
    DensityMatrix rho = random_state(dim, rng);
    std::uniform_real_distribution<double> u(0.1, 0.9);
    double s = u(rng), t = u(rng), q = u(rng);

    DensityMatrix rs(matrix_power(rho, s) /
                     matrix_power(rho, s).trace().real());
    // power of a power: rescale back through the trace-normalized state.
    ComplexMatrix lhs = matrix_power(rho, s * t);
    ComplexMatrix via = matrix_power(rho, s);
    auto sd = eigendecompose_hermitian(via);
    RealVector powed = sd.eigenvalues.array().pow(t);
    ComplexMatrix rhs =
        sd.eigenvectors * powed.asDiagonal() * sd.eigenvectors.adjoint();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);

    CHECK((matrix_power(rho, q) * matrix_power(rho, 1.0 - q) - rho.matrix())
              .cwiseAbs().maxCoeff() < 1e-10);
    CHECK(matrix_power(rho, 1.0).trace().real() == doctest::Approx(1.0));

    ComplexMatrix lg = matrix_log(rho);
    auto se = eigendecompose_hermitian(lg);
    RealVector ex = se.eigenvalues.array().exp();
    ComplexMatrix back =
        se.eigenvectors * ex.asDiagonal() * se.eigenvectors.adjoint();
    CHECK((back - rho.matrix()).cwiseAbs().maxCoeff() < 1e-10);
  }
}
