#include "doctest.h"

#include <cstdlib>

#include "qig/geometry.hpp"
#include "qig/metrics.hpp"
#include "qig/oracle.hpp"

using namespace qig;

namespace {

RealVector vec(std::initializer_list<double> v) {
  RealVector x(static_cast<int>(v.size()));
  int i = 0;
  for (double d : v) x(i++) = d;
  return x;
}

}  // namespace

TEST_CASE("metric oracle reproduces Fisher-Rao from two potentials") {
  Chart sx = simplex_chart(2);
  FDScheme scheme;
  RealVector x = vec({0.5});

  auto sh = Divergence::make(DivergenceKind::ClassicalShannonRelative);
  MetricTensor g = metric_fd(sh, sx, x, scheme);
  CHECK(std::abs(g.components(0, 0) - 4.0) < 1e-6);

  auto he = Divergence::make(DivergenceKind::ClassicalHellinger);
  MetricTensor gh = metric_fd(he, sx, x, scheme);
  CHECK(std::abs(gh.components(0, 0) - 4.0) < 1e-6);

  Chart s3 = simplex_chart(3);
  RealVector k = vec({0.5, 0.3});
  MetricTensor g3 = metric_fd(sh, s3, k, scheme);
  MetricTensor closed = fisher_rao_simplex(ProbabilityVector(vec({0.5, 0.3, 0.2})));
  CHECK((g3.components - closed.components).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("metric oracle matches the qubit closed form in the exponential chart") {
  Chart chart = qubit_exp_chart();
  FDScheme scheme;
  auto d = Divergence::make(DivergenceKind::QuantumTsallisRescaled, 0.5);
  MetricTensor g = metric_fd(d, chart, vec({0.6, 0, 0, 0}), scheme);
  CHECK(std::abs(g.components(0, 0) - 1.5625) < 1e-5);
  CHECK(std::abs(g.components(1, 1) - 1.6) < 1e-5);
  CHECK(std::abs(g.components(2, 2) - 1.6) < 1e-5);
  CHECK(std::abs(g.components(3, 3)) < 1e-5);
}

TEST_CASE("domain margin enforcement") {
  Chart chart = qubit_polar_chart();
  FDScheme scheme;
  auto d = Divergence::make(DivergenceKind::QuantumTsallisRescaled, 0.5);
  CHECK_THROWS_AS(metric_fd(d, chart, vec({0.9995, 1.0, 1.0}), scheme),
                  DomainMargin);
}

TEST_CASE("step refinement converges second order until roundoff") {
  Chart chart = qubit_exp_chart();
  auto d = Divergence::make(DivergenceKind::QuantumTsallisRescaled, 0.35);
  double closed = qubit_metric(0.35, 0.7).components(1, 1);
  FDScheme coarse;
  coarse.h2 = 2e-2;
  FDScheme fine;
  fine.h2 = 1e-2;
  double ec = std::abs(
      metric_fd(d, chart, vec({0.7, 0, 0, 0}), coarse).components(1, 1) - closed);
  double ef = std::abs(
      metric_fd(d, chart, vec({0.7, 0, 0, 0}), fine).components(1, 1) - closed);
  CHECK(ec / ef >= 3.0);
}

TEST_CASE("connection oracle on classical potentials") {
  FDScheme scheme;
  Chart s3 = simplex_chart(3);
  RealVector k = vec({0.5, 0.3});

  auto sh = Divergence::make(DivergenceKind::ClassicalShannonRelative);
  auto c = connection_fd(sh, s3, k, scheme, Which::Primal);
  CHECK(c.gamma.max_abs() < 1e-3);

  // Hellinger in reduced coordinates: the full-coordinate form
  // Gamma_jkl = -delta delta / (2 p^2) picks up the eliminated-coordinate
  // term with opposite sign.
  Chart s2 = simplex_chart(2);
  auto he = Divergence::make(DivergenceKind::ClassicalHellinger);
  auto ch = connection_fd(he, s2, vec({0.6}), scheme, Which::Primal);
  double expected = -(0.5 / (0.6 * 0.6) - 0.5 / (0.4 * 0.4));
  CHECK(std::abs(ch.gamma(0, 0, 0) - expected) < 1e-3);
  // Hellinger is self-dual: the dual coefficients coincide.
  auto chd = connection_fd(he, s2, vec({0.6}), scheme, Which::Dual);
  CHECK(std::abs(ch.gamma(0, 0, 0) - chd.gamma(0, 0, 0)) < 1e-6);
}

TEST_CASE("connection oracle on the qubit polar chart") {
  FDScheme scheme;
  Chart chart = qubit_polar_chart();
  RealVector x = vec({0.5, 1.1, 0.7});
  auto d = Divergence::make(DivergenceKind::QuantumTsallisRescaled, 0.5);

  auto p = connection_fd(d, chart, x, scheme, Which::Primal);
  CHECK(std::abs(p.gamma(0, 0, 0) - 0.888889) < 1e-3);

  // Autodual at q = 1/2.
  auto du = connection_fd(d, chart, x, scheme, Which::Dual);
  for (int l = 0; l < 3; ++l)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(std::abs(p.gamma(l, j, k) - du.gamma(l, j, k)) < 1e-3);

  // Torsionless by construction, symmetric in the last two slots.
  for (int l = 0; l < 3; ++l)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(p.gamma(l, j, k) == doctest::Approx(p.gamma(l, k, j)));
}

TEST_CASE("skewness tensor") {
  FDScheme scheme;
  Chart chart = qubit_polar_chart();
  RealVector x = vec({0.5, 1.1, 0.7});

  auto half = Divergence::make(DivergenceKind::QuantumTsallisRescaled, 0.5);
  CHECK(skewness_fd(half, chart, x, scheme).max_abs() < 2e-3);

  auto d = Divergence::make(DivergenceKind::QuantumTsallisRescaled, 0.25);
  Rank3 t = skewness_fd(d, chart, x, scheme);
  // T_111 = Gamma_111 - Gamma*_111 = 2(1-2q) w/(1-w^2)^2.
  double expected = 2.0 * 0.5 * 0.5 / 0.5625;
  CHECK(std::abs(t(0, 0, 0) - expected) < 2e-3);
  // Full symmetry under index permutations.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        CHECK(std::abs(t(a, b, c) - t(b, a, c)) < 2e-3);
        CHECK(std::abs(t(a, b, c) - t(a, c, b)) < 2e-3);
      }
}

TEST_CASE("dual-connection duality identity") {
  // d_l g_jk = Gamma_{j,kl} + Gamma*_{k,jl} in chart coordinates.
  FDScheme scheme;
  Chart chart = qubit_polar_chart();
  RealVector x = vec({0.5, 1.1, 0.7});
  auto d = Divergence::make(DivergenceKind::QuantumTsallisRescaled, 0.3);
  TwoPointFn f = bind_divergence(d, chart);
  auto primal = connection_fd(f, chart, x, scheme, Which::Primal);
  auto dual = connection_fd(f, chart, x, scheme, Which::Dual);
  double h = scheme.h3;
  for (int l = 0; l < 3; ++l) {
    RealVector xp = x, xm = x;
    xp(l) += h;
    xm(l) -= h;
    RealMatrix gp = metric_fd(f, chart, xp, scheme).components;
    RealMatrix gm = metric_fd(f, chart, xm, scheme).components;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double dg = (gp(j, k) - gm(j, k)) / (2.0 * h);
        double sum = primal.gamma(j, k, l) + dual.gamma(k, j, l);
        CHECK(std::abs(dg - sum) < 1e-3);
      }
  }
}

TEST_CASE("flat connection gives zero curvature") {
  FDScheme scheme;
  Chart s3 = simplex_chart(3);
  auto sh = Divergence::make(DivergenceKind::ClassicalShannonRelative);
  auto r = curvature_fd(sh, s3, vec({0.4, 0.3}), scheme, Which::Primal);
  for (double v : r.components) CHECK(std::abs(v) < 1e-2);
  CHECK(std::abs(r.scalar) < 1e-2);
}

TEST_CASE("QIG_FD_STEP environment override") {
  setenv("QIG_FD_STEP", "5e-4,2e-2", 1);
  FDScheme s = default_scheme();
  CHECK(s.h2 == doctest::Approx(5e-4));
  CHECK(s.h3 == doctest::Approx(2e-2));
  unsetenv("QIG_FD_STEP");
  FDScheme d = default_scheme();
  CHECK(d.h2 == doctest::Approx(1e-3));
}
