#include "qig/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace qig {

namespace {

RealVector shifted(const RealVector& x, int i, double h) {
  RealVector y = x;
  y(i) += h;
  return y;
}

void require_margin(const Chart& chart, const RealVector& x, double h) {
  if (!chart.domain_check(x))
    throw DomainMargin("basepoint outside chart domain of " + chart.name);
  for (int i = 0; i < chart.dim; ++i) {
    if (!chart.domain_check(shifted(x, i, h)) ||
        !chart.domain_check(shifted(x, i, -h)))
      throw DomainMargin("FD stencil leaves chart domain of " + chart.name);
  }
}

// d^2 F / dx_j dx_k at fixed y, central stencils.
double second_x(const TwoPointFn& f, const RealVector& x, const RealVector& y,
                int j, int k, double h) {
  if (j == k) {
    return (f(shifted(x, j, h), y) - 2.0 * f(x, y) + f(shifted(x, j, -h), y)) /
           (h * h);
  }
  return (f(shifted(shifted(x, j, h), k, h), y) -
          f(shifted(shifted(x, j, h), k, -h), y) -
          f(shifted(shifted(x, j, -h), k, h), y) +
          f(shifted(shifted(x, j, -h), k, -h), y)) /
         (4.0 * h * h);
}

}  // namespace

FDScheme default_scheme() {
  FDScheme s;
  if (const char* env = std::getenv("QIG_FD_STEP")) {
    std::string v(env);
    auto comma = v.find(',');
    try {
      s.h2 = std::stod(v.substr(0, comma));
      if (comma != std::string::npos) s.h3 = std::stod(v.substr(comma + 1));
      s.hgamma = s.h3;
    } catch (const std::exception&) {
      throw BadParameter("QIG_FD_STEP must be h2[,h3]");
    }
  }
  return s;
}

TwoPointFn bind_divergence(const Divergence& d, const Chart& chart) {
  return [d, &chart](const RealVector& x, const RealVector& y) {
    return d.evaluate(chart.to_state(x), chart.to_state(y));
  };
}

MetricTensor metric_fd(const TwoPointFn& f, const Chart& chart,
                       const RealVector& x, const FDScheme& scheme) {
  const double h = scheme.h2;
  require_margin(chart, x, 2.0 * h);
  const int n = chart.dim;
  RealMatrix raw(n, n);
  auto cross = [&f, &x](int j, int k, double hh) {
    return (f(shifted(x, j, hh), shifted(x, k, hh)) -
            f(shifted(x, j, hh), shifted(x, k, -hh)) -
            f(shifted(x, j, -hh), shifted(x, k, hh)) +
            f(shifted(x, j, -hh), shifted(x, k, -hh))) /
           (4.0 * hh * hh);
  };
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      // Richardson step-halving pair: O(h^4) truncation at base step h.
      double mixed = (4.0 * cross(j, k, h) - cross(j, k, 2.0 * h)) / 3.0;
      raw(j, k) = -mixed;
    }
  }
  MetricTensor g;
  g.components = 0.5 * (raw + raw.transpose());
  g.coframe_labels = chart.coframe_labels;
  g.basepoint = x;
  return g;
}

MetricTensor metric_fd(const Divergence& d, const Chart& chart,
                       const RealVector& x, const FDScheme& scheme) {
  MetricTensor g = metric_fd(bind_divergence(d, chart), chart, x, scheme);
  g.q = d.q;
  return g;
}

ConnectionCoefficients connection_fd(const TwoPointFn& f, const Chart& chart,
                                     const RealVector& x,
                                     const FDScheme& scheme, Which which) {
  const double h = scheme.h3;
  require_margin(chart, x, 3.0 * h);
  const int n = chart.dim;
  // Dual coefficients swap the roles of the left and right slots.
  TwoPointFn g = f;
  if (which == Which::Dual)
    g = [f](const RealVector& a, const RealVector& b) { return f(b, a); };
  ConnectionCoefficients c;
  c.which = which;
  c.basepoint = x;
  c.gamma = Rank3(n);
  for (int l = 0; l < n; ++l) {
    for (int j = 0; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        double plus = second_x(g, x, shifted(x, l, h), j, k, h);
        double minus = second_x(g, x, shifted(x, l, -h), j, k, h);
        double val = -(plus - minus) / (2.0 * h);
        c.gamma(l, j, k) = val;
        c.gamma(l, k, j) = val;
      }
    }
  }
  return c;
}

ConnectionCoefficients connection_fd(const Divergence& d, const Chart& chart,
                                     const RealVector& x,
                                     const FDScheme& scheme, Which which) {
  return connection_fd(bind_divergence(d, chart), chart, x, scheme, which);
}

Rank3 skewness_fd(const Divergence& d, const Chart& chart, const RealVector& x,
                  const FDScheme& scheme) {
  TwoPointFn f = bind_divergence(d, chart);
  ConnectionCoefficients primal =
      connection_fd(f, chart, x, scheme, Which::Primal);
  ConnectionCoefficients dual = connection_fd(f, chart, x, scheme, Which::Dual);
  Rank3 t(chart.dim);
  for (int l = 0; l < chart.dim; ++l)
    for (int j = 0; j < chart.dim; ++j)
      for (int k = 0; k < chart.dim; ++k)
        t(l, j, k) = primal.gamma(l, j, k) - dual.gamma(l, j, k);
  return t;
}

CurvatureResult curvature_from_connection(const ConnectionField& gamma,
                                          const MetricField& g,
                                          const RealVector& x, int dim,
                                          double h) {
  // Raised field G^k_{jl} = g^{ka} Gamma_{ajl}.
  auto raised = [&](const RealVector& p) {
    RealMatrix gm = g(p);
    Eigen::FullPivLU<RealMatrix> lu(gm);
    if (!lu.isInvertible())
      throw SingularMetric("metric not invertible at curvature basepoint");
    RealMatrix ginv = lu.inverse();
    Rank3 low = gamma(p);
    Rank3 up(dim);
    for (int k = 0; k < dim; ++k)
      for (int j = 0; j < dim; ++j)
        for (int l = 0; l < dim; ++l) {
          double s = 0.0;
          for (int a = 0; a < dim; ++a) s += ginv(k, a) * low(a, j, l);
          up(k, j, l) = s;
        }
    return up;
  };

  Rank3 at_x = raised(x);
  std::vector<Rank3> dG(dim);  // dG[m] = d_m G
  for (int m = 0; m < dim; ++m) {
    Rank3 plus = raised(shifted(x, m, h));
    Rank3 minus = raised(shifted(x, m, -h));
    dG[m] = Rank3(dim);
    for (int k = 0; k < dim; ++k)
      for (int j = 0; j < dim; ++j)
        for (int l = 0; l < dim; ++l)
          dG[m](k, j, l) = (plus(k, j, l) - minus(k, j, l)) / (2.0 * h);
  }

  CurvatureResult r;
  r.dim = dim;
  r.components.assign(static_cast<size_t>(dim) * dim * dim * dim, 0.0);
  auto set = [&](int k, int l, int m, int n, double v) {
    r.components[((static_cast<size_t>(k) * dim + l) * dim + m) * dim + n] = v;
  };
  for (int k = 0; k < dim; ++k)
    for (int l = 0; l < dim; ++l)
      for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n) {
          double v = dG[m](k, n, l) - dG[n](k, m, l);
          for (int e = 0; e < dim; ++e)
            v += at_x(e, n, l) * at_x(k, m, e) - at_x(e, m, l) * at_x(k, n, e);
          set(k, l, m, n, v);
        }

  RealMatrix gm = g(x);
  RealMatrix ginv = gm.inverse();
  double scal = 0.0;
  for (int l = 0; l < dim; ++l)
    for (int n = 0; n < dim; ++n)
      for (int m = 0; m < dim; ++m)
        scal += ginv(l, n) * r.riemann(m, l, m, n);
  r.scalar = scal;
  return r;
}

CurvatureResult curvature_fd(const Divergence& d, const Chart& chart,
                             const RealVector& x, const FDScheme& scheme,
                             Which which) {
  TwoPointFn f = bind_divergence(d, chart);
  ConnectionField gamma = [&, f](const RealVector& p) {
    return connection_fd(f, chart, p, scheme, which).gamma;
  };
  MetricField g = [&, f](const RealVector& p) {
    return metric_fd(f, chart, p, scheme).components;
  };
  return curvature_from_connection(gamma, g, x, chart.dim, scheme.hgamma);
}

}  // namespace qig
