#pragma once

// Independent finite-difference differential-geometry engine: metric, dual
// connections, skewness and curvature from any Divergence on any Chart.
// All derivatives are taken on the product M x M with independent left/right
// perturbations, then restricted to the diagonal.

#include <functional>

#include "qig/charts.hpp"
#include "qig/divergences.hpp"
#include "qig/metrics.hpp"

namespace qig {

// Two-point scalar function in chart coordinates.
using TwoPointFn = std::function<double(const RealVector&, const RealVector&)>;

struct FDScheme {
  double h2 = 1e-3;  // step for second derivatives
  double h3 = 1e-2;  // step for third derivatives
  double hgamma = 1e-2;  // basepoint step for curvature (derivatives of Gamma)
};

// Default steps; QIG_FD_STEP=h2[,h3] in the environment overrides them.
FDScheme default_scheme();

enum class Which { Primal, Dual };

struct ConnectionCoefficients {
  Rank3 gamma;  // gamma(l, j, k): l is the lowered (metric) slot, (j,k) symmetric
  RealVector basepoint;
  Which which = Which::Primal;
};

struct CurvatureResult {
  std::vector<double> components;  // R^k_{lmn}, first index raised; flattened
  int dim = 0;
  double scalar = 0.0;
  double riemann(int k, int l, int m, int n) const {
    return components[((static_cast<size_t>(k) * dim + l) * dim + m) * dim + n];
  }
};

TwoPointFn bind_divergence(const Divergence& d, const Chart& chart);

// g_jk = -d^2 F / dx^j dy^k at x = y, 4-point central stencil per component;
// output symmetrized. Throws DomainMargin if the stencil leaves the chart.
MetricTensor metric_fd(const TwoPointFn& f, const Chart& chart,
                       const RealVector& x, const FDScheme& scheme);
MetricTensor metric_fd(const Divergence& d, const Chart& chart,
                       const RealVector& x, const FDScheme& scheme);

// Gamma_{ljk} = -d^3 F / dx_j dx_k dy_l at x = y (primal); dual swaps the
// roles of x and y.
ConnectionCoefficients connection_fd(const TwoPointFn& f, const Chart& chart,
                                     const RealVector& x,
                                     const FDScheme& scheme, Which which);
ConnectionCoefficients connection_fd(const Divergence& d, const Chart& chart,
                                     const RealVector& x,
                                     const FDScheme& scheme, Which which);

// Skewness T = Gamma - Gamma*, fully symmetric up to FD error.
Rank3 skewness_fd(const Divergence& d, const Chart& chart, const RealVector& x,
                  const FDScheme& scheme);

// Riemann tensor and scalar curvature from a connection field and a metric
// field over the chart: R^k_{lmn} = d_m G^k_{nl} - d_n G^k_{ml}
// + G^e_{nl} G^k_{me} - G^e_{ml} G^k_{ne}, scalar = g^{ln} R^m_{lmn}.
// The raised field G^k_{jl}(x) = g^{ka}(x) Gamma_{ajl}(x) is sampled on a
// central stencil of half-width scheme.hgamma.
using ConnectionField = std::function<Rank3(const RealVector&)>;
using MetricField = std::function<RealMatrix(const RealVector&)>;

CurvatureResult curvature_from_connection(const ConnectionField& gamma,
                                          const MetricField& g,
                                          const RealVector& x, int dim,
                                          double h);

// Convenience: full FD pipeline divergence -> connection -> curvature.
CurvatureResult curvature_fd(const Divergence& d, const Chart& chart,
                             const RealVector& x, const FDScheme& scheme,
                             Which which);

}  // namespace qig
