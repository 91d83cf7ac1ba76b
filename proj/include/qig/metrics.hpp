#pragma once

// Closed-form metric families, evaluated as MetricTensor values in declared
// co-frames. Tangential components are stated in the left-invariant frame
// theta^a; transversal components in simplex coordinates.

#include <string>
#include <vector>

#include "qig/hermitian.hpp"

namespace qig {

struct MetricTensor {
  std::vector<std::string> coframe_labels;
  RealMatrix components;  // symmetric
  RealVector basepoint;
  double q = 0.5;
};

enum class Stratum { Pure, Rank2 };

// Fisher-Rao on the simplex interior in coordinates (k1..k_{N-1}), k_N
// eliminated: g_ij = delta_ij / k_i + 1 / k_N.
MetricTensor fisher_rao_simplex(const ProbabilityVector& k);

// Qubit metric in co-frame (dw, theta1, theta2, theta3):
//   g_ww  = 1/(1-w^2)
//   g_11  = g_22 = 2 (a_q - b_q)(a_{1-q} - b_{1-q}) / (q(1-q))
//   g_33  = 0
// with a_s = ((1+w)/2)^s, b_s = ((1-w)/2)^s.
MetricTensor qubit_metric(double q, double w);

// q -> 1 limit: tangential coefficient 2 w ln((1+w)/(1-w)).
MetricTensor qubit_metric_q1(double w);

// Qutrit metric in co-frame (dk1, dk2, theta1..theta8); transversal block is
// Fisher-Rao, tangential pair coefficient on (theta^a, theta^b) for the
// eigenvalue pair (k_a, k_b):
//   c_ab = 2 (k_a^q - k_b^q)(k_a^{1-q} - k_b^{1-q}) / (q(1-q)).
MetricTensor qutrit_metric(double q, const ProbabilityVector& k);

// Tangential pair coefficient, shared by metric and radial-limit code.
double tangential_pair_coefficient(double ka, double kb, double q);

// Boundary-stratum metrics via the radial (weak) limit. For dim 2 the pure
// stratum; for dim 3 pure and rank-2 strata. k is the (k1,k2) spectrum of the
// rank-2 stratum (ignored otherwise). Co-frame is the surviving theta block.
MetricTensor radial_limit_metric(double q, int dim, Stratum stratum,
                                 const ProbabilityVector* k = nullptr);

// Petz operator monotone function for the Tsallis metric family:
//   f(t) = q(1-q)(t-1)^2 / ((t^q - 1)(t^{1-q} - 1))   for q in (0,1)
//   f(t) = (t-1)/ln t                                 for q in {0,1}
// normalized so f(1) = 1; satisfies f(t) = t f(1/t).
struct MonotoneFunction {
  double q;
  double operator()(double t) const;
  // Analytic limit f(0+): q(1-q) for q in (0,1), 0 at the endpoints. Nonzero
  // exactly when the radial (boundary) limit of the metric exists; pointwise
  // evaluation converges to it only like t^min(q,1-q).
  double at_zero() const;
};
MonotoneFunction petz_f(double q);

// Tangential coefficient matrix over the generator basis T_a for arbitrary N:
//   G_ab = -Tr([T_a, rho0^q][T_b, rho0^{1-q}]) / (q(1-q))
// Reproduces the qubit/qutrit closed forms for N = 2, 3.
RealMatrix tangential_coefficients_general(const ProbabilityVector& k,
                                           double q);

// Petz-form tangential coefficient w^2 / ((1+w) f((1-w)/(1+w))). Differs from
// the qubit_metric tangential coefficient by a constant normalization ratio
// of 4, asserted constant over (q, w) in tests.
double qubit_petz_form(double q, double w);

// Qubit metric in the polar chart (w, theta, phi):
//   diag(1/(1-w^2), K, K sin^2 theta),
// K = (a_q - b_q)(a_{1-q} - b_{1-q}) / (2 q (1-q)); theta-frame-to-polar
// pullback of qubit_metric. Used for index raising in the closed curvature
// path.
MetricTensor qubit_polar_metric(double q, double w, double theta);

}  // namespace qig
