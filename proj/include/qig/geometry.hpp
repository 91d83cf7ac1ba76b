#pragma once

// Closed-form qubit dual-connection coefficients in polar coordinates
// (w, theta, phi) and curvature components with scalar-curvature limits.

#include "qig/oracle.hpp"

namespace qig {

struct QubitGeometryPoint {
  double q;
  double w;
  double theta;
  double phi = 0.0;
};

// Lowered coefficients Gamma_{ljk} over coordinates (w, theta, phi),
// symmetric in (j,k). q in (0,1).
ConnectionCoefficients qubit_connection_closed(const QubitGeometryPoint& pt,
                                               Which which);

// Riemann components R^k_{lmn} of the primal connection in the q -> 1 limit.
// General-q closed components are not provided; the FD pipeline is the
// reference away from the limit.
CurvatureResult qubit_curvature_closed_q1(double w, double theta);

enum class ScalarLimit { Q1, Q1Dual, Q0, Q0Dual, Half };

// Scalar curvature of the qubit manifold at the distinguished q limits:
//   Q1:     2 (1 - 1/w^2)
//   Q1Dual: [4 artanh(w)(w - (1-w^2) artanh(w)) - 2] / ((1-w^2) artanh(w)^2)
//   Q0 equals Q1Dual and Q0Dual equals Q1 (the limits exchange),
//   Half:   1/2 - (sqrt(1-w^2) + 1) / w^2.
double scalar_curvature_limits(double w, ScalarLimit which);

// artanh as 1/2 ln((1+w)/(1-w)); single transcendental convention.
double artanh(double w);

}  // namespace qig
