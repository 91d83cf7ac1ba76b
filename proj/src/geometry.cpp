#include "qig/geometry.hpp"

#include <cmath>

namespace qig {

namespace {

void require_domain(const QubitGeometryPoint& pt) {
  if (pt.q <= 0.0 || pt.q >= 1.0) throw OutOfDomain("q outside (0,1)");
  if (pt.w <= 0.0 || pt.w >= 1.0) throw OutOfDomain("w outside (0,1)");
  if (pt.theta <= 0.0 || pt.theta >= M_PI)
    throw OutOfDomain("theta outside (0,pi)");
}

// (1/4s)[P^{-s} - P^{s}] with P = (1+w)/(1-w); the Gamma_122 radial profile.
double radial_122(double s, double w) {
  double p = (1.0 + w) / (1.0 - w);
  return (std::pow(p, -s) - std::pow(p, s)) / (4.0 * s);
}

// (1/(4q(1-q)))[P^{-q}(1+w) + P^{q}(1-w) - 2]; the Gamma_233 w profile.
double angular_233(double q, double w) {
  double p = (1.0 + w) / (1.0 - w);
  return (std::pow(p, -q) * (1.0 + w) + std::pow(p, q) * (1.0 - w) - 2.0) /
         (4.0 * q * (1.0 - q));
}

}  // namespace

double artanh(double w) { return 0.5 * std::log((1.0 + w) / (1.0 - w)); }

ConnectionCoefficients qubit_connection_closed(const QubitGeometryPoint& pt,
                                               Which which) {
  require_domain(pt);
  const double q = pt.q, w = pt.w, theta = pt.theta;
  const double sin2 = std::sin(theta) * std::sin(theta);
  const double cs = std::cos(theta) * std::sin(theta);
  // The dual exchanges q <-> 1-q in every coefficient below. Note: the
  // primal/dual 122 pair follows from differentiating the divergence; it is
  // antisymmetric against the 212 pair, with both families coinciding at
  // q = 1/2 (the autodual point).
  const double s = (which == Which::Primal) ? q : 1.0 - q;

  ConnectionCoefficients c;
  c.which = which;
  c.basepoint = RealVector(3);
  c.basepoint << w, theta, pt.phi;
  c.gamma = Rank3(3);
  auto set = [&](int l, int j, int k, double v) {
    c.gamma(l - 1, j - 1, k - 1) = v;
    c.gamma(l - 1, k - 1, j - 1) = v;
  };
  set(1, 1, 1, 2.0 * (1.0 - s) * w / ((1.0 - w * w) * (1.0 - w * w)));
  const double g122 = radial_122(s, w);
  set(1, 2, 2, g122);
  set(1, 3, 3, sin2 * g122);
  const double g212 = -radial_122(1.0 - s, w);
  set(2, 1, 2, g212);
  set(3, 1, 3, sin2 * g212);
  // Self-dual angular block.
  const double g233 = angular_233(q, w) * cs;
  set(2, 3, 3, g233);
  set(3, 2, 3, -g233);
  return c;
}

CurvatureResult qubit_curvature_closed_q1(double w, double theta) {
  if (w <= 0.0 || w >= 1.0) throw OutOfDomain("w outside (0,1)");
  CurvatureResult r;
  r.dim = 3;
  r.components.assign(81, 0.0);
  // Antisymmetric in the last index pair.
  auto set = [&](int k, int l, int m, int n, double v) {
    r.components[((static_cast<size_t>(k - 1) * 3 + (l - 1)) * 3 + (m - 1)) *
                     3 + (n - 1)] = v;
    r.components[((static_cast<size_t>(k - 1) * 3 + (l - 1)) * 3 + (n - 1)) *
                     3 + (m - 1)] = -v;
  };
  const double st = std::sin(theta), ct = std::cos(theta);
  set(1, 2, 1, 2, 1.0);
  set(1, 3, 1, 3, st * st);
  set(1, 3, 2, 3, 2.0 * w * ct * st);
  set(2, 1, 1, 2, 1.0 / w);
  set(2, 3, 2, 3, ct * ct - st * st);
  set(3, 1, 1, 3, 1.0 / (w * w));
  set(3, 2, 2, 3, 1.0 + (ct * ct) / (st * st));
  r.scalar = scalar_curvature_limits(w, ScalarLimit::Q1);
  return r;
}

double scalar_curvature_limits(double w, ScalarLimit which) {
  if (w <= 0.0 || w >= 1.0) throw OutOfDomain("w outside (0,1)");
  switch (which) {
    case ScalarLimit::Q1:
    case ScalarLimit::Q0Dual:
      return 2.0 * (1.0 - 1.0 / (w * w));
    case ScalarLimit::Q1Dual:
    case ScalarLimit::Q0: {
      const double at = artanh(w);
      return (4.0 * at * (w - (1.0 - w * w) * at) - 2.0) /
             ((1.0 - w * w) * at * at);
    }
    case ScalarLimit::Half:
      return 0.5 - (std::sqrt(1.0 - w * w) + 1.0) / (w * w);
  }
  throw BadParameter("unknown scalar curvature limit");
}

}  // namespace qig
