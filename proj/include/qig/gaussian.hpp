#pragma once

// Symplectic tomography of one-mode Gaussian states: tomogram parameters,
// closed-form Gaussian Tsallis divergence (quadrature-validated), the
// symplectic metric via the FD oracle, and admissibility checks.

#include <string>

#include "qig/metrics.hpp"
#include "qig/oracle.hpp"

namespace qig {

struct GaussianState {
  double sqq;    // sigma_qq = y1
  double spp;    // sigma_pp = y2
  double sqp;    // sigma_qp = y3
  double qmean;  // <q> = y4
  double pmean;  // <p> = y5

  RealVector coords() const {
    RealVector y(5);
    y << sqq, spp, sqp, qmean, pmean;
    return y;
  }
  static GaussianState from_coords(const RealVector& y) {
    return {y(0), y(1), y(2), y(3), y(4)};
  }
};

struct SymplecticFrame {
  double mu;
  double nu;
};

struct TomogramParams {
  double mean;        // Xbar = mu <q> + nu <p>
  double dispersion;  // sigma = mu^2 sqq + nu^2 spp + 2 mu nu sqp
};

struct Admissibility {
  bool classical;      // discriminant >= 0
  bool quantum;        // discriminant >= 1/4 (Schroedinger-Robertson)
  double discriminant; // sqq spp - sqp^2
};

// Homodyne quadrature mean and dispersion in the frame (mu, nu); the
// tomogram is the normal density with these parameters.
TomogramParams gaussian_tomogram_params(const GaussianState& s,
                                        const SymplecticFrame& f);

// Rescaled Tsallis divergence of the two frame tomograms, closed form via
// completing the square:
//   (q(1-q))^-1 [1 - (2 pi sigma^q sigmat^{1-q})^{-1/2} sqrt(pi/A)
//                    exp(B^2/4A - q Xbar^2/2 sigma - (1-q) Xbart^2/2 sigmat)]
// with A = q/2sigma + (1-q)/2sigmat and B = q Xbar/sigma
// + (1-q) Xbart/sigmat. The plus sign in B is required for S(s,s) = 0;
// literal_b_sign selects the minus-sign variant for comparison (it fails the
// diagonal identity for shifted states and exists only as evidence).
double gaussian_tsallis(const GaussianState& s, const GaussianState& st,
                        const SymplecticFrame& f, double q,
                        bool literal_b_sign = false);

// Direct adaptive quadrature of int W^q Wt^{1-q} dX over Xbar +- 12 sqrt(max
// dispersion); the independent oracle for the closed form.
double gaussian_tsallis_quadrature(const GaussianState& s,
                                   const GaussianState& st,
                                   const SymplecticFrame& f, double q);

// 5x5 symplectic metric in coordinates (y1..y5), defined operationally as
// the FD oracle over the closed-form divergence; q -> 1 dispatches to the
// Gaussian Kullback-Leibler limit.
MetricTensor symplectic_metric(const GaussianState& s,
                               const SymplecticFrame& f, double q,
                               const FDScheme& scheme = default_scheme());

Admissibility admissibility(const GaussianState& s);

// JSON: {"sqq":..., "spp":..., "sqp":..., "qmean":..., "pmean":...}.
std::string gaussian_to_json(const GaussianState& s);
GaussianState gaussian_from_json(const std::string& json_text);

}  // namespace qig
