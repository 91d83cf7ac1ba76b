#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace qig {

using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;

// Error taxonomy. Every failure mode named in the module contracts maps to
// one of these; messages carry the violated invariant.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotHermitian : Error { using Error::Error; };
struct NotAState : Error { using Error::Error; };
struct SingularPower : Error { using Error::Error; };
struct SingularLog : Error { using Error::Error; };
struct SupportMismatch : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };
struct NumericalSpectrum : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct DomainMargin : Error { using Error::Error; };
struct SingularMetric : Error { using Error::Error; };
struct DegenerateFrame : Error { using Error::Error; };
struct BadMetric : Error { using Error::Error; };
struct SingularQuorum : Error { using Error::Error; };
struct DegenerateQuadrature : Error { using Error::Error; };

// Dense rank-3 real array with value semantics; used for connection
// coefficients and skewness/curvature components.
class Rank3 {
 public:
  Rank3() = default;
  explicit Rank3(int n) : n_(n), a_(static_cast<size_t>(n) * n * n, 0.0) {}

  int dim() const { return n_; }
  double& operator()(int i, int j, int k) { return a_[idx(i, j, k)]; }
  double operator()(int i, int j, int k) const { return a_[idx(i, j, k)]; }

  double max_abs() const {
    double m = 0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * n_ + j) * n_ + k;
  }
  int n_ = 0;
  std::vector<double> a_;
};

}  // namespace qig
