#include "qig/gaussian.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <nlohmann/json.hpp>

namespace qig {

namespace {

void require_admissible_frame(const SymplecticFrame& f) {
  if (f.mu * f.mu + f.nu * f.nu <= 0.0)
    throw BadParameter("symplectic frame needs mu^2 + nu^2 > 0");
}

double normal_density(double x, double mean, double dispersion) {
  return std::exp(-(x - mean) * (x - mean) / (2.0 * dispersion)) /
         std::sqrt(2.0 * M_PI * dispersion);
}

// q -> 1 limit of the rescaled Tsallis divergence: the Gaussian
// Kullback-Leibler divergence of the two frame tomograms.
double gaussian_kl(const TomogramParams& a, const TomogramParams& b) {
  double dm = a.mean - b.mean;
  return 0.5 * std::log(b.dispersion / a.dispersion) +
         (a.dispersion + dm * dm) / (2.0 * b.dispersion) - 0.5;
}

}  // namespace

TomogramParams gaussian_tomogram_params(const GaussianState& s,
                                        const SymplecticFrame& f) {
  require_admissible_frame(f);
  TomogramParams p;
  p.mean = f.mu * s.qmean + f.nu * s.pmean;
  p.dispersion =
      f.mu * f.mu * s.sqq + f.nu * f.nu * s.spp + 2.0 * f.mu * f.nu * s.sqp;
  if (p.dispersion <= 1e-14)
    throw DegenerateQuadrature("vanishing quadrature dispersion");
  return p;
}

double gaussian_tsallis(const GaussianState& s, const GaussianState& st,
                        const SymplecticFrame& f, double q,
                        bool literal_b_sign) {
  TomogramParams a = gaussian_tomogram_params(s, f);
  TomogramParams b = gaussian_tomogram_params(st, f);
  if (std::abs(q - 1.0) < kQLimitWindow) return gaussian_kl(a, b);
  if (std::abs(q) < kQLimitWindow) return gaussian_kl(b, a);
  if (q <= 0.0 || q >= 1.0)
    throw BadParameter("q must lie in (0,1); got " + std::to_string(q));
  const double big_a = q / (2.0 * a.dispersion) + (1.0 - q) / (2.0 * b.dispersion);
  const double bsign = literal_b_sign ? -1.0 : 1.0;
  const double big_b = q * a.mean / a.dispersion +
                       bsign * (1.0 - q) * b.mean / b.dispersion;
  const double overlap =
      std::sqrt(M_PI / big_a) *
      std::exp(big_b * big_b / (4.0 * big_a) -
               q * a.mean * a.mean / (2.0 * a.dispersion) -
               (1.0 - q) * b.mean * b.mean / (2.0 * b.dispersion)) /
      std::sqrt(2.0 * M_PI * std::pow(a.dispersion, q) *
                std::pow(b.dispersion, 1.0 - q));
  return (1.0 - overlap) / (q * (1.0 - q));
}

double gaussian_tsallis_quadrature(const GaussianState& s,
                                   const GaussianState& st,
                                   const SymplecticFrame& f, double q) {
  if (q <= 0.0 || q >= 1.0) throw BadParameter("q must lie in (0,1)");
  TomogramParams a = gaussian_tomogram_params(s, f);
  TomogramParams b = gaussian_tomogram_params(st, f);
  // Tail cutoff at 12 standard deviations: relative truncation < 1e-30.
  const double span = 12.0 * std::sqrt(std::max(a.dispersion, b.dispersion));
  const double lo = std::min(a.mean, b.mean) - span;
  const double hi = std::max(a.mean, b.mean) + span;
  auto integrand = [&](double x) {
    return std::pow(normal_density(x, a.mean, a.dispersion), q) *
           std::pow(normal_density(x, b.mean, b.dispersion), 1.0 - q);
  };
  double overlap = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, lo, hi, 10, 1e-12);
  return (1.0 - overlap) / (q * (1.0 - q));
}

MetricTensor symplectic_metric(const GaussianState& s,
                               const SymplecticFrame& f, double q,
                               const FDScheme& scheme) {
  Admissibility adm = admissibility(s);
  if (!adm.quantum)
    throw OutOfDomain("state violates the Schroedinger-Robertson bound");
  const double h = scheme.h2;
  const int n = 5;
  auto value = [&](const RealVector& x, const RealVector& y) {
    return gaussian_tsallis(GaussianState::from_coords(x),
                            GaussianState::from_coords(y), f, q);
  };
  RealVector base = s.coords();
  RealMatrix raw(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      RealVector xp = base, xm = base;
      xp(j) += h;
      xm(j) -= h;
      RealVector yp = base, ym = base;
      yp(k) += h;
      ym(k) -= h;
      raw(j, k) = -(value(xp, yp) - value(xp, ym) - value(xm, yp) +
                    value(xm, ym)) /
                  (4.0 * h * h);
    }
  }
  MetricTensor g;
  g.q = q;
  g.basepoint = base;
  g.coframe_labels = {"dy1", "dy2", "dy3", "dy4", "dy5"};
  g.components = 0.5 * (raw + raw.transpose());
  return g;
}

Admissibility admissibility(const GaussianState& s) {
  double disc = s.sqq * s.spp - s.sqp * s.sqp;
  return {disc >= 0.0, disc >= 0.25, disc};
}

std::string gaussian_to_json(const GaussianState& s) {
  nlohmann::json j{{"sqq", s.sqq},
                   {"spp", s.spp},
                   {"sqp", s.sqp},
                   {"qmean", s.qmean},
                   {"pmean", s.pmean}};
  return j.dump();
}

GaussianState gaussian_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  return {j.at("sqq").get<double>(), j.at("spp").get<double>(),
          j.at("sqp").get<double>(), j.at("qmean").get<double>(),
          j.at("pmean").get<double>()};
}

}  // namespace qig
