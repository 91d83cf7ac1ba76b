#include "qig/tomography.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "qig/charts.hpp"

namespace qig {

namespace {

const Complex I{0.0, 1.0};

constexpr double kCondLimit = 1e6;

RealVector diag_real(const ComplexMatrix& m) { return m.diagonal().real(); }

// Real 8x8 system for the qutrit unknowns
// v = (rho11, rho22, Re rho12, Im rho12, Re rho13, Im rho13, Re rho23,
// Im rho23), with rho33 eliminated by the unit trace.
void reconstruction_system(const Quorum& quorum, RealMatrix& a, RealVector& b) {
  const int nf = static_cast<int>(quorum.frames.size());
  if (nf < 4)
    throw SingularQuorum("qutrit quorum must contain at least 4 frames");
  a.resize(2 * nf, 8);
  b.resize(2 * nf);
  for (int k = 0; k < nf; ++k) {
    const ComplexMatrix& u = quorum.frames[k].u;
    for (int outcome = 0; outcome < 2; ++outcome) {  // rows m = 1 and m = 0
      Eigen::RowVectorXcd r = u.row(outcome);
      int row = 2 * k + outcome;
      a(row, 0) = std::norm(r(0)) - std::norm(r(2));
      a(row, 1) = std::norm(r(1)) - std::norm(r(2));
      Complex c12 = r(0) * std::conj(r(1));
      Complex c13 = r(0) * std::conj(r(2));
      Complex c23 = r(1) * std::conj(r(2));
      a(row, 2) = 2.0 * c12.real();
      a(row, 3) = -2.0 * c12.imag();
      a(row, 4) = 2.0 * c13.real();
      a(row, 5) = -2.0 * c13.imag();
      a(row, 6) = 2.0 * c23.real();
      a(row, 7) = -2.0 * c23.imag();
      b(row) = std::norm(r(2));
    }
  }
}

}  // namespace

Quorum qubit_quorum() {
  Quorum q;
  RealVector t(3);
  t << 0.0, M_PI / 4.0, 0.0;
  q.frames.push_back({su_n_exponential(t, 2), "u1", std::nullopt});
  t << -M_PI / 4.0, 0.0, 0.0;
  q.frames.push_back({su_n_exponential(t, 2), "u2", std::nullopt});
  q.frames.push_back({ComplexMatrix::Identity(2, 2), "u3", std::nullopt});
  return q;
}

ComplexMatrix wigner_d1(double phi, double theta, double psi) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double r2 = std::sqrt(2.0);
  // Reduced matrix d^1(theta) in the |1>, |0>, |-1> basis.
  ComplexMatrix d{{0.5 * (1 + c), -s / r2, 0.5 * (1 - c)},
                  {s / r2, c, -s / r2},
                  {0.5 * (1 - c), s / r2, 0.5 * (1 + c)}};
  Eigen::Vector3cd mz{std::exp(-I * phi), 1.0, std::exp(I * phi)};
  Eigen::Vector3cd mzp{std::exp(-I * psi), 1.0, std::exp(I * psi)};
  return mz.asDiagonal() * d * mzp.asDiagonal();
}

Quorum qutrit_quorum() {
  // Spin-1 direction measurements only resolve <n.J> and <(n.J)^2>, and the
  // four tetrahedral dyads n n^T share a common diagonal, spanning just 3 of
  // the 5 quadrupole components. Two coordinate-axis frames supply the
  // missing diagonal (J_z^2, J_x^2) information; the 12x8 system is then
  // solved by least squares.
  const double s3 = 1.0 / std::sqrt(3.0);
  const std::vector<Eigen::Vector3d> dirs = {
      {s3, s3, s3},    {s3, -s3, -s3}, {-s3, s3, -s3},
      {-s3, -s3, s3},  {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}};
  Quorum q;
  int idx = 1;
  for (const auto& n : dirs) {
    double theta = std::acos(n.z());
    double phi = std::atan2(n.y(), n.x());
    ReferenceFrame f;
    // Measuring spin projection along n in the original frame corresponds to
    // rotating the state by the inverse rotation.
    f.u = wigner_d1(phi, theta, 0.0).adjoint();
    f.label = "n" + std::to_string(idx++);
    f.direction = n;
    q.frames.push_back(f);
  }
  if (quorum_condition_number(q) > kCondLimit)
    throw SingularQuorum("default quorum reconstruction system ill-conditioned");
  return q;
}

Tomogram qubit_tomogram(const DensityMatrix& rho, const Quorum& quorum) {
  Tomogram t;
  for (const auto& f : quorum.frames) {
    RealVector d = diag_real(f.u * rho.matrix() * f.u.adjoint());
    t.frames.push_back({f.label, {d(0), d(1)}});
  }
  return t;
}

Tomogram qutrit_tomogram(const DensityMatrix& rho, const Quorum& quorum) {
  Tomogram t;
  for (const auto& f : quorum.frames) {
    RealVector d = diag_real(f.u * rho.matrix() * f.u.adjoint());
    t.frames.push_back({f.label, {d(0), d(1), d(2)}});
  }
  return t;
}

DensityMatrix qubit_reconstruct(const Tomogram& t) {
  if (t.frames.size() != 3)
    throw SingularQuorum("qubit tomogram must contain 3 frames");
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  for (int k = 0; k < 3; ++k)
    m += (2.0 * t.frames[k].probabilities.at(0) - 1.0) * pauli(k + 1);
  m *= 0.5;
  try {
    return DensityMatrix(m);
  } catch (const NotAState& e) {
    throw NotAState(std::string("tomogram violates the uncertainty relation: ") +
                    e.what());
  }
}

double quorum_condition_number(const Quorum& quorum) {
  RealMatrix a;
  RealVector b;
  reconstruction_system(quorum, a, b);
  Eigen::JacobiSVD<RealMatrix> svd(a);
  double smin = svd.singularValues().minCoeff();
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return svd.singularValues().maxCoeff() / smin;
}

DensityMatrix qutrit_reconstruct(const Tomogram& t, const Quorum& quorum) {
  RealMatrix a;
  RealVector b;
  reconstruction_system(quorum, a, b);
  Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  double smin = svd.singularValues().minCoeff();
  if (smin <= 0.0 || svd.singularValues().maxCoeff() / smin > kCondLimit)
    throw SingularQuorum("reconstruction system ill-conditioned");
  const int nf = static_cast<int>(quorum.frames.size());
  if (static_cast<int>(t.frames.size()) != nf)
    throw SingularQuorum("tomogram frame count does not match the quorum");
  RealVector w(2 * nf);
  for (int k = 0; k < nf; ++k) {
    w(2 * k) = t.frames[k].probabilities.at(0);
    w(2 * k + 1) = t.frames[k].probabilities.at(1);
  }
  RealVector v = svd.solve(w - b);
  ComplexMatrix m(3, 3);
  m(0, 0) = v(0);
  m(1, 1) = v(1);
  m(2, 2) = 1.0 - v(0) - v(1);
  m(0, 1) = Complex(v(2), v(3));
  m(1, 0) = std::conj(m(0, 1));
  m(0, 2) = Complex(v(4), v(5));
  m(2, 0) = std::conj(m(0, 2));
  m(1, 2) = Complex(v(6), v(7));
  m(2, 1) = std::conj(m(1, 2));
  return DensityMatrix(m);  // throws NotAState on unphysical tomograms
}

UncertaintyReport uncertainty_check(double w1, double w2, double w3) {
  for (double w : {w1, w2, w3})
    if (w < 0.0 || w > 1.0) throw BadParameter("probability outside [0,1]");
  double lhs = (w1 - 0.5) * (w1 - 0.5) + (w2 - 0.5) * (w2 - 0.5) +
               (w3 - 0.5) * (w3 - 0.5);
  return {lhs <= 0.25 + 1e-12, lhs};
}

MetricTensor qubit_tomographic_metric(const DensityMatrix& rho,
                                      const ReferenceFrame& frame) {
  RealVector d = diag_real(frame.u * rho.matrix() * frame.u.adjoint());
  const double wp = d(0), wm = d(1);
  if (wp <= 0.0 || wp >= 1.0)
    throw DegenerateFrame("frame probability at the simplex boundary");
  Complex cross = frame.u(0, 0) * std::conj(frame.u(0, 1));
  Eigen::Vector3d v{cross.real(), cross.imag(), std::norm(frame.u(0, 0)) - 0.5};
  MetricTensor g;
  g.coframe_labels = {"dy1", "dy2", "dy3"};
  g.components = (v * v.transpose()) / (wp * wm);
  return g;
}

BlochRecovery quantum_from_tomographic(double g_kk) {
  if (g_kk < 1.0 - 1e-12)
    throw BadMetric("per-frame metric entry below 1: " + std::to_string(g_kk));
  double mag = std::sqrt(std::max(0.0, 1.0 - 1.0 / g_kk));
  return {mag, {mag, -mag}};
}

std::string tomogram_to_json(const Tomogram& t) {
  nlohmann::json j;
  j["frames"] = nlohmann::json::array();
  for (const auto& f : t.frames)
    j["frames"].push_back(
        {{"label", f.label}, {"probabilities", f.probabilities}});
  return j.dump();
}

Tomogram tomogram_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  Tomogram t;
  for (const auto& f : j.at("frames"))
    t.frames.push_back({f.at("label").get<std::string>(),
                        f.at("probabilities").get<std::vector<double>>()});
  return t;
}

}  // namespace qig
