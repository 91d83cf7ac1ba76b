#pragma once

// Qubit and qutrit spin tomography: forward maps, quorum reconstruction,
// the per-frame tomographic metric, quantum-metric reconstruction and the
// probability-cube uncertainty inequality.

#include <optional>
#include <string>
#include <vector>

#include "qig/hermitian.hpp"
#include "qig/metrics.hpp"

namespace qig {

struct ReferenceFrame {
  ComplexMatrix u;  // unitary, dim 2 or 3
  std::string label;
  // Qutrit frames additionally record the defining direction.
  std::optional<Eigen::Vector3d> direction;
};

struct Quorum {
  std::vector<ReferenceFrame> frames;  // size N+1, invertibility asserted
};

struct FrameProbabilities {
  std::string label;
  std::vector<double> probabilities;  // outcome order m descending
};

struct Tomogram {
  std::vector<FrameProbabilities> frames;
};

// Canonical qubit quorum: u1 = exp(i pi sigma2 / 4), u2 = exp(-i pi sigma1 / 4),
// u3 = identity; W(+1/2 | u_k) = (1 + y_k)/2 for Bloch vector y.
Quorum qubit_quorum();

// Default qutrit quorum: spin-1 Wigner rotations (z-y-z Euler angles, active,
// psi = 0) for the four tetrahedral directions (1,1,1)/sqrt3, (1,-1,-1)/sqrt3,
// (-1,1,-1)/sqrt3, (-1,-1,1)/sqrt3, augmented with the z and x coordinate
// axes. Direction measurements on spin 1 only resolve <n.J> and <(n.J)^2>,
// and four tetrahedral dyads miss two diagonal quadrupole components, so a
// pure tetrahedral quorum is information-incomplete; the two extra axes
// restore full rank. Invertibility is asserted at construction.
Quorum qutrit_quorum();

// Spin-1 Wigner rotation matrix D^1(phi, theta, psi), z-y-z convention.
ComplexMatrix wigner_d1(double phi, double theta, double psi);

// W(m|u) = <m| u rho u^dagger |m>, outcomes m descending.
Tomogram qubit_tomogram(const DensityMatrix& rho, const Quorum& quorum);
Tomogram qutrit_tomogram(const DensityMatrix& rho, const Quorum& quorum);

// rho = 1/2 (sigma_0 + (2 W_k - 1) sigma_k); throws NotAState when the
// reconstructed matrix violates positivity (uncertainty relation failed).
DensityMatrix qubit_reconstruct(const Tomogram& t);

// Solves the 8x8 real linear system for the independent density-matrix
// entries; throws SingularQuorum / NotAState.
DensityMatrix qutrit_reconstruct(const Tomogram& t, const Quorum& quorum);

// Condition number of the qutrit reconstruction matrix A.
double quorum_condition_number(const Quorum& quorum);

struct UncertaintyReport {
  bool holds;
  double lhs;  // sum (W_k - 1/2)^2, bounded by 1/4 for states
};

// Sum_k (W_k - 1/2)^2 <= 1/4; holds iff qubit_reconstruct succeeds.
UncertaintyReport uncertainty_check(double w1, double w2, double w3);

// Per-frame tomographic Fisher-Rao metric G_jk = C_jk(u) / (W_+ W_-) in
// Bloch coordinates (y1, y2, y3); rank <= 1 per frame.
MetricTensor qubit_tomographic_metric(const DensityMatrix& rho,
                                      const ReferenceFrame& frame);

struct BlochRecovery {
  double magnitude;                 // |y_k|
  std::array<double, 2> branches;   // +-|y_k|, the sign is not resolvable
};

// |y_k| = sqrt(1 - 1/G_kk) from the k-th canonical frame's diagonal entry.
BlochRecovery quantum_from_tomographic(double g_kk);

// JSON serialization: {"frames":[{"label":..., "probabilities":[...]}]}.
std::string tomogram_to_json(const Tomogram& t);
Tomogram tomogram_from_json(const std::string& json_text);

}  // namespace qig
