#pragma once

// Real-coordinate parametrizations of state families: the bridge between
// coordinate-free formulas and numerical differentiation.
//
// Convention: the Maurer-Cartan form is U^-1 dU = i T_a theta^a with real
// theta^a for both SU(2) and SU(3); in the exponential charts at t = 0 the
// left-invariant co-frame reduces to theta^a = dt_a.

#include <functional>
#include <string>
#include <vector>

#include "qig/hermitian.hpp"

namespace qig {

// Margin excluded around polar-chart singularities (theta in {0,pi}, w = 0).
inline constexpr double kChartMargin = 1e-6;

struct Chart {
  std::string name;
  int dim = 0;
  std::function<DensityMatrix(const RealVector&)> to_state;
  std::vector<std::string> coframe_labels;
  std::function<bool(const RealVector&)> domain_check;
};

// sigma_1..sigma_3 and the 3x3 Gell-Mann matrices lambda_1..lambda_8.
const ComplexMatrix& pauli(int j);      // j in 1..3
const ComplexMatrix& gell_mann(int j);  // j in 1..8
// Generator basis T_a for the exponential charts: pauli for N=2,
// gell_mann for N=3.
const ComplexMatrix& su_generator(int dim, int a);  // a is 1-based
int su_generator_count(int dim);                    // 3 or 8

// Traceless Hermitian generator basis for arbitrary N with Tr T_a T_b =
// 2 delta_ab. Canonical Pauli/Gell-Mann ordering for N = 2, 3; generalized
// Gell-Mann (pairwise symmetric/antisymmetric, then diagonal) beyond.
std::vector<ComplexMatrix> su_basis(int dim);

// U = exp(i sum_a t_a T_a); unitary with det 1 for traceless T_a.
ComplexMatrix su_n_exponential(const RealVector& t, int dim);

// 1/2 (sigma_0 + w n(theta,phi).sigma); eigenvalues (1 +- w)/2.
DensityMatrix qubit_state(double w, double theta, double phi);

// U diag(k) U^dagger with U = exp(i sum t_a lambda_a).
DensityMatrix qutrit_state(const ProbabilityVector& k, const RealVector& t);

// Charts.
// (w, theta, phi), domain (0,1) x (0,pi) x [0,2pi) with kChartMargin.
Chart qubit_polar_chart();
// (w, t1, t2, t3): state = U(t) rho_0(w) U(t)^dagger.
Chart qubit_exp_chart();
// (k1, k2, t1..t8): state = U(t) diag(k1,k2,1-k1-k2) U(t)^dagger.
Chart qutrit_exp_chart();
// (k1..k_{N-1}) with k_N = 1 - sum, interior only; diagonal states.
Chart simplex_chart(int n);

}  // namespace qig
