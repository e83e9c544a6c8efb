// Copyright 2026 the heatcount authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HEATCOUNT_VMODEL_HPP
#define HEATCOUNT_VMODEL_HPP

#include "heatcount/tpm.hpp"
#include "heatcount/types.hpp"

#include <array>
#include <vector>

namespace heatcount {

// Three-level V-system (levels |0>, |1>, |2>) coupled to a thermal qubit.
// The 0-1 transition is pumped at Rabi frequency omega1; the 0-2 transition
// exchanges excitations with the environment qubit at coupling J; a magnetic
// field B splits both the 0-2 transition and the environment.
//
// Basis conventions: the system is ordered (|0>, |1>, |2>), the environment
// (|0>_E, |1>_E) with H_E = -B sigma_z, so |0>_E is the ground state and the
// heat quantum of an environment flip is 2B. Composite indices are
// system-major.
struct ModelParams {
  double B = 1.0;
  double J = 1.0;
  double omega1 = 0.0;  // pump Rabi frequency of the 0-1 transition
  Beta beta = Beta(1.0);
  double gamma = 0.0;  // phenomenological damping, used by the LDF extension
  double phi = 1.5707963267948966;  // initial-state angles; the default
  double alpha = 0.0;               // (phi, alpha) = (pi/2, 0) is |2><2|

  /// sqrt(4 J^2 + omega1^2), the frequency governing the coupled 0-2 and
  /// environment dynamics.
  double typical_frequency() const;
};

/// Gell-Mann-type operators of the V-system and Pauli matrices of the
/// environment qubit.
namespace vop {
Matrix s_x(int j);  // |0><j| + |j><0|
Matrix s_y(int j);  // i(|0><j| - |j><0|)
Matrix s_z(int j);  // |0><0| - |j><j|
Matrix s_plus(int j);
Matrix s_minus(int j);
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();
Matrix sigma_plus();   // |1><0|_E, raises the environment energy
Matrix sigma_minus();  // |0><1|_E
}  // namespace vop

Matrix system_hamiltonian(const ModelParams& p);   // -B S_z^{20}
Matrix env_hamiltonian(const ModelParams& p);      // -B sigma_z
Operator env_hamiltonian_op(const ModelParams& p);

/// Interaction-picture RWA Hamiltonian on the 6-dimensional composite space:
/// the excitation-preserving XX coupling of the 0-2 transition to the qubit
/// plus the pump on the 0-1 transition.
Operator interaction_hamiltonian(const ModelParams& p);

/// Propagator of the interaction Hamiltonian with the eigendecomposition
/// cached, for dense time grids.
class VPropagator {
 public:
  explicit VPropagator(const ModelParams& p);
  Operator at(double t) const;

 private:
  Eigen::VectorXd values_;
  Matrix vectors_;
  HilbertSpace space_;
};

/// |Psi_0> = cos(phi)|0> + sin(phi) sin(alpha)|1> + sin(phi) cos(alpha)|2>.
Vector initial_system_state(const ModelParams& p);
DensityMatrix initial_density(const ModelParams& p);

/// Reduced system state Tr_E[U (rho_s0 (x) rho_beta) U^dagger].
DensityMatrix reduced_state(const ModelParams& p, const DensityMatrix& rho_s0,
                            double t);

/// Populations (rho^00, rho^11, rho^22) of the V-system at time t.
std::array<double, 3> populations(const ModelParams& p, double t);

/// Heat distribution of the V-model at time t through the generic TPM route.
HeatDistribution vmodel_heat_distribution(const ModelParams& p, double t);

// Closed forms below are only valid for rho_S(0) = |2><2|; other initial
// states are rejected.

/// <Q>_t = [1 + tanh(beta B)] 16 B J^2 sin^2(w t/2)[w^2 - 4 J^2 sin^2(w t/2)]
///         / w^4, with w the typical frequency.
double mean_heat_closed(const ModelParams& p, double t);

/// Closed-form Theta(eta, beta, t). The e^{-2 B eta} sin^2(w t) term carries
/// the coefficient 4 J^2 w^2, which is what the normalization
/// Theta(0, beta, t) = 0 and the brute-force route require.
double cgf_closed(const ModelParams& p, double eta, double t);

/// N_E = sqrt(2) <Q>_t / ((1 + tanh(beta B)) B); beta-independent.
double non_unitality_closed(const ModelParams& p, double t);

/// Difference between the maximum dissipated heat and the maximum of the
/// eta = beta lower bound over a window of times, per pump strength.
struct GapScan {
  std::vector<double> omega1_values;
  std::vector<double> d_values;
  std::vector<double> max_beta_mean_q;
  std::vector<double> max_bound;
  double t_min = 0.0, t_max = 0.0;
  int t_steps = 0;
};

/// Maxima are located by a coarse grid scan followed by golden-section
/// refinement; the eta = beta bound develops a near-cusp at cold
/// temperatures, so nothing derivative-based is safe here.
GapScan gap_scan(const ModelParams& p, const std::vector<double>& omega1_grid,
                 double t_min, double t_max, int t_steps);

}  // namespace heatcount

#endif  // HEATCOUNT_VMODEL_HPP
