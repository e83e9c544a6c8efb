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

#ifndef HEATCOUNT_LDF_HPP
#define HEATCOUNT_LDF_HPP

#include "heatcount/master_equation.hpp"
#include "heatcount/types.hpp"
#include "heatcount/vmodel.hpp"

#include <vector>

namespace heatcount {

// Dissipative extension of the V-system: the periodic finite-environment
// dynamics has no long-time limit, so a constant damping channel gamma on
// the 2 -> 0 transition replaces the time-periodic channels, and the
// large-deviation function theta(eta) is the leading eigenvalue of the
// tilted generator. Each 2 -> 0 emission deposits the quantum eps = 2B into
// the environment, so the counting factor e^{-eta eps} dresses the gain term
// of that jump. The coherent part keeps both V-transitions: the pump omega1
// on 0-1 and the environment-mediated exchange amplitude 2J on 0-2; its
// spectral scale is the typical frequency sqrt(4J^2 + omega1^2).

/// Coherent part of the damped generator.
Matrix ldf_hamiltonian(const ModelParams& p);

/// The damped model as a Lindblad set: both coherent drives plus the gamma
/// channel on the 2 -> 0 transition, heat quantum 2B per emission.
LindbladSet damped_lindblad_set(const ModelParams& p);

/// Tilted generator as a 9x9 superoperator over column-stacked 3x3 states:
/// L_eta(rho) = -i[H, rho]
///            + gamma (e^{-eta eps} s- rho s+ - 1/2 {s+ s-, rho}).
/// Requires gamma > 0. At eta = 0 the vectorized identity is a left null
/// vector (trace preservation).
Eigen::MatrixXcd dissipative_generator(const ModelParams& p, double eta);

/// theta(eta): largest real part of the generator spectrum. Exactly 0 at
/// eta = 0.
double ldf_theta(const ModelParams& p, double eta);

/// Stationary state of the untilted generator (unique for omega1 > 0).
Matrix ldf_steady_state(const ModelParams& p);

/// gamma * eps * rho_ss^22, the mean heat output rate in the steady state.
double stationary_heat_current(const ModelParams& p);

/// theta on a grid of counting parameters plus the derived stationary bound
/// families and the derivative gap at the origin.
struct LDFCurve {
  std::vector<double> etas;
  std::vector<double> theta;
  std::vector<double> lower_stationary;  // -theta/eta for eta > 0, else NaN
  std::vector<double> upper_stationary;  // theta/|eta| for eta < 0, else NaN
  double kink = 0.0;  // theta'(0+) - theta'(0-), one-sided steps of 1e-3
};

LDFCurve ldf(const ModelParams& p, const std::vector<double>& eta_grid);

/// Finite-time growth rate of ln Tr[rho(eta, t)] measured between t_max/2
/// and t_max by propagating the tilted generator; converges to theta(eta)
/// once subleading generator modes have died out.
double finite_time_cgf_slope(const ModelParams& p, double eta, double t_max);

}  // namespace heatcount

#endif  // HEATCOUNT_LDF_HPP
