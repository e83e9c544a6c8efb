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

#ifndef HEATCOUNT_ENTROPY_HPP
#define HEATCOUNT_ENTROPY_HPP

#include "heatcount/types.hpp"

namespace heatcount {

/// Gibbs state e^{-beta H_E}/Z_E of a Hermitian environment Hamiltonian,
/// computed in the eigenbasis with a max-shift so that no exponential
/// overflows for large beta. beta = infinity yields the normalized projector
/// onto the ground space.
ThermalState thermal_state(const Operator& h_env, Beta beta);

/// Von Neumann entropy -Tr[rho ln rho] in nats. Eigenvalues below 1e-14
/// contribute nothing (0 ln 0 := 0).
double von_neumann_entropy(const DensityMatrix& rho);

/// Relative entropy Tr[rho ln rho] - Tr[rho ln sigma] in nats. Returns
/// +infinity when the support of rho is not contained in the support of
/// sigma.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Mutual information S(rho_A) + S(rho_B) - S(rho_AB) of a bipartite state.
double mutual_information(const DensityMatrix& rho_ab);

}  // namespace heatcount

#endif  // HEATCOUNT_ENTROPY_HPP
