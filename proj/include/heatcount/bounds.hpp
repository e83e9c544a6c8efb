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

#ifndef HEATCOUNT_BOUNDS_HPP
#define HEATCOUNT_BOUNDS_HPP

#include "heatcount/tpm.hpp"
#include "heatcount/types.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace heatcount {

/// Theta(eta, beta, t) through the tilted propagator
/// U_{eta/2} = e^{-(eta/2) H_E} U e^{(eta/2) H_E}:
/// Theta = ln Tr[ U_{eta/2} rho_S(0) (x) rho_beta U_{eta/2}^dagger ].
/// Must agree with the distribution route; that equality is the module's
/// core consistency check.
double cgf_tilted(const Operator& u, const DensityMatrix& rho_s0,
                  const Operator& h_env, Beta beta, double eta);

/// Environment Kraus operators A_k = sqrt(lambda_j) <i|U|j> of the reduced
/// environment channel, indexed by system eigenpairs of rho_S(0). Branches
/// with lambda_j < 1e-14 are dropped.
std::vector<Matrix> env_kraus_operators(const Operator& u,
                                        const DensityMatrix& rho_s0);

/// Conditional-evolution operator on the environment,
/// A^eta = Tr_S[ U_{beta-eta} rho_S(0) (x) 1_E U_{beta-eta}^dagger ].
/// Hermitian; at eta = beta it reduces to the plain Kraus sum
/// sum_k A_k A_k^dagger.
struct ConditionalChannelOperator {
  Operator a_eta;
  double eta;
};
ConditionalChannelOperator conditional_channel(const Operator& u,
                                               const DensityMatrix& rho_s0,
                                               const Operator& h_env,
                                               Beta beta, double eta);

/// Theta recovered from the conditional channel, ln Tr[rho_beta A^eta].
double cgf_from_conditional_channel(const ConditionalChannelOperator& cc,
                                    const Operator& h_env, Beta beta);

/// Frobenius distance of the Kraus sum from the identity,
/// N_E = || A^beta - 1_E ||_F. Vanishes exactly for unital channels.
double non_unitality(const Operator& u, const DensityMatrix& rho_s0);

/// One-parameter families of bounds on beta<Q>:
/// lower  B^eta = -(beta/eta) Theta(eta)   for eta > 0,
/// upper  B~^eta = (beta/|eta|) Theta(eta) for eta < 0.
struct BoundReport {
  double beta_mean_q;
  std::vector<std::pair<double, double>> lower;  // (eta, B^eta), eta > 0
  std::vector<std::pair<double, double>> upper;  // (eta, B~^eta), eta < 0
  double delta_s;  // entropy change, NaN when the caller did not supply one
};

BoundReport bound_family(const std::function<double(double)>& cgf, double beta,
                         double mean_q, const std::vector<double>& etas,
                         double delta_s = std::numeric_limits<double>::quiet_NaN());

/// The four terms of the equality
/// beta<Q> = Delta S + I(S:E) + D(rho_E || rho_beta).
struct LandauerAudit {
  double beta_mean_q;
  double delta_s;
  double mutual_info;
  double env_relative_entropy;

  double residual() const {
    return beta_mean_q - delta_s - mutual_info - env_relative_entropy;
  }
};

LandauerAudit landauer_audit(const Operator& h_total,
                             const DensityMatrix& rho_s0,
                             const Operator& h_env, Beta beta, double t);

}  // namespace heatcount

#endif  // HEATCOUNT_BOUNDS_HPP
