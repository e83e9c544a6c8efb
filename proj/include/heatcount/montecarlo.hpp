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

#ifndef HEATCOUNT_MONTECARLO_HPP
#define HEATCOUNT_MONTECARLO_HPP

#include "heatcount/tpm.hpp"
#include "heatcount/types.hpp"

#include <cstdint>
#include <vector>

namespace heatcount {

/// Empirical heat statistics from sampled protocol runs.
struct EmpiricalHeat {
  std::vector<double> q;
  std::vector<std::int64_t> counts;
  std::int64_t n_samples = 0;

  HeatDistribution distribution() const;
};

/// Samples the protocol: draw a system eigenstate of rho_S(0), an initial
/// environment energy from the Gibbs weights, evolve, and draw the final
/// environment energy from the Born rule. Deterministic for a fixed seed:
/// samples are generated in fixed-size chunks with per-chunk derived seeds,
/// so the output does not depend on how chunks are scheduled.
EmpiricalHeat mc_sample_heat(const Operator& u, const DensityMatrix& rho_s0,
                             const Operator& h_env, Beta beta,
                             std::int64_t n_samples, std::uint64_t seed);

}  // namespace heatcount

#endif  // HEATCOUNT_MONTECARLO_HPP
