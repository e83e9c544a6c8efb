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

#ifndef HEATCOUNT_TPM_HPP
#define HEATCOUNT_TPM_HPP

#include "heatcount/types.hpp"

#include <utility>
#include <vector>

namespace heatcount {

/// Environment spectrum clustered into (near-)degenerate levels, each with a
/// spectral projector. Projectors are built per eigenvalue cluster so that
/// degenerate levels get rank > 1 projectors instead of arbitrary
/// eigenvector splits.
struct EnvSpectrum {
  struct Level {
    double energy;
    int rank;
    Matrix projector;
  };
  std::vector<Level> levels;
  double width = 0.0;  // spectral width of H_E

  /// Two heat values closer than this merge into one atom.
  double binning_tolerance() const {
    return 1e-9 * (width > 0.0 ? width : 1.0);
  }
};

EnvSpectrum env_spectrum(const Operator& h_env);

/// Joint outcome statistics of the two projective environment-energy
/// measurements: probability of finding E_n before and E_m after the joint
/// evolution.
struct JointOutcomeDistribution {
  struct Entry {
    double e_initial;  // E_n
    double e_final;    // E_m
    double prob;
  };
  std::vector<Entry> entries;
  std::vector<std::pair<double, int>> env_levels;  // (energy, rank)
  double binning_tolerance = 0.0;
};

/// Born-rule outcome table of the two-time measurement protocol for the
/// evolution u acting on rho_s0 (x) Gibbs(h_env, beta).
JointOutcomeDistribution joint_distribution(const Operator& u,
                                            const DensityMatrix& rho_s0,
                                            const Operator& h_env, Beta beta);

/// Distribution of dissipated heat Q = E_m - E_n. Atoms are strictly
/// increasing in Q; values within the binning tolerance are merged.
struct HeatDistribution {
  struct Atom {
    double q;
    double prob;
  };
  std::vector<Atom> atoms;

  double total_probability() const;
};

HeatDistribution heat_distribution(const JointOutcomeDistribution& joint);

/// One point of the cumulant generating function
/// Theta(eta, beta, t) = ln <e^{-eta Q}>_t.
struct CGFSample {
  double eta;
  Beta beta;
  double t;
  double theta;
};

/// Theta(eta) = ln sum_Q p(Q) e^{-eta Q}, evaluated as a log-sum-exp so that
/// large eta*Q never overflows.
double cgf_from_distribution(const HeatDistribution& dist, double eta);

/// Cumulant of the given order from exact moments of the distribution.
/// Order 1 is the mean, order 2 the variance.
double cumulant(const HeatDistribution& dist, int order);

}  // namespace heatcount

#endif  // HEATCOUNT_TPM_HPP
