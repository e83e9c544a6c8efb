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

#include "heatcount/montecarlo.hpp"

#include "heatcount/entropy.hpp"
#include "heatcount/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace heatcount {

namespace {

constexpr std::int64_t kChunkSize = 4096;

// splitmix64; used only to derive independent per-chunk seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t chunk) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (chunk + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in [0,1) from the top 53 bits; avoids the implementation-defined
// behavior of std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int pick(const std::vector<double>& cumulative, double r) {
  const auto it =
      std::upper_bound(cumulative.begin(), cumulative.end(), r);
  const auto idx = std::distance(cumulative.begin(), it);
  return std::min<int>(static_cast<int>(idx),
                       static_cast<int>(cumulative.size()) - 1);
}

std::vector<double> cumulative_from(const std::vector<double>& weights) {
  std::vector<double> cum(weights.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    cum[i] = acc;
  }
  // Normalize so the last entry is exactly 1.
  for (double& c : cum) c /= acc;
  cum.back() = 1.0;
  return cum;
}

}  // namespace

HeatDistribution EmpiricalHeat::distribution() const {
  HeatDistribution dist;
  for (std::size_t i = 0; i < q.size(); ++i)
    dist.atoms.push_back(
        {q[i], static_cast<double>(counts[i]) / static_cast<double>(n_samples)});
  return dist;
}

EmpiricalHeat mc_sample_heat(const Operator& u, const DensityMatrix& rho_s0,
                             const Operator& h_env, Beta beta,
                             std::int64_t n_samples, std::uint64_t seed) {
  if (n_samples < 1)
    throw std::invalid_argument("mc_sample_heat: n_samples must be >= 1");
  if (!is_unitary(u.mat))
    throw std::invalid_argument("mc_sample_heat: u must be unitary");
  const int ds = rho_s0.dim();
  const int de = h_env.dim();
  if (u.dim() != ds * de)
    throw std::invalid_argument("mc_sample_heat: dimension mismatch");

  // System eigenpairs of rho_S(0).
  const EigenSystem sys = eigensystem_hermitian(rho_s0.matrix());
  std::vector<int> sys_index;
  std::vector<double> sys_weight;
  for (int j = 0; j < ds; ++j) {
    if (sys.values(j) > 1e-14) {
      sys_index.push_back(j);
      sys_weight.push_back(sys.values(j));
    }
  }

  // Environment eigenvectors with individual Gibbs weights, plus the level
  // clustering used to report outcomes.
  const EigenSystem env = eigensystem_hermitian(h_env.mat);
  const EnvSpectrum spectrum = env_spectrum(h_env);
  const double e_min = env.values.minCoeff();
  std::vector<double> env_weight(static_cast<std::size_t>(de));
  for (int v = 0; v < de; ++v) {
    if (beta.is_infinite()) {
      const double cluster = spectrum.binning_tolerance();
      env_weight[static_cast<std::size_t>(v)] =
          (env.values(v) - e_min <= cluster) ? 1.0 : 0.0;
    } else {
      env_weight[static_cast<std::size_t>(v)] =
          std::exp(-beta.value() * (env.values(v) - e_min));
    }
  }
  // Cluster index of each environment eigenvector.
  std::vector<int> level_of(static_cast<std::size_t>(de));
  for (int v = 0; v < de; ++v) {
    int best = 0;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < spectrum.levels.size(); ++l) {
      const double d = std::abs(env.values(v) - spectrum.levels[l].energy);
      if (d < dist) {
        dist = d;
        best = static_cast<int>(l);
      }
    }
    level_of[static_cast<std::size_t>(v)] = best;
  }

  const auto sys_cum = cumulative_from(sys_weight);
  const auto env_cum = cumulative_from(env_weight);
  const int n_levels = static_cast<int>(spectrum.levels.size());

  // Born probabilities of each final level for every (j, v) branch, so a
  // sample is three table lookups.
  std::vector<std::vector<double>> outcome_cum(
      sys_index.size() * static_cast<std::size_t>(de));
  for (std::size_t js = 0; js < sys_index.size(); ++js) {
    const Vector ket_sys = sys.vectors.col(sys_index[js]);
    for (int v = 0; v < de; ++v) {
      Vector psi0 = Vector::Zero(ds * de);
      for (int s = 0; s < ds; ++s)
        for (int e = 0; e < de; ++e)
          psi0(s * de + e) = ket_sys(s) * env.vectors(e, v);
      const Vector psi = u.mat * psi0;
      std::vector<double> probs(static_cast<std::size_t>(n_levels), 0.0);
      for (int l = 0; l < n_levels; ++l) {
        const Matrix proj = kron(Matrix::Identity(ds, ds),
                                 spectrum.levels[static_cast<std::size_t>(l)]
                                     .projector);
        probs[static_cast<std::size_t>(l)] =
            (psi.adjoint() * proj * psi)(0, 0).real();
      }
      outcome_cum[js * static_cast<std::size_t>(de) +
                  static_cast<std::size_t>(v)] = cumulative_from(probs);
    }
  }

  // Count (initial level, final level) pairs chunk by chunk.
  std::map<std::pair<int, int>, std::int64_t> pair_counts;
  const std::int64_t n_chunks = (n_samples + kChunkSize - 1) / kChunkSize;
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(c)));
    const std::int64_t in_chunk =
        std::min(kChunkSize, n_samples - c * kChunkSize);
    for (std::int64_t i = 0; i < in_chunk; ++i) {
      const int js = pick(sys_cum, uniform01(rng));
      const int v = pick(env_cum, uniform01(rng));
      const int m = pick(outcome_cum[static_cast<std::size_t>(js) *
                                         static_cast<std::size_t>(de) +
                                     static_cast<std::size_t>(v)],
                         uniform01(rng));
      const int n = level_of[static_cast<std::size_t>(v)];
      ++pair_counts[{n, m}];
    }
  }

  // Aggregate to heat values with the same binning as the exact route.
  std::vector<std::pair<double, std::int64_t>> q_counts;
  for (const auto& [key, count] : pair_counts) {
    const double q = spectrum.levels[static_cast<std::size_t>(key.second)]
                         .energy -
                     spectrum.levels[static_cast<std::size_t>(key.first)]
                         .energy;
    q_counts.emplace_back(q, count);
  }
  std::sort(q_counts.begin(), q_counts.end());

  EmpiricalHeat out;
  out.n_samples = n_samples;
  const double tolerance = spectrum.binning_tolerance();
  for (const auto& [q, count] : q_counts) {
    if (!out.q.empty() && q - out.q.back() <= tolerance) {
      out.counts.back() += count;
    } else {
      out.q.push_back(q);
      out.counts.push_back(count);
    }
  }
  return out;
}

}  // namespace heatcount
