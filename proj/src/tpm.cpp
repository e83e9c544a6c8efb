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

#include "heatcount/tpm.hpp"

#include "heatcount/entropy.hpp"
#include "heatcount/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace heatcount {

EnvSpectrum env_spectrum(const Operator& h_env) {
  if (!is_hermitian(h_env.mat))
    throw std::invalid_argument("env_spectrum: Hamiltonian must be Hermitian");
  const EigenSystem es = eigensystem_hermitian(h_env.mat);
  const int n = static_cast<int>(es.values.size());

  EnvSpectrum out;
  out.width = es.values(n - 1) - es.values(0);
  const double cluster = 1e-9 * (out.width > 0.0 ? out.width : 1.0);

  int k = 0;
  while (k < n) {
    int j = k;
    while (j + 1 < n && es.values(j + 1) - es.values(k) <= cluster) ++j;
    const int rank = j - k + 1;
    Matrix proj = Matrix::Zero(n, n);
    double energy = 0.0;
    for (int i = k; i <= j; ++i) {
      proj += es.vectors.col(i) * es.vectors.col(i).adjoint();
      energy += es.values(i);
    }
    out.levels.push_back({energy / rank, rank, std::move(proj)});
    k = j + 1;
  }
  return out;
}

JointOutcomeDistribution joint_distribution(const Operator& u,
                                            const DensityMatrix& rho_s0,
                                            const Operator& h_env, Beta beta) {
  if (!is_unitary(u.mat))
    throw std::invalid_argument("joint_distribution: u must be unitary");
  const int ds = rho_s0.dim();
  const int de = h_env.dim();
  if (u.dim() != ds * de)
    throw std::invalid_argument(
        "joint_distribution: dimension mismatch between u and rho_s0 (x) env");

  const EnvSpectrum spectrum = env_spectrum(h_env);
  const ThermalState ts = thermal_state(h_env, beta);
  const Matrix eye_s = Matrix::Identity(ds, ds);

  JointOutcomeDistribution out;
  out.binning_tolerance = spectrum.binning_tolerance();
  for (const auto& level : spectrum.levels)
    out.env_levels.emplace_back(level.energy, level.rank);

  for (const auto& initial : spectrum.levels) {
    // First measurement projects the Gibbs state onto the level; the Gibbs
    // weight of the cluster rides along unnormalized.
    const Matrix env_part =
        initial.projector * ts.rho.matrix() * initial.projector;
    const Matrix evolved =
        u.mat * kron(rho_s0.matrix(), env_part) * u.mat.adjoint();
    for (const auto& outcome : spectrum.levels) {
      const double prob =
          (kron(eye_s, outcome.projector) * evolved).trace().real();
      out.entries.push_back({initial.energy, outcome.energy, prob});
    }
  }
  return out;
}

double HeatDistribution::total_probability() const {
  double s = 0.0;
  for (const auto& atom : atoms) s += atom.prob;
  return s;
}

HeatDistribution heat_distribution(const JointOutcomeDistribution& joint) {
  std::vector<std::pair<double, double>> q_and_p;
  q_and_p.reserve(joint.entries.size());
  for (const auto& e : joint.entries)
    q_and_p.emplace_back(e.e_final - e.e_initial, e.prob);
  std::sort(q_and_p.begin(), q_and_p.end());

  HeatDistribution out;
  const double tolerance =
      joint.binning_tolerance > 0.0 ? joint.binning_tolerance : 1e-12;
  for (const auto& [q, p] : q_and_p) {
    if (!out.atoms.empty() && q - out.atoms.back().q <= tolerance) {
      // Merge degenerate gaps; gaps are exact in the models but float-noisy
      // after eigensolves.
      out.atoms.back().prob += p;
    } else {
      out.atoms.push_back({q, p});
    }
  }
  // Born probabilities are quadratic forms, so outcomes that vanish exactly
  // show up as ~1e-32 projector noise; drop those, never physical weights.
  std::erase_if(out.atoms, [](const HeatDistribution::Atom& a) {
    return a.prob <= 1e-30;
  });
  return out;
}

double cgf_from_distribution(const HeatDistribution& dist, double eta) {
  double max_exponent = -std::numeric_limits<double>::infinity();
  for (const auto& atom : dist.atoms) {
    if (atom.prob <= 0.0) continue;
    max_exponent = std::max(max_exponent, -eta * atom.q);
  }
  if (!std::isfinite(max_exponent))
    throw std::invalid_argument("cgf_from_distribution: empty distribution");

  double acc = 0.0;
  for (const auto& atom : dist.atoms) {
    if (atom.prob <= 0.0) continue;
    acc += atom.prob * std::exp(-eta * atom.q - max_exponent);
  }
  return max_exponent + std::log(acc);
}

double cumulant(const HeatDistribution& dist, int order) {
  if (order < 1) throw std::invalid_argument("cumulant: order must be >= 1");

  // Raw moments, then the standard moment-to-cumulant recursion
  // kappa_n = mu_n - sum_{k=1}^{n-1} C(n-1, k-1) kappa_k mu_{n-k}.
  std::vector<double> mu(static_cast<std::size_t>(order) + 1, 0.0);
  mu[0] = dist.total_probability();
  for (int k = 1; k <= order; ++k) {
    double m = 0.0;
    for (const auto& atom : dist.atoms)
      m += atom.prob * std::pow(atom.q, k);
    mu[static_cast<std::size_t>(k)] = m;
  }

  std::vector<double> kappa(static_cast<std::size_t>(order) + 1, 0.0);
  for (int n = 1; n <= order; ++n) {
    double value = mu[static_cast<std::size_t>(n)];
    double binom = 1.0;  // C(n-1, k-1), updated multiplicatively
    for (int k = 1; k < n; ++k) {
      value -= binom * kappa[static_cast<std::size_t>(k)] *
               mu[static_cast<std::size_t>(n - k)];
      binom = binom * (n - k) / k;  // C(n-1,k) from C(n-1,k-1)
    }
    kappa[static_cast<std::size_t>(n)] = value;
  }
  return kappa[static_cast<std::size_t>(order)];
}

}  // namespace heatcount
