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

#include "heatcount/entropy.hpp"

#include "heatcount/linalg.hpp"

#include <cmath>
#include <limits>

namespace heatcount {

namespace {
// Eigenvalues below this are treated as exactly zero in entropy sums.
constexpr double kEntropyCutoff = 1e-14;
// Relative support cutoff for the relative entropy.
constexpr double kSupportCutoff = 1e-12;
}  // namespace

ThermalState thermal_state(const Operator& h_env, Beta beta) {
  if (!is_hermitian(h_env.mat))
    throw std::invalid_argument("thermal_state: Hamiltonian must be Hermitian");

  const EigenSystem es = eigensystem_hermitian(h_env.mat);
  const int n = static_cast<int>(es.values.size());
  const double e_min = es.values.minCoeff();

  Eigen::VectorXd weights(n);
  if (beta.is_infinite()) {
    // Normalized projector onto the ground space. Cluster tolerance matches
    // the heat-binning convention used elsewhere.
    const double width = es.values.maxCoeff() - e_min;
    const double cluster = 1e-9 * (width > 0.0 ? width : 1.0);
    for (int k = 0; k < n; ++k)
      weights(k) = (es.values(k) - e_min <= cluster) ? 1.0 : 0.0;
  } else {
    for (int k = 0; k < n; ++k)
      weights(k) = std::exp(-beta.value() * (es.values(k) - e_min));
  }
  const double z_shifted = weights.sum();

  const Vector diag = (weights / z_shifted).cast<Complex>();
  Matrix rho = es.vectors * diag.asDiagonal() * es.vectors.adjoint();
  rho = 0.5 * (rho + rho.adjoint().eval());

  double z;
  if (beta.is_infinite()) {
    z = z_shifted;  // limit of the shifted partition sum: ground degeneracy
  } else {
    z = std::exp(std::log(z_shifted) - beta.value() * e_min);
  }

  return ThermalState{DensityMatrix(rho, h_env.space), beta, z,
                      weights.maxCoeff() / z_shifted};
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const EigenSystem es = eigensystem_hermitian(rho.matrix());
  double s = 0.0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    const double p = es.values(k);
    if (p > kEntropyCutoff) s -= p * std::log(p);
  }
  return s;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("relative_entropy: dimension mismatch");

  const EigenSystem er = eigensystem_hermitian(rho.matrix());
  const EigenSystem es = eigensystem_hermitian(sigma.matrix());

  // Support condition: weight of rho on the null space of sigma.
  const double sigma_scale = es.values.maxCoeff();
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    if (es.values(k) > kSupportCutoff * sigma_scale) continue;
    const Vector v = es.vectors.col(k);
    const double overlap = (v.adjoint() * rho.matrix() * v)(0, 0).real();
    if (overlap > kSupportCutoff)
      return std::numeric_limits<double>::infinity();
  }

  double trace_rho_log_rho = 0.0;
  for (Eigen::Index k = 0; k < er.values.size(); ++k) {
    const double p = er.values(k);
    if (p > kEntropyCutoff) trace_rho_log_rho += p * std::log(p);
  }

  // Tr[rho ln sigma] evaluated in the eigenbasis of sigma; eigenvalues on the
  // null space carry no rho weight by the support check above.
  double trace_rho_log_sigma = 0.0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    const double q = es.values(k);
    if (q <= kEntropyCutoff) continue;
    const Vector v = es.vectors.col(k);
    const double w = (v.adjoint() * rho.matrix() * v)(0, 0).real();
    trace_rho_log_sigma += w * std::log(q);
  }

  return trace_rho_log_rho - trace_rho_log_sigma;
}

double mutual_information(const DensityMatrix& rho_ab) {
  if (rho_ab.space().factors() != 2)
    throw std::invalid_argument(
        "mutual_information: bipartite factorization required");
  const DensityMatrix rho_a(partial_trace(rho_ab.op(), 0));
  const DensityMatrix rho_b(partial_trace(rho_ab.op(), 1));
  return von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) -
         von_neumann_entropy(rho_ab);
}

}  // namespace heatcount
