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

#include "heatcount/bounds.hpp"

#include "heatcount/entropy.hpp"
#include "heatcount/linalg.hpp"

#include <cmath>

namespace heatcount {

namespace {

// System eigenstates of rho_S(0) with weight above the Kraus-branch cutoff.
constexpr double kBranchCutoff = 1e-14;

HilbertSpace composite_space(int ds, int de) {
  return HilbertSpace({ds, de});
}

// (1_S (x) e^{s H_E}) U (1_S (x) e^{-s H_E}), with the exponentials taken in
// the environment eigenbasis.
Matrix dress_with_env_exponential(const Operator& u, const Operator& h_env,
                                  int ds, double s) {
  const Matrix left = kron(Matrix::Identity(ds, ds),
                           exp_hermitian(h_env.mat, s));
  const Matrix right = kron(Matrix::Identity(ds, ds),
                            exp_hermitian(h_env.mat, -s));
  return left * u.mat * right;
}

}  // namespace

double cgf_tilted(const Operator& u, const DensityMatrix& rho_s0,
                  const Operator& h_env, Beta beta, double eta) {
  if (!is_unitary(u.mat))
    throw std::invalid_argument("cgf_tilted: u must be unitary");
  const int ds = rho_s0.dim();
  const int de = h_env.dim();
  if (u.dim() != ds * de)
    throw std::invalid_argument("cgf_tilted: dimension mismatch");

  const ThermalState ts = thermal_state(h_env, beta);
  const Matrix tilted = dress_with_env_exponential(u, h_env, ds, -eta / 2.0);
  const Matrix rho0 = kron(rho_s0.matrix(), ts.rho.matrix());
  const double trace = (tilted * rho0 * tilted.adjoint()).trace().real();
  if (!(trace > 0.0) || !std::isfinite(trace))
    throw NumericalError("cgf_tilted: non-positive tilted trace");
  return std::log(trace);
}

std::vector<Matrix> env_kraus_operators(const Operator& u,
                                        const DensityMatrix& rho_s0) {
  if (u.space.factors() != 2)
    throw std::invalid_argument(
        "env_kraus_operators: u needs a system (x) environment factorization");
  const int ds = u.space.dim(0);
  const int de = u.space.dim(1);
  if (rho_s0.dim() != ds)
    throw std::invalid_argument("env_kraus_operators: dimension mismatch");

  const EigenSystem es = eigensystem_hermitian(rho_s0.matrix());

  std::vector<Matrix> kraus;
  for (int j = 0; j < ds; ++j) {
    const double lambda = es.values(j);
    if (lambda < kBranchCutoff) continue;
    const Vector ket = es.vectors.col(j);
    for (int i = 0; i < ds; ++i) {
      // <i|U|j> as an operator on the environment, in the eigenbasis of
      // rho_S(0) on the j side and the computational basis on the i side.
      Matrix block = Matrix::Zero(de, de);
      for (int e1 = 0; e1 < de; ++e1)
        for (int e2 = 0; e2 < de; ++e2) {
          Complex amp = 0.0;
          for (int sj = 0; sj < ds; ++sj)
            amp += u.mat(i * de + e1, sj * de + e2) * ket(sj);
          block(e1, e2) = amp;
        }
      kraus.push_back(std::sqrt(lambda) * block);
    }
  }
  return kraus;
}

ConditionalChannelOperator conditional_channel(const Operator& u,
                                               const DensityMatrix& rho_s0,
                                               const Operator& h_env,
                                               Beta beta, double eta) {
  if (!is_unitary(u.mat))
    throw std::invalid_argument("conditional_channel: u must be unitary");
  if (beta.is_infinite())
    throw std::invalid_argument(
        "conditional_channel: finite inverse temperature required");
  const int ds = rho_s0.dim();
  const int de = h_env.dim();
  if (u.dim() != ds * de)
    throw std::invalid_argument("conditional_channel: dimension mismatch");

  const Matrix conditional = dress_with_env_exponential(
      u, h_env, ds, -(eta - beta.value()) / 2.0);
  const Matrix seed = kron(rho_s0.matrix(), Matrix::Identity(de, de));
  const Operator big(conditional * seed * conditional.adjoint(),
                     composite_space(ds, de));
  Operator a_eta = partial_trace(big, 1);
  a_eta.mat = 0.5 * (a_eta.mat + a_eta.mat.adjoint().eval());
  return {std::move(a_eta), eta};
}

double cgf_from_conditional_channel(const ConditionalChannelOperator& cc,
                                    const Operator& h_env, Beta beta) {
  const ThermalState ts = thermal_state(h_env, beta);
  const double trace = (ts.rho.matrix() * cc.a_eta.mat).trace().real();
  if (!(trace > 0.0) || !std::isfinite(trace))
    throw NumericalError("cgf_from_conditional_channel: non-positive trace");
  return std::log(trace);
}

double non_unitality(const Operator& u, const DensityMatrix& rho_s0) {
  if (u.space.factors() != 2)
    throw std::invalid_argument(
        "non_unitality: u needs a system (x) environment factorization");
  const int ds = u.space.dim(0);
  const int de = u.space.dim(1);
  if (rho_s0.dim() != ds)
    throw std::invalid_argument("non_unitality: dimension mismatch");

  const Matrix seed = kron(rho_s0.matrix(), Matrix::Identity(de, de));
  const Operator big(u.mat * seed * u.mat.adjoint(), composite_space(ds, de));
  const Operator kraus_sum = partial_trace(big, 1);
  return (kraus_sum.mat - Matrix::Identity(de, de)).norm();
}

BoundReport bound_family(const std::function<double(double)>& cgf, double beta,
                         double mean_q, const std::vector<double>& etas,
                         double delta_s) {
  if (!(beta > 0.0))
    throw std::invalid_argument("bound_family: beta must be positive");

  BoundReport report;
  report.beta_mean_q = beta * mean_q;
  report.delta_s = delta_s;
  for (double eta : etas) {
    if (eta == 0.0)
      throw std::invalid_argument("bound_family: eta = 0 is not allowed");
    const double theta = cgf(eta);
    if (eta > 0.0)
      report.lower.emplace_back(eta, -(beta / eta) * theta);
    else
      report.upper.emplace_back(eta, (beta / std::abs(eta)) * theta);
  }
  return report;
}

LandauerAudit landauer_audit(const Operator& h_total,
                             const DensityMatrix& rho_s0,
                             const Operator& h_env, Beta beta, double t) {
  if (!is_hermitian(h_total.mat))
    throw std::invalid_argument("landauer_audit: h_total must be Hermitian");
  if (beta.is_infinite())
    throw std::invalid_argument(
        "landauer_audit: finite inverse temperature required");
  const int ds = rho_s0.dim();
  const int de = h_env.dim();
  if (h_total.dim() != ds * de)
    throw std::invalid_argument("landauer_audit: dimension mismatch");

  const ThermalState ts = thermal_state(h_env, beta);
  const Operator u = propagator(
      Operator(h_total.mat, composite_space(ds, de)), t);
  const Matrix rho0 = kron(rho_s0.matrix(), ts.rho.matrix());
  const Operator rho_se(u.mat * rho0 * u.mat.adjoint(),
                        composite_space(ds, de));

  const DensityMatrix rho_s_t(partial_trace(rho_se, 0));
  const DensityMatrix rho_e_t(partial_trace(rho_se, 1));
  const DensityMatrix rho_se_t(rho_se);

  const double mean_q =
      (h_env.mat * (rho_e_t.matrix() - ts.rho.matrix())).trace().real();

  LandauerAudit audit;
  audit.beta_mean_q = beta.value() * mean_q;
  audit.delta_s = von_neumann_entropy(rho_s0) - von_neumann_entropy(rho_s_t);
  audit.mutual_info = mutual_information(rho_se_t);
  audit.env_relative_entropy = relative_entropy(rho_e_t, ts.rho);
  return audit;
}

}  // namespace heatcount
