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

#include "heatcount/ldf.hpp"

#include "heatcount/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace heatcount {

namespace {

const Complex kI(0.0, 1.0);

void require_damping(const ModelParams& p, const char* who) {
  if (!(p.gamma > 0.0))
    throw std::invalid_argument(std::string(who) + ": gamma must be > 0");
}

Matrix unvec(const Vector& v) {
  Matrix m(3, 3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) m(i, j) = v(3 * j + i);
  return m;
}

Vector vec(const Matrix& m) {
  Vector v(9);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) v(3 * j + i) = m(i, j);
  return v;
}

}  // namespace

Matrix ldf_hamiltonian(const ModelParams& p) {
  return 2.0 * p.J * vop::s_x(2) + p.omega1 * vop::s_x(1);
}

LindbladSet damped_lindblad_set(const ModelParams& p) {
  require_damping(p, "damped_lindblad_set");
  LindbladSet set;
  set.h_eff = ldf_hamiltonian(p);
  set.jumps.push_back({vop::s_minus(2), p.gamma, 2.0 * p.B});
  return set;
}

Eigen::MatrixXcd dissipative_generator(const ModelParams& p, double eta) {
  const LindbladSet set = damped_lindblad_set(p);
  const Matrix eye = Matrix::Identity(3, 3);

  // Column-stacking convention: vec(A rho B) = (B^T (x) A) vec(rho).
  Eigen::MatrixXcd gen =
      -kI * (kron(eye, set.h_eff) - kron(set.h_eff.transpose(), eye));
  for (const auto& jump : set.jumps) {
    const Matrix loss = jump.op.adjoint() * jump.op;
    gen += jump.rate * std::exp(-eta * jump.heat_quantum) *
           kron(jump.op.conjugate(), jump.op);
    gen -= 0.5 * jump.rate *
           (kron(eye, loss) + kron(loss.transpose(), eye));
  }
  return gen;
}

double ldf_theta(const ModelParams& p, double eta) {
  if (eta == 0.0) return 0.0;  // trace-preserving generator, exactly
  const Eigen::MatrixXcd gen = dissipative_generator(p, eta);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(gen);
  if (solver.info() != Eigen::Success)
    throw NumericalError("ldf_theta: eigensolver failed");
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k)
    best = std::max(best, solver.eigenvalues()(k).real());
  return best;
}

Matrix ldf_steady_state(const ModelParams& p) {
  const Eigen::MatrixXcd gen = dissipative_generator(p, 0.0);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(gen);
  if (solver.info() != Eigen::Success)
    throw NumericalError("ldf_steady_state: eigensolver failed");
  Eigen::Index which = 0;
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double mag = std::abs(solver.eigenvalues()(k));
    if (mag < best) {
      best = mag;
      which = k;
    }
  }
  Matrix rho = unvec(solver.eigenvectors().col(which));
  rho = 0.5 * (rho + rho.adjoint().eval());
  const double tr = rho.trace().real();
  if (std::abs(tr) < 1e-12)
    throw NumericalError("ldf_steady_state: traceless null vector");
  return rho / tr;
}

double stationary_heat_current(const ModelParams& p) {
  const Matrix rho = ldf_steady_state(p);
  return p.gamma * (2.0 * p.B) * rho(2, 2).real();
}

LDFCurve ldf(const ModelParams& p, const std::vector<double>& eta_grid) {
  require_damping(p, "ldf");
  LDFCurve curve;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double eta : eta_grid) {
    const double theta = ldf_theta(p, eta);
    curve.etas.push_back(eta);
    curve.theta.push_back(theta);
    curve.lower_stationary.push_back(eta > 0.0 ? -theta / eta : nan);
    curve.upper_stationary.push_back(eta < 0.0 ? theta / std::abs(eta) : nan);
  }
  const double delta = 1e-3;
  curve.kink =
      ldf_theta(p, delta) / delta + ldf_theta(p, -delta) / delta;
  return curve;
}

double finite_time_cgf_slope(const ModelParams& p, double eta, double t_max) {
  require_damping(p, "finite_time_cgf_slope");
  if (!(t_max > 0.0))
    throw std::invalid_argument("finite_time_cgf_slope: t_max must be > 0");

  const Eigen::MatrixXcd gen = dissipative_generator(p, eta);
  const Vector rho0 = vec(initial_density(p).matrix());

  const auto log_trace_at = [&](double t) {
    const Eigen::MatrixXcd propagated = (gen * t).exp();
    const Matrix rho = unvec(propagated * rho0);
    const double tr = rho.trace().real();
    if (!(tr > 0.0) || !std::isfinite(tr))
      throw NumericalError("finite_time_cgf_slope: non-positive trace");
    return std::log(tr);
  };

  const double half = 0.5 * t_max;
  return (log_trace_at(t_max) - log_trace_at(half)) / half;
}

}  // namespace heatcount
