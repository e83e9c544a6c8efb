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

#include "heatcount/vmodel.hpp"

#include "heatcount/entropy.hpp"
#include "heatcount/linalg.hpp"

#include <cmath>

namespace heatcount {

namespace {

const Complex kI(0.0, 1.0);

HilbertSpace v_space() { return HilbertSpace({3, 2}); }

void require_initial_state_two(const ModelParams& p, const char* who) {
  const Vector psi = initial_system_state(p);
  if (std::abs(std::abs(psi(2)) - 1.0) > 1e-10)
    throw std::invalid_argument(std::string(who) +
                                ": closed form requires rho_S(0) = |2><2|");
}

// Maximize f on [a, b] by golden-section search; f is assumed unimodal on the
// bracket handed over by the coarse scan.
double golden_max(const std::function<double(double)>& f, double a, double b,
                  double tol_t) {
  const double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol_t) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double ModelParams::typical_frequency() const {
  return std::sqrt(4.0 * J * J + omega1 * omega1);
}

namespace vop {

Matrix s_x(int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("vop: j must be 1 or 2");
  Matrix m = Matrix::Zero(3, 3);
  m(0, j) = 1.0;
  m(j, 0) = 1.0;
  return m;
}

Matrix s_y(int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("vop: j must be 1 or 2");
  Matrix m = Matrix::Zero(3, 3);
  m(0, j) = kI;
  m(j, 0) = -kI;
  return m;
}

Matrix s_z(int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("vop: j must be 1 or 2");
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(j, j) = -1.0;
  return m;
}

Matrix s_plus(int j) {
  Matrix m = Matrix::Zero(3, 3);
  m(j, 0) = 1.0;
  return m;
}

Matrix s_minus(int j) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, j) = 1.0;
  return m;
}

Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix sigma_y() {
  Matrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Matrix sigma_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

Matrix sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

}  // namespace vop

Matrix system_hamiltonian(const ModelParams& p) { return -p.B * vop::s_z(2); }

Matrix env_hamiltonian(const ModelParams& p) { return -p.B * vop::sigma_z(); }

Operator env_hamiltonian_op(const ModelParams& p) {
  return Operator(env_hamiltonian(p), HilbertSpace::single(2));
}

Operator interaction_hamiltonian(const ModelParams& p) {
  // Excitation-preserving XX coupling: |2,0_E> <-> |0,1_E| at amplitude 2J.
  const Matrix xx = 2.0 * p.J *
                    (kron(vop::s_plus(2), vop::sigma_minus()) +
                     kron(vop::s_minus(2), vop::sigma_plus()));
  const Matrix pump = p.omega1 * kron(vop::s_x(1), Matrix::Identity(2, 2));
  return Operator(xx + pump, v_space());
}

VPropagator::VPropagator(const ModelParams& p)
    : space_(v_space()) {
  const EigenSystem es = eigensystem_hermitian(interaction_hamiltonian(p).mat);
  values_ = es.values;
  vectors_ = es.vectors;
}

Operator VPropagator::at(double t) const {
  Vector phases(values_.size());
  for (Eigen::Index k = 0; k < values_.size(); ++k)
    phases(k) = std::exp(Complex(0.0, -values_(k) * t));
  return Operator(vectors_ * phases.asDiagonal() * vectors_.adjoint(),
                  space_);
}

Vector initial_system_state(const ModelParams& p) {
  Vector psi(3);
  psi << std::cos(p.phi), std::sin(p.phi) * std::sin(p.alpha),
      std::sin(p.phi) * std::cos(p.alpha);
  return psi;
}

DensityMatrix initial_density(const ModelParams& p) {
  const Vector psi = initial_system_state(p);
  return DensityMatrix(psi * psi.adjoint(), HilbertSpace::single(3));
}

DensityMatrix reduced_state(const ModelParams& p, const DensityMatrix& rho_s0,
                            double t) {
  const ThermalState ts = thermal_state(env_hamiltonian_op(p), p.beta);
  const Operator u = VPropagator(p).at(t);
  const Operator rho_se(
      u.mat * kron(rho_s0.matrix(), ts.rho.matrix()) * u.mat.adjoint(),
      v_space());
  return DensityMatrix(partial_trace(rho_se, 0));
}

std::array<double, 3> populations(const ModelParams& p, double t) {
  const DensityMatrix rho = reduced_state(p, initial_density(p), t);
  return {rho.matrix()(0, 0).real(), rho.matrix()(1, 1).real(),
          rho.matrix()(2, 2).real()};
}

HeatDistribution vmodel_heat_distribution(const ModelParams& p, double t) {
  const Operator u = VPropagator(p).at(t);
  return heat_distribution(
      joint_distribution(u, initial_density(p), env_hamiltonian_op(p), p.beta));
}

double mean_heat_closed(const ModelParams& p, double t) {
  require_initial_state_two(p, "mean_heat_closed");
  const double w = p.typical_frequency();
  if (w == 0.0) return 0.0;
  const double th = p.beta.tanh_of(p.B);
  const double s2 = std::pow(std::sin(0.5 * w * t), 2);
  return (1.0 + th) * 16.0 * p.B * p.J * p.J * s2 *
         (w * w - 4.0 * p.J * p.J * s2) / (w * w * w * w);
}

double cgf_closed(const ModelParams& p, double eta, double t) {
  require_initial_state_two(p, "cgf_closed");
  const double w = p.typical_frequency();
  if (w == 0.0) return 0.0;
  const double th = p.beta.tanh_of(p.B);
  const double w2 = w * w, w4 = w2 * w2;
  const double j2 = p.J * p.J, om2 = p.omega1 * p.omega1;
  const double s2 = std::pow(std::sin(0.5 * w * t), 2);
  const double swt = std::sin(w * t), cwt = std::cos(w * t);
  const double damped = std::exp(-2.0 * p.B * eta);
  const double numerator = 16.0 * j2 * om2 * damped * s2 * s2 +
                           4.0 * j2 * w2 * damped * swt * swt +
                           std::pow(4.0 * j2 * cwt + om2, 2);
  return std::log((1.0 + th) * numerator / (2.0 * w4) + 0.5 * (1.0 - th));
}

double non_unitality_closed(const ModelParams& p, double t) {
  require_initial_state_two(p, "non_unitality_closed");
  const double w = p.typical_frequency();
  if (w == 0.0) return 0.0;
  const double s2 = std::pow(std::sin(0.5 * w * t), 2);
  return 16.0 * std::sqrt(2.0) * p.J * p.J * s2 *
         (w * w - 4.0 * p.J * p.J * s2) / (w * w * w * w);
}

GapScan gap_scan(const ModelParams& p, const std::vector<double>& omega1_grid,
                 double t_min, double t_max, int t_steps) {
  if (omega1_grid.empty())
    throw std::invalid_argument("gap_scan: empty omega1 grid");
  if (t_steps < 2 || !(t_max > t_min))
    throw std::invalid_argument("gap_scan: invalid time grid");
  if (p.beta.is_infinite() || !(p.beta.value() > 0.0))
    throw std::invalid_argument(
        "gap_scan: finite positive inverse temperature required");

  GapScan scan;
  scan.t_min = t_min;
  scan.t_max = t_max;
  scan.t_steps = t_steps;
  const double beta = p.beta.value();
  const double dt = (t_max - t_min) / (t_steps - 1);

  for (double omega1 : omega1_grid) {
    ModelParams q = p;
    q.omega1 = omega1;
    const VPropagator prop(q);
    const DensityMatrix rho0 = initial_density(q);
    const Operator h_env = env_hamiltonian_op(q);

    const auto heat_and_bound = [&](double t) {
      const HeatDistribution dist = heat_distribution(
          joint_distribution(prop.at(t), rho0, h_env, q.beta));
      const double beta_q = beta * cumulant(dist, 1);
      const double bound = -cgf_from_distribution(dist, beta);
      return std::pair<double, double>(beta_q, bound);
    };

    // Coarse scan.
    int best_q = 0, best_b = 0;
    double max_q = -std::numeric_limits<double>::infinity();
    double max_b = max_q;
    for (int k = 0; k < t_steps; ++k) {
      const auto [bq, bb] = heat_and_bound(t_min + k * dt);
      if (bq > max_q) {
        max_q = bq;
        best_q = k;
      }
      if (bb > max_b) {
        max_b = bb;
        best_b = k;
      }
    }

    // Golden-section refinement around the best coarse points.
    const auto refine = [&](int best, const std::function<double(double)>& f) {
      const double a = t_min + std::max(0, best - 1) * dt;
      const double b = t_min + std::min(t_steps - 1, best + 1) * dt;
      const double t_star = golden_max(f, a, b, 1e-10);
      return f(t_star);
    };
    const double refined_q =
        refine(best_q, [&](double t) { return heat_and_bound(t).first; });
    const double refined_b =
        refine(best_b, [&](double t) { return heat_and_bound(t).second; });

    scan.omega1_values.push_back(omega1);
    scan.max_beta_mean_q.push_back(refined_q);
    scan.max_bound.push_back(refined_b);
    scan.d_values.push_back(refined_q - refined_b);
  }
  return scan;
}

}  // namespace heatcount
