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

#include "heatcount/master_equation.hpp"

#include "heatcount/linalg.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace heatcount {

namespace {

const Complex kI(0.0, 1.0);

void require_cold_environment(const ModelParams& p, const char* who) {
  if (!p.beta.is_infinite())
    throw std::invalid_argument(
        std::string(who) +
        ": the master equation is defined for beta = infinity only");
}

Matrix dissipator(const Matrix& l, const Matrix& rho) {
  const Matrix ldl = l.adjoint() * l;
  return l * rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl);
}

}  // namespace

MECoefficients me_coefficients(const ModelParams& p, double t) {
  require_cold_environment(p, "me_coefficients");
  const double w = p.typical_frequency();
  if (w == 0.0) return {0.0, 0.0, 0.0, 0.0, 0.0, -1.0};

  const double j2 = p.J * p.J;
  const double cwt = std::cos(w * t), swt = std::sin(w * t);
  const double den = w * w - 4.0 * j2 * (1.0 - cwt);
  if (std::abs(den) <= 1e-12 * w * w) {
    std::ostringstream os;
    os << "me_coefficients: coefficient pole at t = " << first_pole_time(p)
       << " (requested t = " << t << ")";
    throw NumericalError(os.str());
  }

  MECoefficients c{};
  c.a = 2.0 * j2 * p.omega1 * (1.0 - cwt) / den;
  c.b = 4.0 * j2 * w * swt / den;
  const double root = std::sqrt(c.b * c.b + 4.0 * c.a * c.a);
  c.d1 = c.b - root;
  c.d2 = c.b + root;

  // v_+- closed forms; the a -> 0 limits keep G_- and H_-
  // orthogonal on both sides of b = 0.
  const double scale = std::max({std::abs(c.b), std::abs(c.a), 1e-300});
  if (std::abs(c.a) <= 1e-14 * scale) {
    if (c.b >= 0.0) {
      c.v_plus = 0.0;
      c.v_minus = -1.0;
    } else {
      c.v_plus = 1.0;
      c.v_minus = 0.0;
    }
  } else {
    c.v_plus =
        std::sqrt(2.0) * c.a /
        std::sqrt(c.b * (c.b + root) + 4.0 * c.a * c.a);
    c.v_minus =
        -std::sqrt(2.0) * c.a /
        std::sqrt(c.b * (c.b - root) + 4.0 * c.a * c.a);
  }
  return c;
}

double first_pole_time(const ModelParams& p) {
  const double w = p.typical_frequency();
  if (p.J == 0.0 || w == 0.0) return std::numeric_limits<double>::infinity();
  const double c_star = 1.0 - w * w / (4.0 * p.J * p.J);
  if (c_star < -1.0) return std::numeric_limits<double>::infinity();
  return std::acos(c_star) / w;
}

std::vector<double> pole_times_in(const ModelParams& p, double t0, double t1) {
  std::vector<double> poles;
  const double w = p.typical_frequency();
  const double tp = first_pole_time(p);
  if (!std::isfinite(tp)) return poles;
  const double period = 2.0 * M_PI / w;
  // Poles sit at +-tp modulo the period.
  for (int k = 0;; ++k) {
    const double base = k * period;
    const double candidates[2] = {base + tp, base + period - tp};
    bool beyond = true;
    for (double c : candidates) {
      if (c > t1) continue;
      beyond = false;
      if (c > t0) poles.push_back(c);
    }
    if (beyond && base > t1) break;
  }
  // Omega1 = 2J puts the two per-period poles on top of each other.
  poles.erase(std::unique(poles.begin(), poles.end(),
                          [period](double x, double y) {
                            return std::abs(x - y) < 1e-12 * period;
                          }),
              poles.end());
  return poles;
}

Matrix me_g_minus(const MECoefficients& c) {
  // The v_- component enters with +v_-: that sign is forced by
  // Tr[G^dag H] = 0 (v_+^2 + v_-^2 = 1 identically) and by the exact
  // reduced dynamics, which the d1 channel must reproduce.
  Matrix g = Matrix::Zero(3, 3);
  g(1, 2) = c.v_minus;
  g(0, 2) = kI * std::sqrt(std::max(0.0, 1.0 - c.v_minus * c.v_minus));
  return g;
}

Matrix me_h_minus(const MECoefficients& c) {
  Matrix h = Matrix::Zero(3, 3);
  h(1, 2) = c.v_plus;
  h(0, 2) = kI * std::sqrt(std::max(0.0, 1.0 - c.v_plus * c.v_plus));
  return h;
}

Matrix me_hamiltonian(const ModelParams& p) {
  return p.omega1 * vop::s_x(1);
}

LindbladSet me_lindblad_set(const ModelParams& p, double t) {
  const MECoefficients c = me_coefficients(p, t);
  LindbladSet set;
  set.h_eff = me_hamiltonian(p);
  const double quantum = 2.0 * p.B;
  set.jumps.push_back({me_g_minus(c), c.d1, quantum});
  set.jumps.push_back({me_h_minus(c), c.d2, quantum});
  return set;
}

Matrix me_rhs(const ModelParams& p, const Matrix& rho, double t) {
  const LindbladSet set = me_lindblad_set(p, t);
  Matrix rhs = -kI * (set.h_eff * rho - rho * set.h_eff);
  for (const auto& jump : set.jumps)
    rhs += jump.rate * dissipator(jump.op, rho);
  return rhs;
}

namespace {

using OdeState = std::vector<Complex>;

OdeState to_state(const Matrix& m) {
  OdeState s(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s[static_cast<std::size_t>(3 * i + j)] = m(i, j);
  return s;
}

Matrix from_state(const OdeState& s) {
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = s[static_cast<std::size_t>(3 * i + j)];
  return m;
}

}  // namespace

Matrix me_evolve(const ModelParams& p, const Matrix& rho0, double t0,
                 double t1) {
  require_cold_environment(p, "me_evolve");
  if (!(t1 >= t0)) throw std::invalid_argument("me_evolve: t1 < t0");
  if (!pole_times_in(p, t0, t1).empty()) {
    std::ostringstream os;
    os << "me_evolve: coefficient pole inside [" << t0 << ", " << t1 << "]";
    throw NumericalError(os.str());
  }
  if (t1 == t0) return rho0;

  namespace odeint = boost::numeric::odeint;
  using Stepper = odeint::runge_kutta_dopri5<OdeState>;

  OdeState state = to_state(rho0);
  const auto rhs = [&p](const OdeState& x, OdeState& dxdt, double t) {
    dxdt = to_state(me_rhs(p, from_state(x), t));
  };
  odeint::integrate_adaptive(odeint::make_controlled<Stepper>(1e-12, 1e-9),
                             rhs, state, t0, t1, (t1 - t0) / 1000.0);
  return from_state(state);
}

Matrix me_evolve_across_poles(const ModelParams& p, const Matrix& rho0,
                              double t) {
  require_cold_environment(p, "me_evolve_across_poles");
  const DensityMatrix rho0_dm(rho0, HilbertSpace::single(3));

  std::vector<double> poles = pole_times_in(p, 0.0, t + 1.0);
  double window_start = 0.0;
  Matrix start_state = rho0;
  for (double pole : poles) {
    if (pole >= t) break;
    const double margin = 0.1 * (pole - window_start);
    if (t <= pole - margin)
      return me_evolve(p, start_state, window_start, t);
    // Jump the pole: restart from the exact unitary solution at a safe point
    // past it. The exact route is valid for any system state at beta = inf.
    const double next = pole + margin;
    if (t < next) return reduced_state(p, rho0_dm, t).matrix();
    start_state = reduced_state(p, rho0_dm, next).matrix();
    window_start = next;
  }
  return me_evolve(p, start_state, window_start, t);
}

}  // namespace heatcount
