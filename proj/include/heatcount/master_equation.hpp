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

#ifndef HEATCOUNT_MASTER_EQUATION_HPP
#define HEATCOUNT_MASTER_EQUATION_HPP

#include "heatcount/types.hpp"
#include "heatcount/vmodel.hpp"

#include <vector>

namespace heatcount {

// Exact time-local master equation of the V-system for an initially cold
// environment (beta = infinity): a pump Hamiltonian on the 0-1 transition
// plus two time-dependent lowering channels out of |2>. The rate d1(t) is
// negative wherever it is active; the evolution is non-Markovian and no
// complete positivity of intermediate maps is enforced.

/// Shared coefficients of the master equation. a and b diverge where the
/// no-flip amplitude of the 0-2 exchange vanishes; d1 <= 0 <= d2 wherever
/// b >= 0; at omega1 = 0, a = 0 and b = 2 J tan(2 J t).
struct MECoefficients {
  double a;
  double b;
  double d1;
  double d2;
  double v_plus;
  double v_minus;
};

MECoefficients me_coefficients(const ModelParams& p, double t);

/// A Hamiltonian plus jump channels, each carrying its rate and the heat
/// quantum one jump deposits in the environment.
struct LindbladSet {
  struct Jump {
    Matrix op;
    double rate;
    double heat_quantum;
  };
  Matrix h_eff;
  std::vector<Jump> jumps;
};

/// The exact equation of motion at time t as a Lindblad set: the 0-1 pump
/// plus the two lowering channels at rates d1(t) <= 0 <= d2(t).
LindbladSet me_lindblad_set(const ModelParams& p, double t);

/// First time at which the shared denominator vanishes; +infinity when the
/// pump is strong enough (omega1 > 2J) that no pole exists.
double first_pole_time(const ModelParams& p);

/// Pole times inside (t0, t1].
std::vector<double> pole_times_in(const ModelParams& p, double t0, double t1);

/// Jump operators G_-(t), H_-(t): unit Frobenius norm, mutually orthogonal
/// combinations of the |2> -> |1| and |2> -> |0> lowering operators.
Matrix me_g_minus(const MECoefficients& c);
Matrix me_h_minus(const MECoefficients& c);

/// Pump Hamiltonian of the master equation (the 0-1 drive).
Matrix me_hamiltonian(const ModelParams& p);

/// Right-hand side of the master equation at time t. Traceless output.
Matrix me_rhs(const ModelParams& p, const Matrix& rho, double t);

/// Integrate the master equation from t0 to t1 with an adaptive
/// Runge-Kutta scheme (rel 1e-9, abs 1e-12). Throws NumericalError if a
/// coefficient pole lies inside the window.
Matrix me_evolve(const ModelParams& p, const Matrix& rho0, double t0,
                 double t1);

/// State at time t for evolutions that cross coefficient poles: integration
/// restarts from the exact unitary solution past each pole instead of
/// integrating through it. Margins of 10% of each pole-free window are kept.
Matrix me_evolve_across_poles(const ModelParams& p, const Matrix& rho0,
                              double t);

}  // namespace heatcount

#endif  // HEATCOUNT_MASTER_EQUATION_HPP
