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
#include "heatcount/montecarlo.hpp"
#include "heatcount/tpm.hpp"
#include "heatcount/vmodel.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace heatcount;
namespace ht = heatcount::testing;

namespace {

// Workhorse configuration: B = J = 1, Omega1 = 0, beta = 1, t = pi/4,
// rho_S(0) = |2><2|. Heat atoms {0: 1-p, 2: p} with p = (1+tanh 1)/2.
struct VSetup {
  ModelParams p;
  Operator u;
  DensityMatrix rho0;
  Operator h_env;

  explicit VSetup(double beta = 1.0, double t = M_PI / 4.0, double omega1 = 0.0)
      : p(make_params(beta, omega1)),
        u(VPropagator(p).at(t)),
        rho0(initial_density(p)),
        h_env(env_hamiltonian_op(p)) {}

  static ModelParams make_params(double beta, double omega1) {
    ModelParams p;
    p.beta = Beta(beta);
    p.omega1 = omega1;
    return p;
  }

  HeatDistribution dist() const {
    return heat_distribution(joint_distribution(u, rho0, h_env, p.beta));
  }
};

// Pure dephasing on qubit (x) qubit: H = sz (x) sz commutes with H_E, so the
// environment channel is unital and no heat flows.
struct DephasingSetup {
  Operator h{kron(vop::sigma_z(), vop::sigma_z()), HilbertSpace({2, 2})};
  Operator u{propagator(h, 0.7)};
  DensityMatrix rho_s;
  Operator h_env{-1.0 * vop::sigma_z(), HilbertSpace::single(2)};

  DephasingSetup()
      : rho_s((Matrix(2, 2) << 0.3, Complex(0.1, 0.05), Complex(0.1, -0.05),
               0.7)
                  .finished(),
              HilbertSpace::single(2)) {}
};

}  // namespace

TEST_CASE("joint distribution without evolution is diagonal Gibbs") {
  VSetup s;
  const Operator eye(Matrix::Identity(6, 6), HilbertSpace({3, 2}));
  const auto joint = joint_distribution(eye, s.rho0, s.h_env, s.p.beta);
  REQUIRE(joint.entries.size() == 4);  // two levels, all (n, m) pairs
  double total = 0.0;
  for (const auto& e : joint.entries) {
    total += e.prob;
    if (std::abs(e.e_initial - e.e_final) > 1e-12) {
      CHECK(std::abs(e.prob) < 1e-30);
    } else {
      const double gibbs = e.e_initial < 0.0 ? ht::ref::p_beta1
                                             : ht::ref::one_minus_p_beta1;
      CHECK(e.prob == doctest::Approx(gibbs).epsilon(1e-12));
    }
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("joint distribution of the V-model at t = pi/4") {
  VSetup s;
  const auto joint = joint_distribution(s.u, s.rho0, s.h_env, s.p.beta);

  // All heat-carrying weight sits in the (E_n = -1) -> (E_m = +1) transition.
  double p_up = 0.0, p_excited_stays = 0.0;
  for (const auto& e : joint.entries) {
    if (e.e_initial < 0.0 && e.e_final > 0.0) p_up = e.prob;
    if (e.e_initial > 0.0 && e.e_final > 0.0) p_excited_stays = e.prob;
  }
  CHECK(p_up == doctest::Approx(ht::ref::p_beta1).epsilon(1e-12));
  // |2>|1>_E is stationary: conditional probability 1 on the excited branch.
  CHECK(p_excited_stays ==
        doctest::Approx(ht::ref::one_minus_p_beta1).epsilon(1e-12));
}

TEST_CASE("heat distribution aggregation") {
  SUBCASE("no evolution, single atom at zero") {
    VSetup s;
    const Operator eye(Matrix::Identity(6, 6), HilbertSpace({3, 2}));
    const auto dist =
        heat_distribution(joint_distribution(eye, s.rho0, s.h_env, s.p.beta));
    REQUIRE(dist.atoms.size() == 1);
    CHECK(dist.atoms[0].q == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(dist.atoms[0].prob == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("V-model two-atom distribution") {
    VSetup s;
    const auto dist = s.dist();
    REQUIRE(dist.atoms.size() == 2);
    CHECK(dist.atoms[0].q == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(dist.atoms[0].prob ==
          doctest::Approx(ht::ref::one_minus_p_beta1).epsilon(1e-12));
    CHECK(dist.atoms[1].q == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(dist.atoms[1].prob ==
          doctest::Approx(ht::ref::p_beta1).epsilon(1e-12));
  }

  SUBCASE("decoupled environment") {
    ModelParams p;
    p.J = 0.0;
    p.omega1 = 0.7;
    const auto dist = vmodel_heat_distribution(p, 1.3);
    REQUIRE(dist.atoms.size() == 1);
    CHECK(dist.atoms[0].q == doctest::Approx(0.0));
    CHECK(dist.atoms[0].prob == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("cgf from the distribution") {
  VSetup s;
  const auto dist = s.dist();
  CHECK(std::abs(cgf_from_distribution(dist, 0.0)) < 1e-12);
  CHECK(cgf_from_distribution(dist, 1.0) ==
        doctest::Approx(ht::ref::theta_eta_plus1).epsilon(1e-12));
  CHECK(cgf_from_distribution(dist, -1.0) ==
        doctest::Approx(ht::ref::theta_eta_minus1).epsilon(1e-12));
  // Log-sum-exp keeps extreme counting parameters finite.
  CHECK(std::isfinite(cgf_from_distribution(dist, 500.0)));
  CHECK(std::isfinite(cgf_from_distribution(dist, -500.0)));
}

TEST_CASE("tilted-propagator route equals the distribution route") {
  for (double beta : {0.5, 1.0, 10.0}) {
    for (double omega1 : {0.0, 0.1, 1.0}) {
      VSetup s(beta, 1.1, omega1);
      const auto dist = s.dist();
      for (double eta : {-2.0, -0.7, 0.0, 0.4, 1.0, 2.0}) {
        const double via_dist = cgf_from_distribution(dist, eta);
        const double via_tilt = cgf_tilted(s.u, s.rho0, s.h_env, s.p.beta, eta);
        CHECK(std::abs(via_dist - via_tilt) < 1e-10);
      }
    }
  }
}

TEST_CASE("tilted route on random models") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 5; ++round) {
    const int ds = 2 + static_cast<int>(rng() % 3);
    const int de = 2 + static_cast<int>(rng() % 3);
    const HilbertSpace hs({ds, de});
    const Operator h(ht::random_hermitian(ds * de, rng), hs);
    const Operator u = propagator(h, 1.0);
    const DensityMatrix rho_s(ht::random_density(ds, rng),
                              HilbertSpace::single(ds));
    const Operator h_env(ht::random_hermitian(de, rng),
                         HilbertSpace::single(de));
    const Beta beta(0.5 + 2.0 * ht::uniform01(rng));
    const auto dist =
        heat_distribution(joint_distribution(u, rho_s, h_env, beta));
    for (double eta : {-1.5, -0.3, 0.8, 2.0}) {
      CHECK(std::abs(cgf_from_distribution(dist, eta) -
                     cgf_tilted(u, rho_s, h_env, beta, eta)) < 1e-10);
    }
  }
}

TEST_CASE("cgf is convex in the counting parameter") {
  std::mt19937_64 rng(37);
  std::vector<HeatDistribution> dists;
  dists.push_back(VSetup(1.0, M_PI / 4.0).dist());
  dists.push_back(VSetup(10.0, 1.3, 0.4).dist());
  for (int round = 0; round < 5; ++round) {
    const int ds = 2 + static_cast<int>(rng() % 3);
    const int de = 2 + static_cast<int>(rng() % 3);
    const Operator h(ht::random_hermitian(ds * de, rng),
                     HilbertSpace({ds, de}));
    const DensityMatrix rho_s(ht::random_density(ds, rng),
                              HilbertSpace::single(ds));
    const Operator h_env(ht::random_hermitian(de, rng),
                         HilbertSpace::single(de));
    dists.push_back(heat_distribution(joint_distribution(
        propagator(h, 1.0), rho_s, h_env, Beta(2.0))));
  }
  for (const auto& dist : dists) {
    std::vector<double> theta;
    for (int k = 0; k <= 20; ++k)
      theta.push_back(cgf_from_distribution(dist, -2.0 + 0.2 * k));
    for (std::size_t k = 1; k + 1 < theta.size(); ++k)
      CHECK(theta[k + 1] - 2.0 * theta[k] + theta[k - 1] >= -1e-9);
  }
}

TEST_CASE("unital dephasing channel gives zero eta = beta bound") {
  DephasingSetup d;
  CHECK(std::abs(cgf_tilted(d.u, d.rho_s, d.h_env, Beta(2.0), 2.0)) < 1e-12);
  CHECK(non_unitality(d.u, d.rho_s) < 1e-12);
  const auto cc = conditional_channel(d.u, d.rho_s, d.h_env, Beta(2.0), 2.0);
  CHECK((cc.a_eta.mat - Matrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("cumulants from exact moments") {
  VSetup s;
  const auto dist = s.dist();
  CHECK(cumulant(dist, 1) == doctest::Approx(ht::ref::mean_q).epsilon(1e-13));
  CHECK(cumulant(dist, 2) == doctest::Approx(ht::ref::var_q).epsilon(1e-12));
  CHECK_THROWS_AS(cumulant(dist, 0), std::invalid_argument);

  HeatDistribution delta;
  delta.atoms.push_back({0.0, 1.0});
  for (int n = 1; n <= 4; ++n) CHECK(cumulant(delta, n) == 0.0);
}

TEST_CASE("cumulants agree with eta-derivatives of the cgf") {
  VSetup s(1.0, 1.1, 0.3);
  const auto dist = s.dist();
  const auto cgf = [&dist](double eta) {
    return cgf_from_distribution(dist, eta);
  };
  // Order 4 central differences at step 1e-3 drown in rounding (eps/h^4),
  // so the derivative check stops at order 3.
  for (int order = 1; order <= 3; ++order) {
    const double exact = cumulant(dist, order);
    const double fd = ht::fd_cumulant(cgf, order, 1e-3);
    CHECK(std::abs(fd - exact) <=
          1e-6 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("higher cumulants of the two-atom distribution") {
  // X = 2B * Bernoulli(p): cumulants are the Bernoulli ones scaled by (2B)^n.
  VSetup s;
  const auto dist = s.dist();
  const double p = ht::ref::p_beta1;
  const double q3 = 8.0 * p * (1 - p) * (1 - 2 * p);
  const double q4 = 16.0 * p * (1 - p) * (1 - 6 * p * (1 - p));
  CHECK(cumulant(dist, 3) == doctest::Approx(q3).epsilon(1e-11));
  CHECK(cumulant(dist, 4) == doctest::Approx(q4).epsilon(1e-11));
}

TEST_CASE("bound family") {
  VSetup s;
  const auto dist = s.dist();
  const auto cgf = [&dist](double eta) {
    return cgf_from_distribution(dist, eta);
  };
  const double mean = cumulant(dist, 1);

  SUBCASE("frozen values at eta = +-1") {
    const auto report = bound_family(cgf, 1.0, mean, {1.0, -1.0});
    REQUIRE(report.lower.size() == 1);
    REQUIRE(report.upper.size() == 1);
    CHECK(report.lower[0].second ==
          doctest::Approx(-ht::ref::theta_eta_plus1).epsilon(1e-12));
    CHECK(report.upper[0].second ==
          doctest::Approx(ht::ref::theta_eta_minus1).epsilon(1e-12));
    CHECK(report.lower[0].second <= report.beta_mean_q + 1e-9);
    CHECK(report.upper[0].second >= report.beta_mean_q - 1e-9);
  }

  SUBCASE("small eta approaches the mean") {
    const auto report = bound_family(cgf, 1.0, mean, {1e-3});
    CHECK(std::abs(report.lower[0].second - report.beta_mean_q) < 1e-3);
  }

  SUBCASE("lower family non-increasing, upper non-decreasing") {
    const std::vector<double> etas = {0.1, 0.5, 1.0, 2.0};
    const auto report = bound_family(cgf, 1.0, mean, etas);
    for (std::size_t k = 1; k < report.lower.size(); ++k)
      CHECK(report.lower[k].second <= report.lower[k - 1].second + 1e-12);
  }

  SUBCASE("eta = 0 rejected") {
    CHECK_THROWS_AS(bound_family(cgf, 1.0, mean, {0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(bound_family(cgf, 0.0, mean, {1.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("conditional channel") {
  VSetup s(1.0, M_PI / 4.0);

  SUBCASE("eta = beta reduces to the Kraus sum") {
    const auto cc = conditional_channel(s.u, s.rho0, s.h_env, s.p.beta, 1.0);
    Matrix kraus_sum = Matrix::Zero(2, 2);
    for (const Matrix& a : env_kraus_operators(s.u, s.rho0))
      kraus_sum += a * a.adjoint();
    CHECK((cc.a_eta.mat - kraus_sum).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(is_hermitian(cc.a_eta.mat));
  }

  SUBCASE("theta recovered from the channel matches both routes") {
    for (double eta : {-1.0, 0.3, 1.0, 1.7}) {
      const auto cc = conditional_channel(s.u, s.rho0, s.h_env, s.p.beta, eta);
      const double via_channel =
          cgf_from_conditional_channel(cc, s.h_env, s.p.beta);
      const double via_tilt = cgf_tilted(s.u, s.rho0, s.h_env, s.p.beta, eta);
      CHECK(std::abs(via_channel - via_tilt) < 1e-10);
    }
  }

  SUBCASE("eta = beta consistency identity") {
    // ln Tr[rho_beta sum_k A_k A_k^dag] = Theta(beta, beta, t).
    Matrix kraus_sum = Matrix::Zero(2, 2);
    for (const Matrix& a : env_kraus_operators(s.u, s.rho0))
      kraus_sum += a * a.adjoint();
    const ThermalState ts = thermal_state(s.h_env, s.p.beta);
    const double lhs =
        std::log((ts.rho.matrix() * kraus_sum).trace().real());
    const double rhs = cgf_tilted(s.u, s.rho0, s.h_env, s.p.beta, 1.0);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("non-unitality of the V-model") {
  VSetup s;
  CHECK(non_unitality(s.u, s.rho0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  ModelParams decoupled;
  decoupled.J = 0.0;
  decoupled.omega1 = 0.9;
  const DensityMatrix rho0 = initial_density(decoupled);
  for (double t : {0.3, 1.1, 2.9})
    CHECK(non_unitality(VPropagator(decoupled).at(t), rho0) < 1e-12);
}

TEST_CASE("landauer audit") {
  ModelParams p;
  p.beta = Beta(1.0);
  const Operator h_total = interaction_hamiltonian(p);
  const DensityMatrix rho0 = initial_density(p);
  const Operator h_env = env_hamiltonian_op(p);

  SUBCASE("all terms vanish at t = 0") {
    const auto audit = landauer_audit(h_total, rho0, h_env, p.beta, 0.0);
    CHECK(std::abs(audit.beta_mean_q) < 1e-12);
    CHECK(std::abs(audit.delta_s) < 1e-9);
    CHECK(std::abs(audit.mutual_info) < 1e-9);
    CHECK(std::abs(audit.env_relative_entropy) < 1e-9);
  }

  SUBCASE("V-model at t = pi/4") {
    const auto audit =
        landauer_audit(h_total, rho0, h_env, p.beta, M_PI / 4.0);
    CHECK(audit.beta_mean_q ==
          doctest::Approx(ht::ref::mean_q).epsilon(1e-10));
    CHECK(audit.delta_s ==
          doctest::Approx(-ht::ref::binary_entropy_p).epsilon(1e-9));
    CHECK(std::abs(audit.residual()) < 1e-9);
    CHECK(audit.mutual_info >= -1e-12);
    CHECK(audit.env_relative_entropy >= -1e-12);
    CHECK(audit.beta_mean_q >= audit.delta_s - 1e-9);
  }

  SUBCASE("pure dephasing balances with no heat") {
    DephasingSetup d;
    const auto audit = landauer_audit(d.h, d.rho_s, d.h_env, Beta(2.0), 0.7);
    CHECK(std::abs(audit.beta_mean_q) < 1e-12);
    CHECK(audit.delta_s <= 1e-12);
    CHECK(std::abs(audit.residual()) < 1e-9);
  }

  SUBCASE("beta = 0 stays balanced") {
    const auto audit = landauer_audit(h_total, rho0, h_env, Beta(0.0), 1.3);
    CHECK(std::abs(audit.beta_mean_q) < 1e-12);
    CHECK(std::abs(audit.residual()) < 1e-9);
  }
}

TEST_CASE("monte carlo sampler") {
  VSetup s;

  SUBCASE("identity evolution yields only zero heat") {
    const Operator eye(Matrix::Identity(6, 6), HilbertSpace({3, 2}));
    const auto emp = mc_sample_heat(eye, s.rho0, s.h_env, s.p.beta, 2000, 3);
    REQUIRE(emp.q.size() == 1);
    CHECK(emp.q[0] == doctest::Approx(0.0));
    CHECK(emp.counts[0] == 2000);
  }

  SUBCASE("agrees with the exact distribution at 3 sigma") {
    const auto emp = mc_sample_heat(s.u, s.rho0, s.h_env, s.p.beta, 100000, 7);
    REQUIRE(emp.q.size() == 2);
    const double p_hat =
        static_cast<double>(emp.counts[1]) / static_cast<double>(emp.n_samples);
    CHECK(std::abs(p_hat - ht::ref::p_beta1) <= ht::ref::mc_3sigma);
  }

  SUBCASE("deterministic for a fixed seed") {
    const auto a = mc_sample_heat(s.u, s.rho0, s.h_env, s.p.beta, 12345, 42);
    const auto b = mc_sample_heat(s.u, s.rho0, s.h_env, s.p.beta, 12345, 42);
    REQUIRE(a.q.size() == b.q.size());
    for (std::size_t i = 0; i < a.q.size(); ++i) {
      CHECK(a.q[i] == b.q[i]);
      CHECK(a.counts[i] == b.counts[i]);
    }
    const auto c = mc_sample_heat(s.u, s.rho0, s.h_env, s.p.beta, 12345, 43);
    bool identical = c.counts == a.counts;
    CHECK_FALSE(identical);  // different seed, different stream
  }

  SUBCASE("input validation") {
    CHECK_THROWS_AS(mc_sample_heat(s.u, s.rho0, s.h_env, s.p.beta, 0, 1),
                    std::invalid_argument);
  }
}
