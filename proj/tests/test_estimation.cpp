// Copyright 2026 The qmet developers
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qmet/errors.hpp"
#include "qmet/estimation.hpp"
#include "qmet/metrology.hpp"
#include "qmet/rng.hpp"
#include "qmet/statevector.hpp"

using namespace qmet;

namespace {

// Cramer-Rao error of the binomial measurement model, evaluated numerically
// from the success probability alone: 1 / sqrt(nu p'(theta)^2 / (p (1 - p))).
// Independent of the estimator implementation under test.
double likelihood_error(int n, double theta, long nu) {
  const TermSet h = generate_terms(n, TermSetKind::H);
  const auto p = [&](double t) {
    return all_up_probability(apply_exp_termset(StateVector::all_up(n), h, t));
  };
  const double step = 1e-6 / std::ldexp(1.0, n);
  const double slope = (p(theta + step) - p(theta - step)) / (2 * step);
  const double fisher =
      static_cast<double>(nu) * slope * slope / (p(theta) * (1 - p(theta)));
  return 1.0 / std::sqrt(fisher);
}

}  // namespace

TEST_CASE("sample_outcomes endpoints and validation") {
  auto rng = make_engine(41);
  CHECK(sample_outcomes(1.0, 1000, rng) == 1000);
  CHECK(sample_outcomes(0.0, 1000, rng) == 0);
  CHECK(sample_outcomes(1.0 + 5e-13, 10, rng) == 10);  // clamped
  CHECK_THROWS_AS(sample_outcomes(1.1, 10, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_outcomes(-0.1, 10, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_outcomes(0.5, 0, rng), std::invalid_argument);
}

TEST_CASE("sample_outcomes is binomial at p one half") {
  auto rng = make_engine(42);
  const long nu = 1000000;
  const long count = sample_outcomes(0.5, nu, rng);
  // 6 sigma band around nu/2; sigma = sqrt(nu)/2 = 500
  CHECK(count > nu / 2 - 3000);
  CHECK(count < nu / 2 + 3000);
}

TEST_CASE("sample_outcomes is deterministic under a fixed seed") {
  auto a = make_engine(43);
  auto b = make_engine(43);
  CHECK(sample_outcomes(0.7, 10000, a) == sample_outcomes(0.7, 10000, b));
}

TEST_CASE("estimate_theta inverts the success fraction") {
  CHECK(estimate_theta(1.0, 5) == 0.0);
  CHECK(estimate_theta(0.5, 3) ==
        doctest::Approx(std::numbers::pi / 16).epsilon(1e-15));
  CHECK(estimate_theta(0.0, 4) ==
        doctest::Approx(std::numbers::pi / 16).epsilon(1e-15));
  // fractions that round outside [0, 1] clip to the branch endpoints
  CHECK(estimate_theta(1.0 + 1e-14, 2) == 0.0);
  CHECK(estimate_theta(-1e-14, 2) ==
        doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
}

TEST_CASE("run_monte_carlo matches the likelihood oracle at N = 3") {
  MonteCarloConfig cfg;
  cfg.n_qubits = 3;
  cfg.theta_true = std::numbers::pi / 32;
  cfg.nu = 10000;
  cfg.trials = 200;
  cfg.seed = 902;
  const EstimationResult r = run_monte_carlo(cfg);

  // The protocol's Fisher information is nu 4^N, so the oracle reduces to
  // 2^-N / sqrt(nu) = 1.25e-3 here.
  const double oracle = likelihood_error(3, cfg.theta_true, cfg.nu);
  CHECK(oracle == doctest::Approx(1.25e-3).epsilon(1e-6));
  CHECK(r.delta_nu_theta_empirical ==
        doctest::Approx(1.25e-3).epsilon(0.10));
  CHECK(r.bc_bound == doctest::Approx(1.25e-3).epsilon(1e-12));
}

TEST_CASE("identical seeds give bit-identical results") {
  MonteCarloConfig cfg;
  cfg.n_qubits = 2;
  cfg.theta_true = 0.25 * std::numbers::pi / 4;
  cfg.nu = 2000;
  cfg.trials = 100;
  cfg.seed = 7;
  const EstimationResult a = run_monte_carlo(cfg);
  const EstimationResult b = run_monte_carlo(cfg);
  CHECK(a.delta_nu_theta_empirical == b.delta_nu_theta_empirical);
  CHECK(a.theta_est_mean == b.theta_est_mean);
  CHECK(a.bias == b.bias);
}

TEST_CASE("error halves when nu quadruples") {
  MonteCarloConfig cfg;
  cfg.n_qubits = 3;
  cfg.theta_true = 0.25 * std::numbers::pi / 8;
  cfg.nu = 2500;
  cfg.trials = 400;
  cfg.seed = 903;
  const EstimationResult coarse = run_monte_carlo(cfg);
  cfg.nu = 10000;
  const EstimationResult fine = run_monte_carlo(cfg);
  CHECK(coarse.delta_nu_theta_empirical / fine.delta_nu_theta_empirical ==
        doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("error halves when a qubit is added") {
  MonteCarloConfig cfg;
  cfg.nu = 4000;
  cfg.trials = 400;
  cfg.seed = 904;
  cfg.n_qubits = 3;
  cfg.theta_true = 0.25 * std::numbers::pi / 8;
  const EstimationResult small = run_monte_carlo(cfg);
  cfg.n_qubits = 4;
  cfg.theta_true = 0.25 * std::numbers::pi / 16;
  const EstimationResult large = run_monte_carlo(cfg);
  CHECK(small.delta_nu_theta_empirical / large.delta_nu_theta_empirical ==
        doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("empirical error respects the Cramer-Rao bound") {
  for (int n = 2; n <= 4; ++n) {
    for (long nu : {500L, 5000L}) {
      MonteCarloConfig cfg;
      cfg.n_qubits = n;
      cfg.theta_true = 0.3 * std::numbers::pi / std::ldexp(1.0, n);
      cfg.nu = nu;
      cfg.trials = 200;
      cfg.seed = 905 + n;
      const EstimationResult r = run_monte_carlo(cfg);
      const double standard_error =
          r.delta_nu_theta_empirical / std::sqrt(2.0 * cfg.trials);
      CHECK(r.delta_nu_theta_empirical >= r.bc_bound - 3 * standard_error);
    }
  }
}

TEST_CASE("log-log scaling slopes") {
  SUBCASE("slope in nu is -1/2") {
    MonteCarloConfig cfg;
    cfg.n_qubits = 3;
    cfg.theta_true = 0.25 * std::numbers::pi / 8;
    cfg.trials = 400;
    cfg.seed = 906;
    std::vector<double> log_nu, log_err;
    for (long nu : {1000L, 3162L, 10000L, 31623L}) {
      cfg.nu = nu;
      log_nu.push_back(std::log(static_cast<double>(nu)));
      log_err.push_back(std::log(run_monte_carlo(cfg).delta_nu_theta_empirical));
    }
    // least squares slope
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < log_nu.size(); ++i) {
      mx += log_nu[i];
      my += log_err[i];
    }
    mx /= log_nu.size();
    my /= log_err.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < log_nu.size(); ++i) {
      sxy += (log_nu[i] - mx) * (log_err[i] - my);
      sxx += (log_nu[i] - mx) * (log_nu[i] - mx);
    }
    CHECK(sxy / sxx == doctest::Approx(-0.5).epsilon(0.1));
  }
  SUBCASE("slope per qubit is -log 2") {
    MonteCarloConfig cfg;
    cfg.nu = 4000;
    cfg.trials = 400;
    cfg.seed = 907;
    std::vector<double> log_err;
    for (int n = 2; n <= 5; ++n) {
      cfg.n_qubits = n;
      cfg.theta_true = 0.25 * std::numbers::pi / std::ldexp(1.0, n);
      log_err.push_back(std::log(run_monte_carlo(cfg).delta_nu_theta_empirical));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < log_err.size(); ++i) {
      mx += 2.0 + i;
      my += log_err[i];
    }
    mx /= log_err.size();
    my /= log_err.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < log_err.size(); ++i) {
      sxy += (2.0 + i - mx) * (log_err[i] - my);
      sxx += (2.0 + i - mx) * (2.0 + i - mx);
    }
    CHECK(sxy / sxx == doctest::Approx(-std::numbers::ln2).epsilon(0.05));
  }
}

TEST_CASE("the estimator is consistent: bias vanishes as nu grows") {
  MonteCarloConfig cfg;
  cfg.n_qubits = 3;
  cfg.theta_true = 0.25 * std::numbers::pi / 8;
  cfg.nu = 1000000;
  cfg.trials = 400;
  cfg.seed = 908;
  const EstimationResult r = run_monte_carlo(cfg);
  CHECK(std::abs(r.bias) < 0.1 * r.delta_nu_theta_empirical);
}

TEST_CASE("branch and degeneracy validation") {
  MonteCarloConfig cfg;
  cfg.n_qubits = 2;
  cfg.nu = 100;
  cfg.trials = 10;
  cfg.seed = 1;

  cfg.theta_true = 0.0;  // on the branch endpoint
  CHECK_THROWS_AS(run_monte_carlo(cfg), BranchViolationError);
  cfg.theta_true = std::numbers::pi / 4;  // other endpoint (N = 2)
  CHECK_THROWS_AS(run_monte_carlo(cfg), BranchViolationError);
  cfg.theta_true = 0.01 / 4;  // inside but within the 5 / (2^N sqrt(nu)) margin
  CHECK_THROWS_AS(run_monte_carlo(cfg), BranchViolationError);

  cfg.nu = 0;
  cfg.theta_true = 0.25 * std::numbers::pi / 4;
  CHECK_THROWS_AS(run_monte_carlo(cfg), std::invalid_argument);
  cfg.nu = 100;
  cfg.trials = 0;
  CHECK_THROWS_AS(run_monte_carlo(cfg), std::invalid_argument);
}
