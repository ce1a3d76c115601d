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

#include "qmet/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qmet/errors.hpp"
#include "qmet/metrology.hpp"
#include "qmet/rng.hpp"
#include "qmet/statevector.hpp"

namespace qmet {

namespace {

double mean(const std::vector<double>& v) {
  double acc = 0;
  for (double x : v) acc += x;
  return acc / static_cast<double>(v.size());
}

// E[theta_est] under Binomial(nu, p), summed exactly over a +-12 sigma count
// window (the truncated tail mass is ~1e-30). The error formula divides the
// estimates by the response slope, and the division amplifies any slope
// noise by theta_true / delta_nu_theta, so the perturbed-ensemble means are
// evaluated from the outcome law itself instead of being re-sampled.
double exact_estimator_mean(double p, long nu, int n_qubits) {
  if (p <= 0) return estimate_theta(0.0, n_qubits);
  if (p >= 1) return estimate_theta(1.0, n_qubits);
  const double nu_d = static_cast<double>(nu);
  const double sigma = std::sqrt(nu_d * p * (1 - p));
  const long lo =
      std::max<long>(0, static_cast<long>(std::floor(nu_d * p - 12 * sigma)));
  const long hi =
      std::min<long>(nu, static_cast<long>(std::ceil(nu_d * p + 12 * sigma)));
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double lg_all = std::lgamma(nu_d + 1);
  double acc = 0;
  for (long k = lo; k <= hi; ++k) {
    const double kd = static_cast<double>(k);
    const double log_pmf = lg_all - std::lgamma(kd + 1) -
                           std::lgamma(nu_d - kd + 1) + kd * log_p +
                           (nu_d - kd) * log_q;
    acc += std::exp(log_pmf) * estimate_theta(kd / nu_d, n_qubits);
  }
  return acc;
}

}  // namespace

long sample_outcomes(double p, long nu, std::mt19937_64& rng) {
  if (p < -1e-12 || p > 1 + 1e-12) {
    throw std::invalid_argument("sample_outcomes: p outside [0, 1]");
  }
  if (nu < 1) throw std::invalid_argument("sample_outcomes: nu must be >= 1");
  p = std::clamp(p, 0.0, 1.0);
  long count = 0;
  for (long i = 0; i < nu; ++i) {
    count += uniform01(rng) < p;
  }
  return count;
}

double estimate_theta(double success_fraction, int n_qubits) {
  if (n_qubits < 1 || n_qubits > StateVector::kMaxQubits) {
    throw std::invalid_argument("estimate_theta: n_qubits out of range");
  }
  const double arg = std::clamp(2 * success_fraction - 1, -1.0, 1.0);
  return std::acos(arg) / std::ldexp(1.0, n_qubits);
}

EstimationResult run_monte_carlo(const MonteCarloConfig& config) {
  const int n = config.n_qubits;
  if (n < 1 || n > StateVector::kMaxQubits) {
    throw std::invalid_argument("run_monte_carlo: n_qubits out of range");
  }
  if (config.nu < 1) throw std::invalid_argument("run_monte_carlo: nu < 1");
  if (config.trials < 1) {
    throw std::invalid_argument("run_monte_carlo: trials < 1");
  }

  const double two_n = std::ldexp(1.0, n);
  const double branch_end = std::numbers::pi / two_n;
  const double margin = 5.0 / (two_n * std::sqrt(static_cast<double>(config.nu)));
  if (config.theta_true < margin || config.theta_true > branch_end - margin) {
    throw BranchViolationError(
        "run_monte_carlo: theta_true must sit inside (0, pi/2^N) with margin " +
        std::to_string(margin));
  }

  // Outcome probabilities come from the simulated protocol, not a formula.
  const TermSet generator = generate_terms(n, TermSetKind::H);
  const auto success_probability = [&](double theta) {
    return all_up_probability(
        apply_exp_termset(StateVector::all_up(n), generator, theta));
  };
  const double p_true = success_probability(config.theta_true);

  std::vector<double> theta_hat(config.trials);
  for (int t = 0; t < config.trials; ++t) {
    auto rng = make_engine(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
    const long count = sample_outcomes(p_true, config.nu, rng);
    theta_hat[t] = estimate_theta(
        static_cast<double>(count) / static_cast<double>(config.nu), n);
  }
  const double theta_mean = mean(theta_hat);

  const double delta = 0.1 / (two_n * std::sqrt(static_cast<double>(config.nu)));
  const double p_plus = success_probability(config.theta_true + delta);
  const double p_minus = success_probability(config.theta_true - delta);
  const double mean_plus = exact_estimator_mean(p_plus, config.nu, n);
  const double mean_minus = exact_estimator_mean(p_minus, config.nu, n);
  const double slope = (mean_plus - mean_minus) / (2 * delta);
  if (std::abs(slope) < 1e-6) {
    throw DegenerateConfigError(
        "run_monte_carlo: estimator response slope is numerically zero");
  }

  double mse = 0;
  for (double th : theta_hat) {
    const double err = th / std::abs(slope) - config.theta_true;
    mse += err * err;
  }
  mse /= static_cast<double>(config.trials);
  if (mse == 0 && p_true > 0 && p_true < 1) {
    throw DegenerateConfigError("run_monte_carlo: zero-variance ensemble");
  }

  EstimationResult result;
  result.delta_nu_theta_empirical = std::sqrt(mse);
  const double lambda = std::ldexp(1.0, n - 1);
  result.bc_bound = bc_bound(lambda, -lambda, config.nu);
  result.theta_est_mean = theta_mean;
  result.bias = theta_mean - config.theta_true;
  return result;
}

}  // namespace qmet
