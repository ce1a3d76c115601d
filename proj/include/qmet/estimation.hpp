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

#pragma once

#include <cstdint>
#include <random>

namespace qmet {

/// One Monte-Carlo experiment: `trials` independent repetitions, each drawing
/// `nu` measurement outcomes of the CQC protocol at theta_true.
struct MonteCarloConfig {
  int n_qubits = 1;
  double theta_true = 0;
  long nu = 1;
  int trials = 1;
  std::uint64_t seed = 0;
};

/// delta_nu_theta_empirical is the RMS estimation error with the estimator
/// response slope divided out; for an unbiased estimator the slope is 1 and
/// this reduces to the plain RMS error. bc_bound is the matching
/// repeated-estimation lower bound 2^-N / sqrt(nu).
struct EstimationResult {
  double delta_nu_theta_empirical = 0;
  double bc_bound = 0;
  double theta_est_mean = 0;
  double bias = 0;
};

/// Number of successes among nu Bernoulli(p) draws. p may stray outside
/// [0, 1] by at most 1e-12 (clamped); further is an error.
long sample_outcomes(double p, long nu, std::mt19937_64& rng);

/// Maximum-likelihood inversion of the success fraction on the monotonic
/// branch theta * 2^N in (0, pi): theta_est = arccos(2 p_hat - 1) / 2^N.
/// Fractions rounding outside [0, 1] are clipped to the branch endpoints.
double estimate_theta(double success_fraction, int n_qubits);

/// Simulates the protocol to get the outcome probability, repeats the
/// estimation over independent trials, and reports the empirical error
/// together with the Braunstein-Caves bound. The estimator response slope is
/// measured from two-sided perturbations of theta_true with step
/// 0.1 / (2^N sqrt(nu)); the ensemble mean at each perturbed value is
/// evaluated exactly over the binomial outcome law, so the normalization
/// carries no sampling noise of its own.
EstimationResult run_monte_carlo(const MonteCarloConfig& config);

}  // namespace qmet
