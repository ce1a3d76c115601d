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

#include <functional>
#include <span>
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "qmet/pauli.hpp"
#include "qmet/statevector.hpp"

namespace qmet {

/// C (separable/product) or Q (entangling) stage of a parallel strategy.
enum class Stage : char { C = 'C', Q = 'Q' };

/// Three-letter classification of a parallel estimation strategy: preparation,
/// unitary, measurement. The protocol implemented by run_cqc is CQC: product
/// preparation and measurement around an entanglement-generating unitary.
struct StrategyLabel {
  Stage preparation = Stage::C;
  Stage unitary = Stage::Q;
  Stage measurement = Stage::C;

  std::string str() const;
  bool operator==(const StrategyLabel&) const = default;
};

/// Projector onto the all-up basis state, measured as all_up_probability.
struct AllUpProjector {
  bool operator==(const AllUpProjector&) const = default;
};

/// A Hermitian observable in any of the representations the toolkit uses.
using Observable =
    std::variant<AllUpProjector, PauliString, TermSet, Eigen::MatrixXcd>;

double expectation(const StateVector& state, const Observable& op);
double second_moment(const StateVector& state, const Observable& op);

/// sqrt(<op^2> - <op>^2). A negative variance residue within the rounding
/// budget (1e-12 relative to <op^2>) clamps to zero; anything worse throws
/// NumericalError.
double dispersion(const StateVector& state, const Observable& op);

/// Everything one scenario evaluation reports: the measured expectation and
/// dispersion, the slope of <X> in the parameter, the implied precision
/// delta_theta = dispersion_x / |derivative_x|, and the bound values it is
/// compared against.
struct PrecisionReport {
  int n_qubits = 0;
  double theta = 0;
  double expectation_x = 0;
  double dispersion_x = 0;
  double derivative_x = 0;
  double delta_theta = 0;
  double dispersion_h = 0;
  double mt_bound = 0;
  double bc_bound = 0;
  long nu = 1;
  StrategyLabel label;
};

/// Direct-sum baseline: N probes, each with single-probe extremal eigenvalues
/// lambda_M >= lambda_m and half-gap d = (lambda_M - lambda_m) / 2.
struct DirectSumSpec {
  int n_probes = 1;
  double lambda_max_single = 1.0;
  double lambda_min_single = -1.0;

  double half_gap() const { return (lambda_max_single - lambda_min_single) / 2; }
};

using StateFamily = std::function<StateVector(double)>;

/// One parameter-estimation scenario: a theta-parameterized state family, the
/// measured observable, and the generator (with its spectral range) that the
/// uncertainty bounds refer to.
struct PrecisionRequest {
  StateFamily family;
  Observable x;
  Observable generator;
  double lambda_max = 0;
  double lambda_min = 0;
  StrategyLabel label;
  long nu = 1;
  /// Central-difference step; 0 picks 1e-5 * 2^-N, matching the signal period.
  double fd_step = 0;
  /// Optional exact derivative of <X> w.r.t. theta; bypasses the finite
  /// difference when set.
  std::function<double(double)> analytic_derivative;
};

/// Evaluates the uncertainty-relation precision delta_theta at one theta.
/// The derivative of <X> uses a central difference with one Richardson
/// extrapolation step unless an analytic derivative is supplied. Throws
/// StationaryPointError when |d<X>/dtheta| falls below the derivative floor
/// 1e-8 * max(1, lambda_max - lambda_min); quoting a precision there would be
/// fabricating a 0/0 limit.
PrecisionReport precision(const PrecisionRequest& request, double theta);

/// Single-shot spectral bound 1 / (lambda_max - lambda_min).
double mt_bound(double lambda_max, double lambda_min);

/// Repeated-estimation bound mt_bound / sqrt(nu).
double bc_bound(double lambda_max, double lambda_min, long nu);

/// Largest dispersion any state reaches for a direct sum of N single-probe
/// generators: N * d.
double direct_sum_dispersion_bound(const DirectSumSpec& spec);

/// Dispersion of a sum of independent classical variables: the Euclidean norm
/// of the individual dispersions.
double classical_dispersion(std::span<const double> sigmas);

enum class DerivativePath { Analytic, FiniteDifference };

/// Runs the CQC protocol: prepare all-up, evolve by the product of commuting
/// term exponentials of the chosen generator kind, measure the all-up
/// probability. The resulting precision is 2^-N at every generic theta,
/// saturating mt_bound(2^{N-1}, -2^{N-1}).
PrecisionReport run_cqc(int n_qubits, double theta, TermSetKind generator,
                        DerivativePath path = DerivativePath::Analytic);

}  // namespace qmet
