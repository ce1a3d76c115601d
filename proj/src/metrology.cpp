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

#include "qmet/metrology.hpp"

#include <cmath>
#include <stdexcept>

#include "qmet/errors.hpp"

namespace qmet {

namespace {

using cd = std::complex<double>;

// <op psi | op psi> for the observable variants that need an explicit mapped
// vector; PauliString and AllUpProjector have closed-form second moments.
double second_moment_impl(const StateVector& state, const Observable& op) {
  struct Visitor {
    const StateVector& state;

    double operator()(const PauliString& p) const {
      if (!p.has_real_phase()) {
        throw std::invalid_argument("second_moment: Pauli string is not Hermitian");
      }
      return 1.0;  // P^2 = identity for a real-phase string
    }
    double operator()(const TermSet& ts) const {
      if (state.n_qubits() != ts.n_qubits) {
        throw std::invalid_argument("state and term set sizes differ");
      }
      std::vector<cd> sum(state.dim(), cd(0, 0));
      for (const auto& term : ts.terms) {
        const StateVector mapped = apply_pauli(state, term);
        for (std::uint64_t b = 0; b < state.dim(); ++b) {
          sum[b] += mapped.amplitude(b);
        }
      }
      double norm_sq = 0;
      for (const cd& a : sum) norm_sq += std::norm(a);
      return norm_sq;
    }
    double operator()(const Eigen::MatrixXcd& m) const {
      const auto dim = static_cast<Eigen::Index>(state.dim());
      if (m.rows() != dim || m.cols() != dim) {
        throw std::invalid_argument("operator dimension does not match state");
      }
      const Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(),
                                                   dim);
      return (m * psi).squaredNorm();
    }
    double operator()(const AllUpProjector&) const {
      return all_up_probability(state);  // X^2 = X
    }
  };
  return std::visit(Visitor{state}, op);
}

}  // namespace

std::string StrategyLabel::str() const {
  return {static_cast<char>(preparation), static_cast<char>(unitary),
          static_cast<char>(measurement)};
}

double expectation(const StateVector& state, const Observable& op) {
  struct Visitor {
    const StateVector& state;
    double operator()(const PauliString& p) const { return expectation(state, p); }
    double operator()(const TermSet& ts) const { return expectation(state, ts); }
    double operator()(const Eigen::MatrixXcd& m) const {
      return expectation(state, m);
    }
    double operator()(const AllUpProjector&) const {
      return all_up_probability(state);
    }
  };
  return std::visit(Visitor{state}, op);
}

double second_moment(const StateVector& state, const Observable& op) {
  return second_moment_impl(state, op);
}

double dispersion(const StateVector& state, const Observable& op) {
  const double mean = expectation(state, op);
  const double sq = second_moment(state, op);
  const double variance = sq - mean * mean;
  if (variance < 0) {
    // Rounding can push a zero variance slightly negative; the budget scales
    // with <op^2> because that is where the cancellation happens.
    if (variance < -1e-12 * std::max(1.0, sq)) {
      throw NumericalError("dispersion: variance " + std::to_string(variance) +
                           " is negative beyond the rounding budget");
    }
    return 0.0;
  }
  return std::sqrt(variance);
}

PrecisionReport precision(const PrecisionRequest& request, double theta) {
  if (!request.family) {
    throw std::invalid_argument("precision: no state family");
  }
  const StateVector psi = request.family(theta);
  const int n = psi.n_qubits();

  PrecisionReport report;
  report.n_qubits = n;
  report.theta = theta;
  report.label = request.label;
  report.nu = request.nu;
  report.expectation_x = expectation(psi, request.x);
  report.dispersion_x = dispersion(psi, request.x);
  report.dispersion_h = dispersion(psi, request.generator);
  report.mt_bound = mt_bound(request.lambda_max, request.lambda_min);
  report.bc_bound = bc_bound(request.lambda_max, request.lambda_min, request.nu);

  double derivative;
  if (request.analytic_derivative) {
    derivative = request.analytic_derivative(theta);
  } else {
    const double h =
        request.fd_step > 0 ? request.fd_step : 1e-5 * std::ldexp(1.0, -n);
    const auto mean_at = [&](double t) {
      return expectation(request.family(t), request.x);
    };
    const double d_h = (mean_at(theta + h) - mean_at(theta - h)) / (2 * h);
    const double d_h2 = (mean_at(theta + h / 2) - mean_at(theta - h / 2)) / h;
    derivative = (4 * d_h2 - d_h) / 3;
  }
  report.derivative_x = derivative;

  const double floor =
      1e-8 * std::max(1.0, request.lambda_max - request.lambda_min);
  if (std::abs(derivative) < floor) {
    throw StationaryPointError(
        theta, "precision: d<X>/dtheta vanishes at theta = " +
                   std::to_string(theta) + " (stationary point of <X>)");
  }
  report.delta_theta = report.dispersion_x / std::abs(derivative);
  return report;
}

double mt_bound(double lambda_max, double lambda_min) {
  if (lambda_max == lambda_min) {
    throw DegenerateGeneratorError("mt_bound: degenerate generator spectrum");
  }
  if (lambda_max < lambda_min) {
    throw std::invalid_argument("mt_bound: lambda_max < lambda_min");
  }
  return 1.0 / (lambda_max - lambda_min);
}

double bc_bound(double lambda_max, double lambda_min, long nu) {
  if (nu < 1) throw std::invalid_argument("bc_bound: nu must be >= 1");
  return mt_bound(lambda_max, lambda_min) / std::sqrt(static_cast<double>(nu));
}

double direct_sum_dispersion_bound(const DirectSumSpec& spec) {
  if (spec.n_probes < 1) {
    throw std::invalid_argument("direct_sum_dispersion_bound: n_probes < 1");
  }
  if (spec.lambda_max_single < spec.lambda_min_single) {
    throw std::invalid_argument(
        "direct_sum_dispersion_bound: lambda_max < lambda_min");
  }
  return spec.n_probes * spec.half_gap();
}

double classical_dispersion(std::span<const double> sigmas) {
  double sum_sq = 0;
  for (double s : sigmas) {
    if (s < 0) {
      throw std::invalid_argument("classical_dispersion: negative dispersion");
    }
    sum_sq += s * s;
  }
  return std::sqrt(sum_sq);
}

PrecisionReport run_cqc(int n_qubits, double theta, TermSetKind generator,
                        DerivativePath path) {
  if (n_qubits < 1 || n_qubits > StateVector::kMaxQubits) {
    throw std::invalid_argument("run_cqc: n_qubits out of range");
  }
  const double lambda = std::ldexp(1.0, n_qubits - 1);  // 2^{N-1}

  PrecisionRequest request;
  request.family = [n_qubits, ts = generate_terms(n_qubits, generator)](
                       double t) {
    return apply_exp_termset(StateVector::all_up(n_qubits), ts, t);
  };
  request.x = AllUpProjector{};
  request.generator = generate_terms(n_qubits, generator);
  request.lambda_max = lambda;
  request.lambda_min = -lambda;
  request.label = StrategyLabel{Stage::C, Stage::Q, Stage::C};
  if (path == DerivativePath::Analytic) {
    // <X>(theta) = (1 + cos(theta 2^N)) / 2 for either generator kind.
    request.analytic_derivative = [n_qubits](double t) {
      return -std::ldexp(1.0, n_qubits - 1) *
             std::sin(t * std::ldexp(1.0, n_qubits));
    };
  }
  return precision(request, theta);
}

}  // namespace qmet
