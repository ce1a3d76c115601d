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

#include "qmet/statevector.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "qmet/errors.hpp"

namespace qmet {

namespace {

using cd = std::complex<double>;

constexpr cd kI(0.0, 1.0);
constexpr cd kUnitPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > StateVector::kMaxQubits) {
    throw std::invalid_argument("StateVector: n_qubits must be in [1, " +
                                std::to_string(StateVector::kMaxQubits) + "]");
  }
}

void check_same_size(const StateVector& s, const PauliString& p) {
  if (s.n_qubits() != p.n_qubits()) {
    throw std::invalid_argument("state and Pauli string sizes differ");
  }
}

// Phase exponent picked up when p maps basis state b to b ^ x: each Y
// contributes i on an up qubit and -i on a down one, each Z a factor -1 on a
// down qubit.
inline int jump_phase_exp(const PauliString& p, std::uint64_t b) {
  const std::uint64_t y = p.x_bits() & p.z_bits();
  return p.phase_exponent() + std::popcount(y) +
         2 * std::popcount(b & p.z_bits());
}

// In-place exp(-i theta P) sweep over amplitude pairs (b, b ^ x_mask).
void exp_pauli_inplace(std::vector<cd>& amp, const PauliString& p,
                       double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const std::uint64_t x = p.x_bits();
  const std::uint64_t dim = amp.size();
  if (x == 0) {
    // Pure Z/I string: diagonal with entries +-1.
    for (std::uint64_t b = 0; b < dim; ++b) {
      const int e = jump_phase_exp(p, b) & 3;  // 0 or 2 for real phase
      const double sign = e == 0 ? 1.0 : -1.0;
      amp[b] *= cd(c, -s * sign);
    }
    return;
  }
  const std::uint64_t pick = std::uint64_t{1} << (63 - std::countl_zero(x));
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (b & pick) continue;
    const std::uint64_t partner = b ^ x;
    const cd fb = kUnitPhases[jump_phase_exp(p, b) & 3];        // b -> partner
    const cd fp = kUnitPhases[jump_phase_exp(p, partner) & 3];  // partner -> b
    const cd ab = amp[b];
    const cd ap = amp[partner];
    amp[b] = c * ab - kI * s * (fp * ap);
    amp[partner] = c * ap - kI * s * (fb * ab);
  }
}

double real_part_checked(cd value, double scale) {
  const double tol = 1e-10 * std::max(1.0, scale);
  if (std::abs(value.imag()) > tol) {
    throw NumericalError("expectation value has imaginary residue " +
                         std::to_string(value.imag()));
  }
  return value.real();
}

std::vector<cd> apply_termset_sum(const StateVector& state, const TermSet& ts) {
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
  return sum;
}

}  // namespace

StateVector StateVector::all_up(int n_qubits) {
  check_qubits(n_qubits);
  std::vector<cd> amps(std::uint64_t{1} << n_qubits, cd(0, 0));
  amps[0] = cd(1, 0);
  return StateVector(Unchecked{}, n_qubits, std::move(amps));
}

StateVector StateVector::all_down(int n_qubits) {
  check_qubits(n_qubits);
  std::vector<cd> amps(std::uint64_t{1} << n_qubits, cd(0, 0));
  amps.back() = cd(1, 0);
  return StateVector(Unchecked{}, n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<cd> amps) {
  check_qubits(n_qubits);
  if (amps.size() != (std::uint64_t{1} << n_qubits)) {
    throw std::invalid_argument("amplitude count must be 2^n_qubits");
  }
  double norm_sq = 0;
  for (const cd& a : amps) norm_sq += std::norm(a);
  if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
  return StateVector(Unchecked{}, n_qubits, std::move(amps));
}

double StateVector::norm() const {
  double norm_sq = 0;
  for (const cd& a : amp_) norm_sq += std::norm(a);
  return std::sqrt(norm_sq);
}

std::complex<double> inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("states act on different qubit counts");
  }
  cd acc(0, 0);
  for (std::uint64_t i = 0; i < a.dim(); ++i) {
    acc += std::conj(a.amplitude(i)) * b.amplitude(i);
  }
  return acc;
}

StateVector apply_pauli(const StateVector& state, const PauliString& p) {
  check_same_size(state, p);
  std::vector<cd> out(state.dim());
  const std::uint64_t x = p.x_bits();
  for (std::uint64_t b = 0; b < state.dim(); ++b) {
    out[b ^ x] = kUnitPhases[jump_phase_exp(p, b) & 3] * state.amplitude(b);
  }
  return StateVector(StateVector::Unchecked{}, state.n_qubits(),
                     std::move(out));
}

StateVector apply_exp_pauli(const StateVector& state, const PauliString& p,
                            double theta) {
  check_same_size(state, p);
  if (!p.has_real_phase()) {
    throw std::invalid_argument(
        "apply_exp_pauli: phase must be +1 or -1 for a Hermitian exponent");
  }
  std::vector<cd> amps(state.amplitudes().begin(), state.amplitudes().end());
  exp_pauli_inplace(amps, p, theta);
  return StateVector(StateVector::Unchecked{}, state.n_qubits(),
                     std::move(amps));
}

StateVector apply_exp_termset(const StateVector& state, const TermSet& ts,
                              double theta) {
  if (state.n_qubits() != ts.n_qubits) {
    throw std::invalid_argument("state and term set sizes differ");
  }
  std::vector<cd> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (const auto& term : ts.terms) {
    exp_pauli_inplace(amps, term, theta);
  }
  return StateVector(StateVector::Unchecked{}, state.n_qubits(),
                     std::move(amps));
}

double expectation(const StateVector& state, const PauliString& op) {
  if (!op.has_real_phase()) {
    throw std::invalid_argument("expectation: Pauli string is not Hermitian");
  }
  const StateVector mapped = apply_pauli(state, op);
  return real_part_checked(inner_product(state, mapped), 1.0);
}

double expectation(const StateVector& state, const TermSet& op) {
  const std::vector<cd> mapped = apply_termset_sum(state, op);
  cd acc(0, 0);
  double scale_sq = 0;
  for (std::uint64_t b = 0; b < state.dim(); ++b) {
    acc += std::conj(state.amplitude(b)) * mapped[b];
    scale_sq += std::norm(mapped[b]);
  }
  return real_part_checked(acc, std::sqrt(scale_sq));
}

double expectation(const StateVector& state, const Eigen::MatrixXcd& op) {
  const auto dim = static_cast<Eigen::Index>(state.dim());
  if (op.rows() != dim || op.cols() != dim) {
    throw std::invalid_argument("operator dimension does not match state");
  }
  const double scale = op.cwiseAbs().maxCoeff();
  if ((op - op.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, scale)) {
    throw std::invalid_argument("expectation: matrix is not Hermitian");
  }
  const Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(), dim);
  const Eigen::VectorXcd mapped = op * psi;
  return real_part_checked(psi.dot(mapped), mapped.norm());
}

double all_up_probability(const StateVector& state) {
  return std::norm(state.amplitude(0));
}

std::string state_to_json(const StateVector& state) {
  std::string out = "[";
  char buf[64];
  for (std::uint64_t b = 0; b < state.dim(); ++b) {
    const cd a = state.amplitude(b);
    std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", a.real(), a.imag());
    if (b) out += ',';
    out += buf;
  }
  out += ']';
  return out;
}

StateVector state_from_json(int n_qubits, std::string_view json_text) {
  const auto parsed = nlohmann::json::parse(json_text);
  if (!parsed.is_array()) {
    throw std::invalid_argument("state JSON must be an array of [re, im]");
  }
  std::vector<cd> amps;
  amps.reserve(parsed.size());
  for (const auto& entry : parsed) {
    if (!entry.is_array() || entry.size() != 2) {
      throw std::invalid_argument("state JSON entries must be [re, im] pairs");
    }
    amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return StateVector::from_amplitudes(n_qubits, std::move(amps));
}

}  // namespace qmet
