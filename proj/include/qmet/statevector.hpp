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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qmet/pauli.hpp"

namespace qmet {

/// Dense pure state of N qubits. Basis index bit j says qubit j is down, so
/// index 0 is the all-up state and index 2^N - 1 the all-down state.
///
/// States are immutable from the outside; every operation returns a fresh
/// value and preserves the norm up to rounding.
class StateVector {
 public:
  static constexpr int kMaxQubits = 24;
  static constexpr double kNormTolerance = 1e-12;

  static StateVector all_up(int n_qubits);
  static StateVector all_down(int n_qubits);

  /// Wraps explicit amplitudes; requires | ||amps||^2 - 1 | <= 1e-12.
  static StateVector from_amplitudes(int n_qubits,
                                     std::vector<std::complex<double>> amps);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
  std::complex<double> amplitude(std::uint64_t index) const {
    return amp_[index];
  }
  std::span<const std::complex<double>> amplitudes() const { return amp_; }
  double norm() const;

 private:
  struct Unchecked {};
  StateVector(Unchecked, int n_qubits, std::vector<std::complex<double>> amps)
      : n_qubits_(n_qubits), amp_(std::move(amps)) {}

  int n_qubits_;
  std::vector<std::complex<double>> amp_;

  friend StateVector apply_pauli(const StateVector&, const PauliString&);
  friend StateVector apply_exp_pauli(const StateVector&, const PauliString&,
                                     double);
  friend StateVector apply_exp_termset(const StateVector&, const TermSet&,
                                       double);
};

std::complex<double> inner_product(const StateVector& a, const StateVector& b);

/// Applies a Pauli string: an amplitude permutation with exact i^k factors.
StateVector apply_pauli(const StateVector& state, const PauliString& p);

/// exp(-i theta P) |state> = cos(theta)|state> - i sin(theta) P|state>.
/// P must carry a real phase so that it is Hermitian and squares to +1.
StateVector apply_exp_pauli(const StateVector& state, const PauliString& p,
                            double theta);

/// Applies the product of exp(-i theta T) over all terms T of the set, in the
/// set's fixed order. The terms commute, so this equals exp(-i theta sum).
StateVector apply_exp_termset(const StateVector& state, const TermSet& ts,
                              double theta);

/// <state|op|state> for a Hermitian operator. The imaginary residue must stay
/// below 1e-10 (relative to the operator output's scale); it is dropped.
double expectation(const StateVector& state, const PauliString& op);
double expectation(const StateVector& state, const TermSet& op);
double expectation(const StateVector& state, const Eigen::MatrixXcd& op);

/// Probability that every qubit is up: |amplitude(0)|^2.
double all_up_probability(const StateVector& state);

/// Serializes amplitudes as a JSON array of [re, im] pairs in index order.
std::string state_to_json(const StateVector& state);
StateVector state_from_json(int n_qubits, std::string_view json_text);

}  // namespace qmet
