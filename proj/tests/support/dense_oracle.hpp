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

// Test-only dense brute-force oracle. Everything here is built directly from
// 2x2 matrices and generic dense linear algebra so it shares no code path
// with the bitwise implementation it is used to check.

#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qmet/pauli.hpp"
#include "qmet/statevector.hpp"

namespace qmet::oracle {

/// kron(a, b) with a as the most significant block.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Dense matrix of a Pauli string given by its letters and phase exponent,
/// site 0 = bit 0 of the basis index. Never calls qmet::dense_matrix.
Eigen::MatrixXcd dense_from_letters(std::string_view letters,
                                    int phase_exponent = 0);

/// Dense matrix of an implementation PauliString, reconstructed letterwise.
Eigen::MatrixXcd dense(const PauliString& p);

/// Dense sum of a term set, reconstructed letterwise.
Eigen::MatrixXcd dense(const TermSet& ts);

/// exp(-i theta h) v via eigendecomposition of the Hermitian matrix h.
Eigen::VectorXcd evolve_dense(const Eigen::MatrixXcd& h, double theta,
                              const Eigen::VectorXcd& v);

Eigen::VectorXcd to_vector(const StateVector& s);
StateVector to_state(int n_qubits, const Eigen::VectorXcd& v);

/// Random normalized state from a seeded engine.
StateVector random_state(int n_qubits, std::uint64_t seed);

/// Random Hermitian matrix with entries of order 1.
Eigen::MatrixXcd random_hermitian(int dim, std::uint64_t seed);

/// Random Pauli string over all four letters with a random phase.
PauliString random_pauli(int n_qubits, std::uint64_t seed);

}  // namespace qmet::oracle
