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
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qmet {

/// Single-qubit Pauli letters.
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// An N-qubit tensor product of Pauli letters carrying a global phase drawn
/// from {+1, +i, -1, -i}.
///
/// Letters are stored symplectically: one x bit and one z bit per qubit
/// (X = x, Z = z, Y = both). The phase is kept as an exponent k of i, so
/// multiplication and commutation are exact integer arithmetic mod 4 and no
/// floating-point phase drift can accumulate.
///
/// Site 0 is the leftmost letter in text form ("XY" puts X on site 0) and
/// corresponds to bit 0 of a computational-basis index.
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;
  static constexpr int kMaxDenseQubits = 12;

  /// Identity string on n qubits (phase +1).
  explicit PauliString(int n_qubits);

  /// Builds a string from explicit letters; phase = i^phase_exponent.
  explicit PauliString(const std::vector<Pauli>& letters, int phase_exponent = 0);

  /// Parses text of the form "[-|i|-i|+]LLL..." with letters in {I,X,Y,Z},
  /// site 0 leftmost, e.g. "-YXY".
  static PauliString parse(std::string_view text);

  int n_qubits() const { return n_qubits_; }
  Pauli letter(int site) const;

  /// Phase exponent k with phase = i^k, k in {0,1,2,3}.
  int phase_exponent() const { return phase_exp_; }
  std::complex<double> phase() const;
  /// True iff the phase is +1 or -1, i.e. the string is Hermitian.
  bool has_real_phase() const { return (phase_exp_ & 1) == 0; }

  /// Returns a copy with the phase multiplied by i^k.
  PauliString with_phase_shift(int k) const;

  std::uint64_t x_bits() const { return x_bits_; }
  std::uint64_t z_bits() const { return z_bits_; }

  bool operator==(const PauliString& other) const = default;

 private:
  PauliString(int n_qubits, std::uint64_t x, std::uint64_t z, int phase_exp)
      : n_qubits_(n_qubits), x_bits_(x), z_bits_(z), phase_exp_(phase_exp) {}

  int n_qubits_;
  std::uint64_t x_bits_ = 0;
  std::uint64_t z_bits_ = 0;
  int phase_exp_ = 0;  // phase = i^phase_exp_, 0..3

  friend PauliString multiply(const PauliString&, const PauliString&);
};

/// Exact product p*q with the phase tracked mod 4.
PauliString multiply(const PauliString& p, const PauliString& q);
inline PauliString operator*(const PauliString& p, const PauliString& q) {
  return multiply(p, q);
}

/// Symplectic commutation test: p and q commute iff the number of sites where
/// they carry different non-identity letters is even.
bool commutes(const PauliString& p, const PauliString& q);

/// Dense 2^N x 2^N matrix, phase times the Kronecker product of the letters.
/// Site 0 is bit 0 of the row/column index. Limited to kMaxDenseQubits.
Eigen::MatrixXcd dense_matrix(const PauliString& p);

/// Renders e.g. "-YXY"; the phase prefix is one of "", "-", "i", "-i".
std::string to_string(const PauliString& p);

/// A list of qubit signs r_j in {+1,-1}; the index set from which the
/// commuting generator terms are built (+1 -> X on site j, -1 -> Y).
class SignVector {
 public:
  explicit SignVector(std::vector<int> signs);
  int size() const { return static_cast<int>(signs_.size()); }
  int sign(int site) const { return signs_.at(site); }
  const std::vector<int>& signs() const { return signs_; }

 private:
  std::vector<int> signs_;
};

/// Number of -1 entries.
int n_minus(const SignVector& r);

/// Which of the two commuting families a term set spans: H collects the terms
/// with an even number of Y letters, A the odd ones.
enum class TermSetKind { H, A };

char kind_char(TermSetKind kind);

/// The 2^{N-1} mutually commuting X/Y strings whose sum is the generator of
/// one kind. Term order is fixed: lexicographic in the sign vectors with
/// +1 before -1, so outputs are reproducible.
struct TermSet {
  int n_qubits = 0;
  TermSetKind kind = TermSetKind::H;
  std::vector<PauliString> terms;
};

/// Single term for a sign vector: letter X where r_j = +1, Y where r_j = -1,
/// phase (-1)^{N_-/2} for kind H (N_- even) and (-1)^{(N_- - 1)/2} for kind A
/// (N_- odd). Rejects sign vectors of the wrong parity.
PauliString term_from_signs(const SignVector& r, TermSetKind kind);

/// Enumerates all 2^{N-1} terms of the requested kind, N <= 24.
TermSet generate_terms(int n_qubits, TermSetKind kind);

/// Dense sum of all terms (the generator itself). Same dense limit as above.
Eigen::MatrixXcd dense_matrix(const TermSet& ts);

}  // namespace qmet
