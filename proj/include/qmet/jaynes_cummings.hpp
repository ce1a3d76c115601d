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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qmet/statevector.hpp"

namespace qmet {

/// Generalized Jaynes-Cummings model: one photon mode of frequency Omega
/// coupled to N qubits of splitting omega through a collective raising /
/// lowering interaction, on a photon space truncated at fock_cutoff.
///
/// The interaction only connects |n>|all-up> with |n+1>|all-down| (matrix
/// element g 2^{N-1} sqrt(n+1)) and annihilates every other qubit
/// configuration, so the Hamiltonian is an exact direct sum of 2x2 blocks
/// plus diagonal rest; the truncation introduces no error for states whose
/// photon support stays below the cutoff. hbar = 1 throughout.
struct JCModel {
  int n_qubits = 1;
  double omega = 1.0;   // qubit level splitting
  double Omega = 1.0;   // photon mode frequency
  double g = 0.0;       // real coupling constant
  int fock_cutoff = 1;  // largest photon number represented

  /// Resonance Omega = N omega makes the free and interaction parts commute.
  bool resonant() const;
  void validate() const;

  std::uint64_t qubit_dim() const { return std::uint64_t{1} << n_qubits; }
  std::uint64_t joint_dim() const {
    return static_cast<std::uint64_t>(fock_cutoff + 1) * qubit_dim();
  }
};

/// Pure state of the photon mode plus qubit register, amplitude layout
/// photon-major: index = photon_n * 2^N + qubit_basis_index.
class JointState {
 public:
  static JointState basis(int n_qubits, int fock_cutoff, int photon_n,
                          std::uint64_t qubit_index);
  /// |photon_n> tensor (qubit state).
  static JointState product(int fock_cutoff, int photon_n,
                            const StateVector& qubits);
  static JointState from_amplitudes(int n_qubits, int fock_cutoff,
                                    std::vector<std::complex<double>> amps);

  int n_qubits() const { return n_qubits_; }
  int fock_cutoff() const { return fock_cutoff_; }
  std::uint64_t qubit_dim() const { return std::uint64_t{1} << n_qubits_; }
  std::uint64_t dim() const { return amp_.size(); }
  std::complex<double> amplitude(int photon_n, std::uint64_t qubit_index) const;
  std::span<const std::complex<double>> amplitudes() const { return amp_; }
  double norm() const;
  /// Largest photon number carrying more than numerical-noise weight.
  int max_photon_support(double tol = 1e-12) const;

 private:
  struct Unchecked {};
  JointState(Unchecked, int n_qubits, int fock_cutoff,
             std::vector<std::complex<double>> amps)
      : n_qubits_(n_qubits), fock_cutoff_(fock_cutoff), amp_(std::move(amps)) {}

  int n_qubits_;
  int fock_cutoff_;
  std::vector<std::complex<double>> amp_;

  friend JointState evolve(const JCModel&, const JointState&, double);
  friend std::pair<JointState, JointState> analytic_eigenstates(const JCModel&,
                                                                int);
};

/// Qubit-register density matrix with the usual physicality checks.
class DensityMatrix {
 public:
  static constexpr double kHermTolerance = 1e-12;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kEigenvalueFloor = -1e-10;

  /// Validates Hermiticity, unit trace and positivity (up to the floors).
  static DensityMatrix from_matrix(Eigen::MatrixXcd m);
  /// |psi><psi| for a pure qubit state.
  static DensityMatrix pure(const StateVector& psi);

  int n_qubits() const { return n_qubits_; }
  const Eigen::MatrixXcd& matrix() const { return mat_; }

 private:
  struct Unchecked {};
  DensityMatrix(Unchecked, int n_qubits, Eigen::MatrixXcd m)
      : n_qubits_(n_qubits), mat_(std::move(m)) {}

  int n_qubits_;
  Eigen::MatrixXcd mat_;

  friend DensityMatrix partial_trace_photons(const JointState&);
  friend DensityMatrix kraus_map(const DensityMatrix&, double, int);
};

/// Dense Hamiltonian on the truncated joint space.
Eigen::MatrixXcd build_hamiltonian(const JCModel& model);

/// Operator norm (largest singular value) of [H_0, H_I]; zero at resonance,
/// growing linearly in the detuning N omega - Omega.
double commutator_h0_hi_norm(const JCModel& model);

/// (lambda_plus, lambda_minus) of the photon-n block:
/// Omega (n + 1/2) +- Omega_1 / 2 with
/// Omega_1 = sqrt((omega N - Omega)^2 + g^2 (n+1) 2^{2N}).
std::pair<double, double> analytic_eigenvalues(const JCModel& model,
                                               int photon_n);

/// Rabi splitting Omega_1 of the photon-n block.
double rabi_splitting(const JCModel& model, int photon_n);

/// Normalized eigenstates (plus, minus) of the photon-n block:
/// (alpha |n>|all-up> + beta |n+1>|all-down>) / sqrt(2) with
/// alpha_pm = sqrt(1 +- D/Omega_1), beta_pm = +- sqrt(1 -+ D/Omega_1),
/// D = omega N - Omega. Throws DegenerateBlockError when Omega_1 = 0.
std::pair<JointState, JointState> analytic_eigenstates(const JCModel& model,
                                                       int photon_n);

/// Exact evolution exp(-i t H): closed form on each 2x2 block, free phases on
/// the interaction-annihilated states. The initial photon support must stay
/// at or below fock_cutoff - 1 so every coupled partner level exists;
/// otherwise CutoffViolationError (never a silent truncation).
JointState evolve(const JCModel& model, const JointState& initial, double t);

/// rho[a, b] = sum_n amp(n, a) conj(amp(n, b)).
DensityMatrix partial_trace_photons(const JointState& state);

/// Effective qubit-register channel of one resonant interaction window with
/// accumulated angle theta = t g sqrt(n+1): evolve by exp(-i theta H) (H the
/// N-qubit generator of kind H) and project onto the all-up / all-down flag
/// states, which is what tracing out the photon record does. Defined for
/// inputs supported on span{all-up, all-down} (residue above 1e-10 throws
/// SupportViolationError); coherences between the two flag states are erased
/// by the photon record.
DensityMatrix kraus_map(const DensityMatrix& rho0, double theta, int n_qubits);

/// tr(rho X) with X the all-up projector.
double all_up_expectation(const DensityMatrix& rho);

}  // namespace qmet
