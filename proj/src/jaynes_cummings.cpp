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

#include "qmet/jaynes_cummings.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qmet/errors.hpp"
#include "qmet/pauli.hpp"

namespace qmet {

namespace {

using cd = std::complex<double>;

constexpr int kMaxJCQubits = 8;
constexpr int kMaxFockCutoff = 8;
constexpr double kSupportTolerance = 1e-12;

// H_0 diagonal entry for photon number n and qubit basis state q:
// (omega/2) (N - 2 popcount(q)) + Omega n.
double free_energy(const JCModel& m, int n, std::uint64_t q) {
  const int up_minus_down = m.n_qubits - 2 * std::popcount(q);
  return 0.5 * m.omega * up_minus_down + m.Omega * n;
}

// Interaction element <n, all-up| H_I |n+1, all-down> = g 2^{N-1} sqrt(n+1).
double coupling(const JCModel& m, int photon_n) {
  return m.g * std::ldexp(1.0, m.n_qubits - 1) * std::sqrt(photon_n + 1.0);
}

std::uint64_t joint_index(const JointState& s, int n, std::uint64_t q) {
  return static_cast<std::uint64_t>(n) * s.qubit_dim() + q;
}

void check_photon_range(const JCModel& m, int photon_n) {
  if (photon_n < 0) throw std::invalid_argument("photon number must be >= 0");
  if (photon_n + 1 > m.fock_cutoff) {
    throw std::invalid_argument("photon block exceeds the Fock cutoff");
  }
}

}  // namespace

bool JCModel::resonant() const {
  return std::abs(Omega - n_qubits * omega) <= 1e-12 * n_qubits * omega;
}

void JCModel::validate() const {
  if (n_qubits < 1 || n_qubits > kMaxJCQubits) {
    throw std::invalid_argument("JCModel: n_qubits must be in [1, " +
                                std::to_string(kMaxJCQubits) + "]");
  }
  if (fock_cutoff < 1 || fock_cutoff > kMaxFockCutoff) {
    throw std::invalid_argument("JCModel: fock_cutoff must be in [1, " +
                                std::to_string(kMaxFockCutoff) + "]");
  }
  if (!(omega > 0) || !(Omega > 0)) {
    throw std::invalid_argument("JCModel: omega and Omega must be positive");
  }
}

JointState JointState::basis(int n_qubits, int fock_cutoff, int photon_n,
                             std::uint64_t qubit_index) {
  JCModel probe{n_qubits, 1.0, 1.0, 0.0, fock_cutoff};
  probe.validate();
  if (photon_n < 0 || photon_n > fock_cutoff) {
    throw std::invalid_argument("JointState: photon number out of range");
  }
  if (qubit_index >= probe.qubit_dim()) {
    throw std::invalid_argument("JointState: qubit index out of range");
  }
  std::vector<cd> amps(probe.joint_dim(), cd(0, 0));
  amps[static_cast<std::uint64_t>(photon_n) * probe.qubit_dim() + qubit_index] =
      cd(1, 0);
  return JointState(Unchecked{}, n_qubits, fock_cutoff, std::move(amps));
}

JointState JointState::product(int fock_cutoff, int photon_n,
                               const StateVector& qubits) {
  JointState out = basis(qubits.n_qubits(), fock_cutoff, photon_n, 0);
  std::fill(out.amp_.begin(), out.amp_.end(), cd(0, 0));
  const std::uint64_t base =
      static_cast<std::uint64_t>(photon_n) * out.qubit_dim();
  for (std::uint64_t q = 0; q < out.qubit_dim(); ++q) {
    out.amp_[base + q] = qubits.amplitude(q);
  }
  return out;
}

JointState JointState::from_amplitudes(int n_qubits, int fock_cutoff,
                                       std::vector<cd> amps) {
  JCModel probe{n_qubits, 1.0, 1.0, 0.0, fock_cutoff};
  probe.validate();
  if (amps.size() != probe.joint_dim()) {
    throw std::invalid_argument("JointState: need (cutoff+1) * 2^N amplitudes");
  }
  double norm_sq = 0;
  for (const cd& a : amps) norm_sq += std::norm(a);
  if (std::abs(norm_sq - 1.0) > 1e-12) {
    throw std::invalid_argument("JointState: state is not normalized");
  }
  return JointState(Unchecked{}, n_qubits, fock_cutoff, std::move(amps));
}

cd JointState::amplitude(int photon_n, std::uint64_t qubit_index) const {
  if (photon_n < 0 || photon_n > fock_cutoff_ || qubit_index >= qubit_dim()) {
    throw std::invalid_argument("JointState: index out of range");
  }
  return amp_[static_cast<std::uint64_t>(photon_n) * qubit_dim() + qubit_index];
}

double JointState::norm() const {
  double norm_sq = 0;
  for (const cd& a : amp_) norm_sq += std::norm(a);
  return std::sqrt(norm_sq);
}

int JointState::max_photon_support(double tol) const {
  for (int n = fock_cutoff_; n >= 0; --n) {
    for (std::uint64_t q = 0; q < qubit_dim(); ++q) {
      if (std::abs(amp_[static_cast<std::uint64_t>(n) * qubit_dim() + q]) > tol) {
        return n;
      }
    }
  }
  return -1;  // zero state
}

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols() || m.rows() < 2 ||
      (m.rows() & (m.rows() - 1)) != 0) {
    throw std::invalid_argument("DensityMatrix: dimension must be 2^N >= 2");
  }
  const int n_qubits = std::countr_zero(static_cast<std::uint64_t>(m.rows()));
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermTolerance) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  if (std::abs(m.trace() - cd(1, 0)) > kTraceTolerance) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m,
                                                         Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenvalueFloor) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  }
  return DensityMatrix(Unchecked{}, n_qubits, std::move(m));
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const auto dim = static_cast<Eigen::Index>(psi.dim());
  const Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), dim);
  return DensityMatrix(Unchecked{}, psi.n_qubits(), v * v.adjoint());
}

Eigen::MatrixXcd build_hamiltonian(const JCModel& model) {
  model.validate();
  const auto dim = static_cast<Eigen::Index>(model.joint_dim());
  const std::uint64_t qdim = model.qubit_dim();
  const std::uint64_t all_down = qdim - 1;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 0; n <= model.fock_cutoff; ++n) {
    for (std::uint64_t q = 0; q < qdim; ++q) {
      const auto idx = static_cast<Eigen::Index>(n * qdim + q);
      h(idx, idx) = free_energy(model, n, q);
    }
  }
  for (int n = 0; n + 1 <= model.fock_cutoff; ++n) {
    const auto up = static_cast<Eigen::Index>(n * qdim);  // |n>|all-up>
    const auto down = static_cast<Eigen::Index>((n + 1) * qdim + all_down);
    h(up, down) = coupling(model, n);
    h(down, up) = coupling(model, n);
  }
  return h;
}

double commutator_h0_hi_norm(const JCModel& model) {
  model.validate();
  const auto dim = static_cast<Eigen::Index>(model.joint_dim());
  Eigen::MatrixXcd h0 = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd hi = Eigen::MatrixXcd::Zero(dim, dim);
  const std::uint64_t qdim = model.qubit_dim();
  for (int n = 0; n <= model.fock_cutoff; ++n) {
    for (std::uint64_t q = 0; q < qdim; ++q) {
      const auto idx = static_cast<Eigen::Index>(n * qdim + q);
      h0(idx, idx) = free_energy(model, n, q);
    }
  }
  for (int n = 0; n + 1 <= model.fock_cutoff; ++n) {
    const auto up = static_cast<Eigen::Index>(n * qdim);
    const auto down = static_cast<Eigen::Index>((n + 1) * qdim + (qdim - 1));
    hi(up, down) = coupling(model, n);
    hi(down, up) = coupling(model, n);
  }
  const Eigen::MatrixXcd comm = h0 * hi - hi * h0;
  return comm.jacobiSvd().singularValues().maxCoeff();
}

double rabi_splitting(const JCModel& model, int photon_n) {
  model.validate();
  if (photon_n < 0) throw std::invalid_argument("photon number must be >= 0");
  const double detuning = model.omega * model.n_qubits - model.Omega;
  const double kappa = coupling(model, photon_n);
  return std::sqrt(detuning * detuning + 4 * kappa * kappa);
}

std::pair<double, double> analytic_eigenvalues(const JCModel& model,
                                               int photon_n) {
  model.validate();
  if (photon_n < 0) throw std::invalid_argument("photon number must be >= 0");
  const double center = model.Omega * (photon_n + 0.5);
  const double half_split = 0.5 * rabi_splitting(model, photon_n);
  return {center + half_split, center - half_split};
}

std::pair<JointState, JointState> analytic_eigenstates(const JCModel& model,
                                                       int photon_n) {
  model.validate();
  check_photon_range(model, photon_n);
  const double split = rabi_splitting(model, photon_n);
  if (split == 0) {
    throw DegenerateBlockError(
        "analytic_eigenstates: block splitting vanishes (g sqrt(n+1) = 0 at "
        "resonance)");
  }
  const double detuning = model.omega * model.n_qubits - model.Omega;
  const double ratio = detuning / split;
  const double alpha_plus = std::sqrt(1 + ratio);
  const double beta_plus = std::sqrt(1 - ratio);
  const double alpha_minus = std::sqrt(1 - ratio);
  const double beta_minus = -std::sqrt(1 + ratio);

  const std::uint64_t all_down = model.qubit_dim() - 1;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto make = [&](double alpha, double beta) {
    JointState s =
        JointState::basis(model.n_qubits, model.fock_cutoff, photon_n, 0);
    s.amp_[joint_index(s, photon_n, 0)] = alpha * inv_sqrt2;
    s.amp_[joint_index(s, photon_n + 1, all_down)] = beta * inv_sqrt2;
    return s;
  };
  return {make(alpha_plus, beta_plus), make(alpha_minus, beta_minus)};
}

JointState evolve(const JCModel& model, const JointState& initial, double t) {
  model.validate();
  if (initial.n_qubits() != model.n_qubits ||
      initial.fock_cutoff() != model.fock_cutoff) {
    throw std::invalid_argument("evolve: state does not match the model space");
  }
  if (initial.max_photon_support(kSupportTolerance) > model.fock_cutoff - 1) {
    throw CutoffViolationError(
        "evolve: initial photon support reaches the Fock cutoff; raise the "
        "cutoff so every coupled partner level is represented");
  }

  const std::uint64_t qdim = model.qubit_dim();
  const std::uint64_t all_down = qdim - 1;
  std::vector<cd> out(initial.dim(), cd(0, 0));
  const cd minus_i(0, -1);

  // Coupled pairs |n>|all-up> <-> |n+1>|all-down>: exact 2x2 evolution
  // exp(-i t (Ebar + (D/2) sz + kappa sx)) =
  //   e^{-i t Ebar} [cos(rho t) - i sin(rho t) ((D/2) sz + kappa sx) / rho].
  for (int n = 0; n + 1 <= model.fock_cutoff; ++n) {
    const std::uint64_t i_up = joint_index(initial, n, 0);
    const std::uint64_t i_down = joint_index(initial, n + 1, all_down);
    const double e_up = free_energy(model, n, 0);
    const double e_down = free_energy(model, n + 1, all_down);
    const double ebar = 0.5 * (e_up + e_down);
    const double half_detuning = 0.5 * (e_up - e_down);
    const double kappa = coupling(model, n);
    const double rho = std::hypot(half_detuning, kappa);
    const cd global = std::exp(minus_i * ebar * t);

    cd u00, u01, u10, u11;
    if (rho == 0) {
      u00 = u11 = cd(1, 0);
      u01 = u10 = cd(0, 0);
    } else {
      const double c = std::cos(rho * t);
      const double s = std::sin(rho * t) / rho;
      u00 = cd(c, -s * half_detuning);
      u11 = cd(c, s * half_detuning);
      u01 = u10 = minus_i * (s * kappa);
    }
    const cd a_up = initial.amp_[i_up];
    const cd a_down = initial.amp_[i_down];
    out[i_up] = global * (u00 * a_up + u01 * a_down);
    out[i_down] = global * (u10 * a_up + u11 * a_down);
  }

  // |0>|all-down> has no partner level below and is annihilated by the
  // interaction; it only collects its free phase.
  {
    const std::uint64_t idx = joint_index(initial, 0, all_down);
    out[idx] = std::exp(minus_i * free_energy(model, 0, all_down) * t) *
               initial.amp_[idx];
  }

  // Mixed qubit configurations are annihilated by the interaction.
  for (int n = 0; n <= model.fock_cutoff; ++n) {
    for (std::uint64_t q = 1; q < all_down; ++q) {
      const std::uint64_t idx = joint_index(initial, n, q);
      out[idx] =
          std::exp(minus_i * free_energy(model, n, q) * t) * initial.amp_[idx];
    }
  }

  return JointState(JointState::Unchecked{}, model.n_qubits, model.fock_cutoff,
                    std::move(out));
}

DensityMatrix partial_trace_photons(const JointState& state) {
  const auto qdim = static_cast<Eigen::Index>(state.qubit_dim());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(qdim, qdim);
  for (int n = 0; n <= state.fock_cutoff(); ++n) {
    const Eigen::Map<const Eigen::VectorXcd> block(
        state.amplitudes().data() + static_cast<std::uint64_t>(n) * qdim, qdim);
    rho += block * block.adjoint();
  }
  return DensityMatrix(DensityMatrix::Unchecked{}, state.n_qubits(),
                       std::move(rho));
}

DensityMatrix kraus_map(const DensityMatrix& rho0, double theta, int n_qubits) {
  if (rho0.n_qubits() != n_qubits) {
    throw std::invalid_argument("kraus_map: density matrix size mismatch");
  }
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n_qubits);
  const Eigen::Index up = 0;
  const Eigen::Index down = dim - 1;

  double residue = 0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const bool inside = (r == up || r == down) && (c == up || c == down);
      if (!inside) residue = std::max(residue, std::abs(rho0.matrix()(r, c)));
    }
  }
  if (residue > 1e-10) {
    throw SupportViolationError(
        "kraus_map: input has weight outside span{all-up, all-down}");
  }

  const TermSet generator = generate_terms(n_qubits, TermSetKind::H);
  const StateVector v_up =
      apply_exp_termset(StateVector::all_up(n_qubits), generator, theta);
  const StateVector v_down =
      apply_exp_termset(StateVector::all_down(n_qubits), generator, theta);

  // 2x2 unitary of exp(-i theta H) restricted to the invariant flag subspace.
  Eigen::Matrix2cd u;
  u << v_up.amplitude(0), v_down.amplitude(0),
      v_up.amplitude(static_cast<std::uint64_t>(down)),
      v_down.amplitude(static_cast<std::uint64_t>(down));
  Eigen::Matrix2cd block;
  block << rho0.matrix()(up, up), rho0.matrix()(up, down),
      rho0.matrix()(down, up), rho0.matrix()(down, down);
  const Eigen::Matrix2cd evolved = u * block * u.adjoint();

  // Projecting onto the flag states keeps only the populations; this is the
  // dephasing the photon record imposes after tracing it out.
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  out(up, up) = evolved(0, 0).real();
  out(down, down) = evolved(1, 1).real();
  return DensityMatrix(DensityMatrix::Unchecked{}, n_qubits, std::move(out));
}

double all_up_expectation(const DensityMatrix& rho) {
  return rho.matrix()(0, 0).real();
}

}  // namespace qmet
