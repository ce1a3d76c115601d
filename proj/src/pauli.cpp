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

#include "qmet/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qmet {

namespace {

constexpr int kMaxEnumerationQubits = 24;

constexpr std::complex<double> kPhases[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

void check_site_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > PauliString::kMaxQubits) {
    throw std::invalid_argument("PauliString: n_qubits must be in [1, " +
                                std::to_string(PauliString::kMaxQubits) + "]");
  }
}

void check_same_size(const PauliString& p, const PauliString& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw std::invalid_argument("Pauli strings act on different qubit counts");
  }
}

Eigen::Matrix2cd single_qubit_matrix(Pauli p) {
  const std::complex<double> i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw std::invalid_argument("invalid Pauli letter");
}

PauliString::PauliString(int n_qubits) : n_qubits_(n_qubits) {
  check_site_count(n_qubits);
}

PauliString::PauliString(const std::vector<Pauli>& letters, int phase_exponent)
    : n_qubits_(static_cast<int>(letters.size())) {
  check_site_count(n_qubits_);
  for (int site = 0; site < n_qubits_; ++site) {
    const auto l = letters[site];
    if (l == Pauli::X || l == Pauli::Y) x_bits_ |= std::uint64_t{1} << site;
    if (l == Pauli::Z || l == Pauli::Y) z_bits_ |= std::uint64_t{1} << site;
  }
  phase_exp_ = ((phase_exponent % 4) + 4) % 4;
}

PauliString PauliString::parse(std::string_view text) {
  int phase_exp = 0;
  if (text.starts_with("-i")) {
    phase_exp = 3;
    text.remove_prefix(2);
  } else if (text.starts_with("i")) {
    phase_exp = 1;
    text.remove_prefix(1);
  } else if (text.starts_with("-")) {
    phase_exp = 2;
    text.remove_prefix(1);
  } else if (text.starts_with("+")) {
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("PauliString: no letters");
  std::vector<Pauli> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': letters.push_back(Pauli::I); break;
      case 'X': letters.push_back(Pauli::X); break;
      case 'Y': letters.push_back(Pauli::Y); break;
      case 'Z': letters.push_back(Pauli::Z); break;
      default:
        throw std::invalid_argument(std::string("PauliString: bad letter '") +
                                    c + "'");
    }
  }
  return PauliString(letters, phase_exp);
}

Pauli PauliString::letter(int site) const {
  if (site < 0 || site >= n_qubits_) {
    throw std::invalid_argument("PauliString: site out of range");
  }
  const bool x = (x_bits_ >> site) & 1;
  const bool z = (z_bits_ >> site) & 1;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

std::complex<double> PauliString::phase() const { return kPhases[phase_exp_]; }

PauliString PauliString::with_phase_shift(int k) const {
  PauliString out = *this;
  out.phase_exp_ = ((phase_exp_ + k) % 4 + 4) % 4;
  return out;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  check_same_size(p, q);
  const std::uint64_t x = p.x_bits_ ^ q.x_bits_;
  const std::uint64_t z = p.z_bits_ ^ q.z_bits_;
  // Per site, with letters written canonically as i^{xz} X^x Z^z, the product
  // picks up i^{x1 z1 + x2 z2 + 2 z1 x2 - x3 z3} where (x3, z3) = (x1^x2, z1^z2).
  int e = p.phase_exp_ + q.phase_exp_;
  e += std::popcount(p.x_bits_ & p.z_bits_);
  e += std::popcount(q.x_bits_ & q.z_bits_);
  e += 2 * std::popcount(p.z_bits_ & q.x_bits_);
  e -= std::popcount(x & z);
  return PauliString(p.n_qubits_, x, z, ((e % 4) + 4) % 4);
}

bool commutes(const PauliString& p, const PauliString& q) {
  check_same_size(p, q);
  const int anti = std::popcount(p.x_bits() & q.z_bits()) +
                   std::popcount(p.z_bits() & q.x_bits());
  return (anti & 1) == 0;
}

Eigen::MatrixXcd dense_matrix(const PauliString& p) {
  if (p.n_qubits() > PauliString::kMaxDenseQubits) {
    throw std::invalid_argument("dense_matrix: beyond dense qubit limit");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Constant(1, 1, p.phase());
  for (int site = 0; site < p.n_qubits(); ++site) {
    // Site `site` occupies bit `site` of the basis index, so each new factor
    // becomes the most significant block of the Kronecker product.
    const Eigen::Matrix2cd f = single_qubit_matrix(p.letter(site));
    Eigen::MatrixXcd next(2 * m.rows(), 2 * m.cols());
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        next.block(a * m.rows(), b * m.cols(), m.rows(), m.cols()) =
            f(a, b) * m;
      }
    }
    m.swap(next);
  }
  return m;
}

std::string to_string(const PauliString& p) {
  static const char* kPrefix[4] = {"", "i", "-", "-i"};
  std::string out = kPrefix[p.phase_exponent()];
  for (int site = 0; site < p.n_qubits(); ++site) {
    out += pauli_char(p.letter(site));
  }
  return out;
}

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw std::invalid_argument("SignVector: empty");
  for (int s : signs_) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("SignVector: entries must be +1 or -1");
    }
  }
}

int n_minus(const SignVector& r) {
  int count = 0;
  for (int s : r.signs()) count += (1 - s) / 2;
  return count;
}

char kind_char(TermSetKind kind) { return kind == TermSetKind::H ? 'H' : 'A'; }

PauliString term_from_signs(const SignVector& r, TermSetKind kind) {
  const int nm = n_minus(r);
  const bool odd = nm & 1;
  if (kind == TermSetKind::H && odd) {
    throw std::invalid_argument("term_from_signs: kind H needs an even sign count");
  }
  if (kind == TermSetKind::A && !odd) {
    throw std::invalid_argument("term_from_signs: kind A needs an odd sign count");
  }
  std::vector<Pauli> letters(r.size());
  for (int site = 0; site < r.size(); ++site) {
    letters[site] = r.sign(site) == 1 ? Pauli::X : Pauli::Y;
  }
  // (-1)^{N_-/2} = i^{N_-} for even N_-, (-1)^{(N_- - 1)/2} = i^{N_- - 1} for odd.
  const int phase_exp = kind == TermSetKind::H ? nm : nm - 1;
  return PauliString(letters, phase_exp);
}

TermSet generate_terms(int n_qubits, TermSetKind kind) {
  if (n_qubits < 1 || n_qubits > kMaxEnumerationQubits) {
    throw std::invalid_argument("generate_terms: n_qubits must be in [1, " +
                                std::to_string(kMaxEnumerationQubits) + "]");
  }
  TermSet ts;
  ts.n_qubits = n_qubits;
  ts.kind = kind;
  ts.terms.reserve(std::uint64_t{1} << (n_qubits - 1));
  const int want_odd = kind == TermSetKind::A ? 1 : 0;
  std::vector<int> signs(n_qubits);
  // Ascending m enumerates sign vectors lexicographically with +1 < -1 when
  // the bit for site j sits at position N-1-j.
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n_qubits); ++m) {
    if ((std::popcount(m) & 1) != want_odd) continue;
    for (int site = 0; site < n_qubits; ++site) {
      signs[site] = (m >> (n_qubits - 1 - site)) & 1 ? -1 : 1;
    }
    ts.terms.push_back(term_from_signs(SignVector(signs), kind));
  }
  return ts;
}

Eigen::MatrixXcd dense_matrix(const TermSet& ts) {
  if (ts.terms.empty()) throw std::invalid_argument("dense_matrix: empty term set");
  Eigen::MatrixXcd sum = dense_matrix(ts.terms.front());
  for (std::size_t i = 1; i < ts.terms.size(); ++i) {
    sum += dense_matrix(ts.terms[i]);
  }
  return sum;
}

}  // namespace qmet
