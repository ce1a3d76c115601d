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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "dense_oracle.hpp"
#include "qmet/pauli.hpp"
#include "qmet/rng.hpp"

using namespace qmet;
using cd = std::complex<double>;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

SignVector sv(std::vector<int> signs) { return SignVector(std::move(signs)); }

}  // namespace

TEST_CASE("single qubit products follow the Pauli algebra") {
  const auto x = PauliString::parse("X");
  const auto y = PauliString::parse("Y");
  // sigma_x sigma_y = i sigma_z
  CHECK(multiply(x, y) == PauliString::parse("iZ"));
  CHECK(multiply(y, x) == PauliString::parse("-iZ"));
  CHECK(multiply(x, x) == PauliString::parse("I"));
}

TEST_CASE("XX times YY is -ZZ") {
  const auto p = multiply(PauliString::parse("XX"), PauliString::parse("YY"));
  CHECK(p == PauliString::parse("-ZZ"));
  // frozen from the 4x4 Kronecker-product oracle
  CHECK(max_abs(oracle::dense_from_letters("XX") *
                    oracle::dense_from_letters("YY") -
                oracle::dense(p)) == doctest::Approx(0.0));
}

TEST_CASE("a string squares to phase^2 times identity") {
  auto rng = make_engine(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto p = oracle::random_pauli(n, rng());
    const auto sq = multiply(p, p);
    CHECK(sq.x_bits() == 0);
    CHECK(sq.z_bits() == 0);
    const int expected = (2 * p.phase_exponent()) % 4;
    CHECK(sq.phase_exponent() == expected);
  }
}

TEST_CASE("multiply matches dense multiplication") {
  SUBCASE("exhaustive over generated terms, N <= 4") {
    for (int n = 1; n <= 4; ++n) {
      for (auto kind : {TermSetKind::H, TermSetKind::A}) {
        const TermSet ts = generate_terms(n, kind);
        for (const auto& p : ts.terms) {
          for (const auto& q : ts.terms) {
            const auto prod = multiply(p, q);
            CHECK(max_abs(oracle::dense(p) * oracle::dense(q) -
                          oracle::dense(prod)) < 1e-14);
          }
        }
      }
    }
  }
  SUBCASE("randomized general strings with I and Z letters") {
    auto rng = make_engine(12);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 4);
      const auto p = oracle::random_pauli(n, rng());
      const auto q = oracle::random_pauli(n, rng());
      const auto prod = multiply(p, q);
      CHECK(max_abs(oracle::dense(p) * oracle::dense(q) - oracle::dense(prod)) <
            1e-14);
    }
  }
}

TEST_CASE("commutes matches the dense commutator") {
  CHECK(commutes(PauliString::parse("XX"), PauliString::parse("YY")));
  CHECK_FALSE(commutes(PauliString::parse("X"), PauliString::parse("Y")));
  CHECK(commutes(PauliString::parse("XY"), PauliString::parse("YX")));

  auto rng = make_engine(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto p = oracle::random_pauli(n, rng());
    const auto q = oracle::random_pauli(n, rng());
    const auto dp = oracle::dense(p);
    const auto dq = oracle::dense(q);
    CHECK(commutes(p, q) == (max_abs(dp * dq - dq * dp) < 1e-12));
  }
}

TEST_CASE("multiply and commutes reject size mismatches") {
  CHECK_THROWS_AS(multiply(PauliString::parse("X"), PauliString::parse("XX")),
                  std::invalid_argument);
  CHECK_THROWS_AS(commutes(PauliString::parse("X"), PauliString::parse("XX")),
                  std::invalid_argument);
}

TEST_CASE("n_minus counts -1 entries") {
  CHECK(n_minus(sv({1, 1})) == 0);
  CHECK(n_minus(sv({1, -1, -1})) == 2);
  CHECK(n_minus(sv({-1, -1, -1})) == 3);
}

TEST_CASE("term_from_signs produces the phased X/Y strings") {
  CHECK(term_from_signs(sv({1, 1}), TermSetKind::H) == PauliString::parse("XX"));
  CHECK(term_from_signs(sv({-1, -1}), TermSetKind::H) ==
        PauliString::parse("-YY"));
  CHECK(term_from_signs(sv({1, -1}), TermSetKind::A) ==
        PauliString::parse("XY"));

  CHECK_THROWS_AS(term_from_signs(sv({1, -1}), TermSetKind::H),
                  std::invalid_argument);
  CHECK_THROWS_AS(term_from_signs(sv({1, 1}), TermSetKind::A),
                  std::invalid_argument);
}

TEST_CASE("generate_terms enumerates the right sets") {
  SUBCASE("N = 1") {
    const TermSet h = generate_terms(1, TermSetKind::H);
    REQUIRE(h.terms.size() == 1);
    CHECK(h.terms[0] == PauliString::parse("X"));
    const TermSet a = generate_terms(1, TermSetKind::A);
    REQUIRE(a.terms.size() == 1);
    CHECK(a.terms[0] == PauliString::parse("Y"));
  }
  SUBCASE("N = 2 term order is lexicographic with +1 first") {
    const TermSet h = generate_terms(2, TermSetKind::H);
    REQUIRE(h.terms.size() == 2);
    CHECK(to_string(h.terms[0]) == "XX");
    CHECK(to_string(h.terms[1]) == "-YY");
    const TermSet a = generate_terms(2, TermSetKind::A);
    REQUIRE(a.terms.size() == 2);
    CHECK(to_string(a.terms[0]) == "XY");
    CHECK(to_string(a.terms[1]) == "YX");
  }
  SUBCASE("N = 3 kind A has odd Y counts") {
    const TermSet a = generate_terms(3, TermSetKind::A);
    REQUIRE(a.terms.size() == 4);
    for (const auto& term : a.terms) {
      int y_count = 0;
      for (int site = 0; site < 3; ++site) {
        CHECK((term.letter(site) == Pauli::X || term.letter(site) == Pauli::Y));
        y_count += term.letter(site) == Pauli::Y;
      }
      CHECK((y_count == 1 || y_count == 3));
    }
  }
  SUBCASE("sizes and letter alphabet up to N = 10") {
    for (int n = 1; n <= 10; ++n) {
      for (auto kind : {TermSetKind::H, TermSetKind::A}) {
        const TermSet ts = generate_terms(n, kind);
        CHECK(ts.terms.size() == (std::size_t{1} << (n - 1)));
        for (const auto& term : ts.terms) {
          CHECK(term.x_bits() == (std::uint64_t{1} << n) - 1);
          CHECK(term.has_real_phase());
        }
      }
    }
  }
  SUBCASE("range errors") {
    CHECK_THROWS_AS(generate_terms(0, TermSetKind::H), std::invalid_argument);
    CHECK_THROWS_AS(generate_terms(25, TermSetKind::H), std::invalid_argument);
  }
}

TEST_CASE("terms commute within a set and anticommute across sets") {
  for (int n = 1; n <= 6; ++n) {
    const TermSet h = generate_terms(n, TermSetKind::H);
    const TermSet a = generate_terms(n, TermSetKind::A);
    for (std::size_t i = 0; i < h.terms.size(); ++i) {
      for (std::size_t j = i + 1; j < h.terms.size(); ++j) {
        CHECK(commutes(h.terms[i], h.terms[j]));
        CHECK(commutes(a.terms[i], a.terms[j]));
      }
    }
    for (const auto& p : h.terms) {
      for (const auto& q : a.terms) {
        CHECK_FALSE(commutes(p, q));
      }
    }
  }
  // dense cross-check of the anticommutator at small N
  for (int n = 1; n <= 3; ++n) {
    const TermSet h = generate_terms(n, TermSetKind::H);
    const TermSet a = generate_terms(n, TermSetKind::A);
    for (const auto& p : h.terms) {
      for (const auto& q : a.terms) {
        const auto dp = oracle::dense(p);
        const auto dq = oracle::dense(q);
        CHECK(max_abs(dp * dq + dq * dp) < 1e-14);
      }
    }
  }
}

TEST_CASE("dense H plus i A is the raising-product identity") {
  const cd i(0, 1);
  for (int n = 1; n <= 5; ++n) {
    const Eigen::MatrixXcd lhs = dense_matrix(generate_terms(n, TermSetKind::H)) +
                                 i * dense_matrix(generate_terms(n, TermSetKind::A));
    // (sigma_x + i sigma_y) has the single entry 2 at (0, 1); its N-fold
    // Kronecker product has the single entry 2^N at (0, 2^N - 1).
    Eigen::MatrixXcd rhs =
        Eigen::MatrixXcd::Zero(lhs.rows(), lhs.cols());
    Eigen::MatrixXcd factor(2, 2);
    factor << 0, 2, 0, 0;
    rhs = Eigen::MatrixXcd::Constant(1, 1, cd(1, 0));
    for (int site = 0; site < n; ++site) rhs = oracle::kron(factor, rhs);
    CHECK(max_abs(lhs - rhs) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("each generated term has eigenvalues +1 and -1") {
  for (int n = 1; n <= 3; ++n) {
    for (auto kind : {TermSetKind::H, TermSetKind::A}) {
      for (const auto& term : generate_terms(n, kind).terms) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
            oracle::dense(term), Eigen::EigenvaluesOnly);
        for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
          CHECK(std::abs(std::abs(solver.eigenvalues()[k]) - 1.0) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("dense_matrix matches the textbook matrices") {
  const Eigen::MatrixXcd x = dense_matrix(PauliString::parse("X"));
  CHECK(x(0, 1) == cd(1, 0));
  CHECK(x(1, 0) == cd(1, 0));
  CHECK(x(0, 0) == cd(0, 0));

  const Eigen::MatrixXcd y = dense_matrix(PauliString::parse("Y"));
  CHECK(y(0, 1) == cd(0, -1));
  CHECK(y(1, 0) == cd(0, 1));

  // H at N=2 maps the all-up state to 2 |down down>
  const Eigen::MatrixXcd h2 = dense_matrix(generate_terms(2, TermSetKind::H));
  Eigen::VectorXcd up = Eigen::VectorXcd::Zero(4);
  up(0) = 1;
  const Eigen::VectorXcd mapped = h2 * up;
  CHECK(std::abs(mapped(3) - cd(2, 0)) < 1e-14);
  CHECK(mapped.head(3).norm() < 1e-14);

  CHECK_THROWS_AS(dense_matrix(PauliString(13)), std::invalid_argument);
}

TEST_CASE("dense_matrix agrees with the letterwise oracle on random strings") {
  auto rng = make_engine(14);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto p = oracle::random_pauli(n, rng());
    CHECK(max_abs(dense_matrix(p) - oracle::dense(p)) == doctest::Approx(0.0));
  }
}

TEST_CASE("text round trip") {
  CHECK(to_string(PauliString::parse("-YXY")) == "-YXY");
  CHECK(to_string(PauliString::parse("iXZ")) == "iXZ");
  CHECK(to_string(PauliString::parse("-iZI")) == "-iZI");
  CHECK(to_string(PauliString::parse("+XX")) == "XX");

  auto rng = make_engine(15);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto p = oracle::random_pauli(n, rng());
    CHECK(PauliString::parse(to_string(p)) == p);
  }

  CHECK_THROWS_AS(PauliString::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("-"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("XQ"), std::invalid_argument);
}

TEST_CASE("sign vectors validate their entries") {
  CHECK_THROWS_AS(SignVector({}), std::invalid_argument);
  CHECK_THROWS_AS(SignVector({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SignVector({2}), std::invalid_argument);
}
