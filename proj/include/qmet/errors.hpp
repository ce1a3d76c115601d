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

#include <stdexcept>
#include <string>

namespace qmet {

/// Base class for all qmet-specific failures. Plain precondition violations
/// (dimension mismatches, out-of-range sizes) throw std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A floating-point result fell outside its mathematically allowed range by
/// more than the accepted rounding budget.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The expectation value of the measured observable has (numerically) zero
/// slope at the requested parameter value, so no precision can be quoted.
class StationaryPointError : public Error {
 public:
  StationaryPointError(double theta, const std::string& what)
      : Error(what), theta_(theta) {}
  double theta() const { return theta_; }

 private:
  double theta_;
};

/// The generator spectrum is degenerate (lambda_max == lambda_min).
class DegenerateGeneratorError : public Error {
 public:
  using Error::Error;
};

/// A Jaynes-Cummings 2x2 block has a vanishing splitting, so the analytic
/// eigenvectors are not defined.
class DegenerateBlockError : public Error {
 public:
  using Error::Error;
};

/// Evolving the requested state would need photon levels above the cutoff.
class CutoffViolationError : public Error {
 public:
  using Error::Error;
};

/// A density matrix has weight outside the subspace a map is defined on.
class SupportViolationError : public Error {
 public:
  using Error::Error;
};

/// The true parameter of a Monte-Carlo run sits outside (or too close to the
/// edge of) the monotonic branch the estimator inverts.
class BranchViolationError : public Error {
 public:
  using Error::Error;
};

/// A Monte-Carlo configuration produced a degenerate ensemble (zero variance
/// or vanishing estimator response).
class DegenerateConfigError : public Error {
 public:
  using Error::Error;
};

/// Invalid CLI/config input; maps to exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmet
