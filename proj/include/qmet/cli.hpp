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

#include <cstdint>
#include <string>
#include <vector>

namespace qmet {

/// Parameters of the jc-evolve command. Omega = 0 and t_max = 0 pick the
/// resonance frequency N * omega and one full oscillation period of the
/// all-up probability, respectively.
struct JCRunConfig {
  int n_qubits = 2;
  double omega = 1.0;
  double Omega = 0;
  double g = 0.1;
  int fock_cutoff = 3;
  int n_photons = 0;
  double t_max = 0;
  int t_count = 64;
};

/// One CLI invocation. theta_start/theta_stop are fractions of the branch
/// pi * 2^-N, so the same grid serves every qubit count in the scan while
/// staying clear of the stationary points theta * 2^N = k pi.
struct ScanConfig {
  std::string command;
  int n_min = 1;
  int n_max = 10;
  double theta_start = 0.1;
  double theta_stop = 0.9;
  int theta_count = 32;
  std::string generator = "H";  // H | A
  std::string format = "csv";   // csv | json
  std::string out_path;         // empty -> stdout
  std::uint64_t seed = 20260810;
  long nu = 1000;
  std::vector<long> nu_list = {1000, 10000};
  int trials = 200;
  double theta_true_fraction = 0.25;
  int threads = 0;  // 0 -> QMET_THREADS env var, else hardware concurrency
  JCRunConfig jc;
};

/// Known command names.
extern const std::vector<std::string> kCommands;

/// Merges keys present in a JSON config file into cfg. Unknown keys are
/// rejected so typos cannot silently fall back to defaults.
void load_config_file(ScanConfig& cfg, const std::string& path);

/// Full validation of a config; throws ConfigError naming the bad field.
void validate_config(const ScanConfig& cfg);

/// Absolute theta values of the scan grid for one qubit count.
std::vector<double> theta_grid_for(const ScanConfig& cfg, int n_qubits);

/// Executes a validated config, writing to cfg.out_path or stdout.
/// Returns 0 on success, 2 when a checked numerical property fails.
int run_command(const ScanConfig& cfg);

/// Exit-code-mapping wrapper used by main: 0 ok, 1 invalid input,
/// 2 numerical property violation.
int run_cli(const ScanConfig& cfg);

}  // namespace qmet
