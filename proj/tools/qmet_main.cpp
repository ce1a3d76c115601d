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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qmet/cli.hpp"
#include "qmet/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "qmet - parallel quantum metrology with commuting Pauli-string "
      "generators.\n\n"
      "Runs CQC precision scans, precision-bound tables, commutation checks of "
      "the generator term sets, repeated-measurement Monte-Carlo estimation, "
      "and exact generalized Jaynes-Cummings evolution. Outputs are "
      "deterministic for a fixed seed; set QMET_THREADS to cap parallelism."};

  std::string command, config_path, generator, format, out_path;
  int n_min = 0, n_max = 0, theta_count = 0, trials = 0, threads = 0;
  double theta_start = 0, theta_stop = 0, theta_true_fraction = 0;
  std::uint64_t seed = 0;
  long nu = 0;

  auto* opt_command =
      app.add_option("--command", command,
                     "precision-scan | jc-evolve | bounds | commute-check | "
                     "monte-carlo");
  auto* opt_config =
      app.add_option("--config", config_path, "JSON config file; flags override");
  auto* opt_n_min = app.add_option("--n-min", n_min, "Smallest qubit count");
  auto* opt_n_max = app.add_option("--n-max", n_max, "Largest qubit count");
  auto* opt_theta_start = app.add_option(
      "--theta-start", theta_start,
      "First grid point as a fraction of the branch pi * 2^-N (default 0.1)");
  auto* opt_theta_stop = app.add_option(
      "--theta-stop", theta_stop,
      "Last grid point as a fraction of the branch pi * 2^-N (default 0.9)");
  auto* opt_theta_count =
      app.add_option("--theta-count", theta_count, "Grid size (default 32)");
  auto* opt_generator =
      app.add_option("--generator", generator, "Generator kind: H or A");
  auto* opt_format = app.add_option("--format", format, "csv or json");
  auto* opt_out =
      app.add_option("--out", out_path, "Output file (default stdout)");
  auto* opt_seed = app.add_option("--seed", seed, "Master RNG seed");
  auto* opt_nu =
      app.add_option("--nu", nu, "Repetitions per trial (bounds, monte-carlo)");
  auto* opt_trials =
      app.add_option("--trials", trials, "Monte-Carlo trials per cell");
  auto* opt_theta_true = app.add_option(
      "--theta-true-fraction", theta_true_fraction,
      "Monte-Carlo true parameter as a fraction of the branch (default 0.25)");
  auto* opt_threads =
      app.add_option("--threads", threads, "Worker thread cap (overrides env)");

  CLI11_PARSE(app, argc, argv);

  qmet::ScanConfig cfg;
  try {
    if (opt_config->count()) qmet::load_config_file(cfg, config_path);
  } catch (const qmet::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (opt_command->count()) cfg.command = command;
  if (opt_n_min->count()) cfg.n_min = n_min;
  if (opt_n_max->count()) cfg.n_max = n_max;
  if (opt_theta_start->count()) cfg.theta_start = theta_start;
  if (opt_theta_stop->count()) cfg.theta_stop = theta_stop;
  if (opt_theta_count->count()) cfg.theta_count = theta_count;
  if (opt_generator->count()) cfg.generator = generator;
  if (opt_format->count()) cfg.format = format;
  if (opt_out->count()) cfg.out_path = out_path;
  if (opt_seed->count()) cfg.seed = seed;
  if (opt_nu->count()) {
    cfg.nu = nu;
    cfg.nu_list = {nu};
  }
  if (opt_trials->count()) cfg.trials = trials;
  if (opt_theta_true->count()) cfg.theta_true_fraction = theta_true_fraction;
  if (opt_threads->count()) cfg.threads = threads;

  if (cfg.command.empty()) {
    std::cerr << "error: --command is required (or provide it in --config)\n";
    return 1;
  }
  return qmet::run_cli(cfg);
}
