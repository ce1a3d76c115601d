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

#include "qmet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numbers>
#include <thread>

#include <json.hpp>

#include "qmet/errors.hpp"
#include "qmet/estimation.hpp"
#include "qmet/jaynes_cummings.hpp"
#include "qmet/metrology.hpp"
#include "qmet/rng.hpp"
#include "qmet/serialization.hpp"

namespace qmet {

namespace {

constexpr double kStationaryExclusion = 1e-6;

int thread_budget(const ScanConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("QMET_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Static index partition: row i is computed into slot i no matter which
// thread runs it, so outputs do not depend on the thread count.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

void write_output(const ScanConfig& cfg, const std::string& content) {
  if (cfg.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("out: cannot open '" + cfg.out_path + "'");
  out << content;
  if (!out) throw ConfigError("out: write to '" + cfg.out_path + "' failed");
}

TermSetKind generator_kind(const ScanConfig& cfg) {
  return cfg.generator == "A" ? TermSetKind::A : TermSetKind::H;
}

JCModel jc_model(const ScanConfig& cfg) {
  JCModel model;
  model.n_qubits = cfg.jc.n_qubits;
  model.omega = cfg.jc.omega;
  model.Omega = cfg.jc.Omega != 0 ? cfg.jc.Omega : cfg.jc.n_qubits * cfg.jc.omega;
  model.g = cfg.jc.g;
  model.fock_cutoff = cfg.jc.fock_cutoff;
  return model;
}

double jc_t_max(const ScanConfig& cfg) {
  if (cfg.jc.t_max > 0) return cfg.jc.t_max;
  const double rabi = cfg.jc.g * std::sqrt(cfg.jc.n_photons + 1.0) *
                      std::ldexp(1.0, cfg.jc.n_qubits);
  return 2 * std::numbers::pi / rabi;
}

// ---- precision-scan ------------------------------------------------------

int cmd_precision_scan(const ScanConfig& cfg) {
  struct Row {
    PrecisionReport report;
    double direct_sum_bound;
    double classical;
  };
  struct Job {
    int n;
    double theta;
  };
  std::vector<Job> jobs;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (double theta : theta_grid_for(cfg, n)) jobs.push_back({n, theta});
  }
  std::vector<Row> rows(jobs.size());
  const TermSetKind kind = generator_kind(cfg);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  parallel_for(jobs.size(), thread_budget(cfg), [&](std::size_t i) {
    try {
      Row& row = rows[i];
      row.report = run_cqc(jobs[i].n, jobs[i].theta, kind);
      const DirectSumSpec direct{jobs[i].n, 1.0, -1.0};
      row.direct_sum_bound =
          mt_bound(jobs[i].n * direct.lambda_max_single,
                   jobs[i].n * direct.lambda_min_single);
      const std::vector<double> ones(std::size_t{1} << (jobs[i].n - 1), 1.0);
      row.classical = classical_dispersion(ones);
    } catch (...) {
      std::scoped_lock lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  std::string out;
  if (cfg.format == "json") {
    out += "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::string record = precision_report_json(rows[i].report);
      record.pop_back();  // open the object to append the baseline columns
      record += ",\"direct_sum_bound\":" + format_g17(rows[i].direct_sum_bound);
      record += ",\"classical_dispersion\":" + format_g17(rows[i].classical);
      record += "}";
      out += (i ? ",\n" : "\n") + record;
    }
    out += "\n]\n";
  } else {
    out = precision_report_csv_header() +
          ",direct_sum_bound,classical_dispersion\n";
    for (const Row& row : rows) {
      out += precision_report_csv_row(row.report);
      out += ',' + format_g17(row.direct_sum_bound);
      out += ',' + format_g17(row.classical);
      out += '\n';
    }
  }
  write_output(cfg, out);
  return 0;
}

// ---- jc-evolve -----------------------------------------------------------

int cmd_jc_evolve(const ScanConfig& cfg) {
  const JCModel model = jc_model(cfg);
  const int n0 = cfg.jc.n_photons;
  const JointState initial =
      JointState::basis(model.n_qubits, model.fock_cutoff, n0, 0);
  const std::uint64_t all_down = model.qubit_dim() - 1;
  const double t_max = jc_t_max(cfg);
  const int count = cfg.jc.t_count;

  struct Row {
    double t;
    std::complex<double> amp_phi0, amp_phi1;
    double x, pop_phi0, pop_phi1;
  };
  std::vector<Row> rows(count);
  for (int i = 0; i < count; ++i) {
    const double t =
        count == 1 ? 0.0 : t_max * static_cast<double>(i) / (count - 1);
    const JointState evolved = evolve(model, initial, t);
    const DensityMatrix rho = partial_trace_photons(evolved);
    Row& row = rows[i];
    row.t = t;
    row.amp_phi0 = evolved.amplitude(n0, 0);
    row.amp_phi1 = evolved.amplitude(n0 + 1, all_down);
    row.x = all_up_expectation(rho);
    row.pop_phi0 = rho.matrix()(0, 0).real();
    row.pop_phi1 = rho.matrix()(rho.matrix().rows() - 1,
                                rho.matrix().cols() - 1).real();
  }

  std::string out;
  if (cfg.format == "json") {
    out += "[";
    for (int i = 0; i < count; ++i) {
      const Row& r = rows[i];
      std::string record = "{\"t\":" + format_g17(r.t);
      record += ",\"re_amp_phi0\":" + format_g17(r.amp_phi0.real());
      record += ",\"im_amp_phi0\":" + format_g17(r.amp_phi0.imag());
      record += ",\"re_amp_phi1\":" + format_g17(r.amp_phi1.real());
      record += ",\"im_amp_phi1\":" + format_g17(r.amp_phi1.imag());
      record += ",\"x_expectation\":" + format_g17(r.x);
      record += ",\"pop_phi0\":" + format_g17(r.pop_phi0);
      record += ",\"pop_phi1\":" + format_g17(r.pop_phi1);
      record += "}";
      out += (i ? ",\n" : "\n") + record;
    }
    out += "\n]\n";
  } else {
    out =
        "t,re_amp_phi0,im_amp_phi0,re_amp_phi1,im_amp_phi1,x_expectation,"
        "pop_phi0,pop_phi1\n";
    for (const Row& r : rows) {
      out += format_g17(r.t);
      out += ',' + format_g17(r.amp_phi0.real());
      out += ',' + format_g17(r.amp_phi0.imag());
      out += ',' + format_g17(r.amp_phi1.real());
      out += ',' + format_g17(r.amp_phi1.imag());
      out += ',' + format_g17(r.x);
      out += ',' + format_g17(r.pop_phi0);
      out += ',' + format_g17(r.pop_phi1);
      out += '\n';
    }
  }
  write_output(cfg, out);
  return 0;
}

// ---- bounds --------------------------------------------------------------

int cmd_bounds(const ScanConfig& cfg) {
  struct Row {
    int n;
    double lambda, mt, bc, ds_dispersion, ds_precision, classical, ratio;
  };
  std::vector<Row> rows;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    Row row;
    row.n = n;
    row.lambda = std::ldexp(1.0, n - 1);
    row.mt = mt_bound(row.lambda, -row.lambda);
    row.bc = bc_bound(row.lambda, -row.lambda, cfg.nu);
    const DirectSumSpec direct{n, 1.0, -1.0};
    row.ds_dispersion = direct_sum_dispersion_bound(direct);
    row.ds_precision = mt_bound(n * 1.0, n * -1.0);
    const std::vector<double> ones(std::size_t{1} << (n - 1), 1.0);
    row.classical = classical_dispersion(ones);
    row.ratio = row.lambda / row.ds_dispersion;
    rows.push_back(row);
  }

  std::string out;
  if (cfg.format == "json") {
    out += "[";
    bool first = true;
    for (const Row& r : rows) {
      std::string record = "{\"n_qubits\":" + std::to_string(r.n);
      record += ",\"dispersion_max\":" + format_g17(r.lambda);
      record += ",\"mt_bound\":" + format_g17(r.mt);
      record += ",\"bc_bound\":" + format_g17(r.bc);
      record += ",\"nu\":" + std::to_string(cfg.nu);
      record += ",\"direct_sum_dispersion_bound\":" + format_g17(r.ds_dispersion);
      record += ",\"direct_sum_mt_bound\":" + format_g17(r.ds_precision);
      record += ",\"classical_dispersion_max\":" + format_g17(r.classical);
      record += ",\"quantum_classical_ratio\":" + format_g17(r.ratio);
      record += "}";
      out += (first ? "\n" : ",\n") + record;
      first = false;
    }
    out += "\n]\n";
  } else {
    out =
        "n_qubits,dispersion_max,mt_bound,bc_bound,nu,"
        "direct_sum_dispersion_bound,direct_sum_mt_bound,"
        "classical_dispersion_max,quantum_classical_ratio\n";
    for (const Row& r : rows) {
      out += std::to_string(r.n);
      out += ',' + format_g17(r.lambda);
      out += ',' + format_g17(r.mt);
      out += ',' + format_g17(r.bc);
      out += ',' + std::to_string(cfg.nu);
      out += ',' + format_g17(r.ds_dispersion);
      out += ',' + format_g17(r.ds_precision);
      out += ',' + format_g17(r.classical);
      out += ',' + format_g17(r.ratio);
      out += '\n';
    }
  }
  write_output(cfg, out);
  return 0;
}

// ---- commute-check -------------------------------------------------------

int cmd_commute_check(const ScanConfig& cfg) {
  struct Row {
    int n;
    std::size_t intra_h_pairs, intra_h_commuting;
    std::size_t intra_a_pairs, intra_a_commuting;
    std::size_t cross_pairs, cross_anticommuting;
    bool ok;
  };
  std::vector<Row> rows;
  std::string counterexample;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const TermSet h = generate_terms(n, TermSetKind::H);
    const TermSet a = generate_terms(n, TermSetKind::A);
    Row row{};
    row.n = n;
    row.ok = true;
    auto intra = [&](const TermSet& ts, std::size_t& pairs,
                     std::size_t& commuting) {
      for (std::size_t i = 0; i < ts.terms.size(); ++i) {
        for (std::size_t j = i + 1; j < ts.terms.size(); ++j) {
          ++pairs;
          if (commutes(ts.terms[i], ts.terms[j])) {
            ++commuting;
          } else if (row.ok) {
            row.ok = false;
            counterexample = "N=" + std::to_string(n) + ": " +
                             to_string(ts.terms[i]) + " does not commute with " +
                             to_string(ts.terms[j]);
          }
        }
      }
    };
    intra(h, row.intra_h_pairs, row.intra_h_commuting);
    intra(a, row.intra_a_pairs, row.intra_a_commuting);
    for (const auto& ph : h.terms) {
      for (const auto& pa : a.terms) {
        ++row.cross_pairs;
        if (!commutes(ph, pa)) {
          ++row.cross_anticommuting;
        } else if (row.ok) {
          row.ok = false;
          counterexample = "N=" + std::to_string(n) + ": " + to_string(ph) +
                           " commutes with " + to_string(pa) +
                           " (expected anticommuting)";
        }
      }
    }
    rows.push_back(row);
    if (!row.ok) break;
  }

  std::string out;
  if (cfg.format == "json") {
    out += "[";
    bool first = true;
    for (const Row& r : rows) {
      std::string record = "{\"n_qubits\":" + std::to_string(r.n);
      record += ",\"intra_h_pairs\":" + std::to_string(r.intra_h_pairs);
      record += ",\"intra_h_commuting\":" + std::to_string(r.intra_h_commuting);
      record += ",\"intra_a_pairs\":" + std::to_string(r.intra_a_pairs);
      record += ",\"intra_a_commuting\":" + std::to_string(r.intra_a_commuting);
      record += ",\"cross_pairs\":" + std::to_string(r.cross_pairs);
      record +=
          ",\"cross_anticommuting\":" + std::to_string(r.cross_anticommuting);
      record += std::string(",\"ok\":") + (r.ok ? "true" : "false");
      record += "}";
      out += (first ? "\n" : ",\n") + record;
      first = false;
    }
    out += "\n]\n";
  } else {
    out =
        "n_qubits,intra_h_pairs,intra_h_commuting,intra_a_pairs,"
        "intra_a_commuting,cross_pairs,cross_anticommuting,ok\n";
    for (const Row& r : rows) {
      out += std::to_string(r.n);
      out += ',' + std::to_string(r.intra_h_pairs);
      out += ',' + std::to_string(r.intra_h_commuting);
      out += ',' + std::to_string(r.intra_a_pairs);
      out += ',' + std::to_string(r.intra_a_commuting);
      out += ',' + std::to_string(r.cross_pairs);
      out += ',' + std::to_string(r.cross_anticommuting);
      out += std::string(",") + (r.ok ? "true" : "false");
      out += '\n';
    }
  }
  write_output(cfg, out);
  if (!counterexample.empty()) {
    std::cerr << "commute-check violation: " << counterexample << "\n";
    return 2;
  }
  return 0;
}

// ---- monte-carlo ---------------------------------------------------------

int cmd_monte_carlo(const ScanConfig& cfg) {
  struct Cell {
    MonteCarloConfig mc;
    EstimationResult result;
  };
  std::vector<Cell> cells;
  std::uint64_t cell_index = 0;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (long nu : cfg.nu_list) {
      Cell cell;
      cell.mc.n_qubits = n;
      cell.mc.theta_true =
          cfg.theta_true_fraction * std::numbers::pi * std::ldexp(1.0, -n);
      cell.mc.nu = nu;
      cell.mc.trials = cfg.trials;
      cell.mc.seed = derive_seed(cfg.seed, cell_index++);
      cells.push_back(cell);
    }
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  parallel_for(cells.size(), thread_budget(cfg), [&](std::size_t i) {
    try {
      cells[i].result = run_monte_carlo(cells[i].mc);
    } catch (...) {
      std::scoped_lock lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  std::string out;
  if (cfg.format == "json") {
    out += "[";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += (i ? ",\n" : "\n") +
             estimation_result_json(cells[i].mc, cells[i].result);
    }
    out += "\n]\n";
  } else {
    out = "N,nu,delta_nu_empirical,bc_bound\n";
    for (const Cell& cell : cells) {
      out += std::to_string(cell.mc.n_qubits);
      out += ',' + std::to_string(cell.mc.nu);
      out += ',' + format_g17(cell.result.delta_nu_theta_empirical);
      out += ',' + format_g17(cell.result.bc_bound);
      out += '\n';
    }
  }
  write_output(cfg, out);
  return 0;
}

}  // namespace

const std::vector<std::string> kCommands = {
    "precision-scan", "jc-evolve", "bounds", "commute-check", "monte-carlo"};

void load_config_file(ScanConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");

  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "command") cfg.command = value.get<std::string>();
      else if (key == "n_min") cfg.n_min = value.get<int>();
      else if (key == "n_max") cfg.n_max = value.get<int>();
      else if (key == "theta_start") cfg.theta_start = value.get<double>();
      else if (key == "theta_stop") cfg.theta_stop = value.get<double>();
      else if (key == "theta_count") cfg.theta_count = value.get<int>();
      else if (key == "generator") cfg.generator = value.get<std::string>();
      else if (key == "format") cfg.format = value.get<std::string>();
      else if (key == "out") cfg.out_path = value.get<std::string>();
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else if (key == "nu") cfg.nu = value.get<long>();
      else if (key == "nu_list") cfg.nu_list = value.get<std::vector<long>>();
      else if (key == "trials") cfg.trials = value.get<int>();
      else if (key == "theta_true_fraction")
        cfg.theta_true_fraction = value.get<double>();
      else if (key == "threads") cfg.threads = value.get<int>();
      else if (key == "jc") {
        for (const auto& [jkey, jvalue] : value.items()) {
          if (jkey == "n_qubits") cfg.jc.n_qubits = jvalue.get<int>();
          else if (jkey == "omega") cfg.jc.omega = jvalue.get<double>();
          else if (jkey == "Omega") cfg.jc.Omega = jvalue.get<double>();
          else if (jkey == "g") cfg.jc.g = jvalue.get<double>();
          else if (jkey == "fock_cutoff") cfg.jc.fock_cutoff = jvalue.get<int>();
          else if (jkey == "n_photons") cfg.jc.n_photons = jvalue.get<int>();
          else if (jkey == "t_max") cfg.jc.t_max = jvalue.get<double>();
          else if (jkey == "t_count") cfg.jc.t_count = jvalue.get<int>();
          else throw ConfigError("config: unknown key jc." + jkey);
        }
      } else {
        throw ConfigError("config: unknown key " + key);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config: " + std::string(e.what()));
  }
}

std::vector<double> theta_grid_for(const ScanConfig& cfg, int n_qubits) {
  const double branch = std::numbers::pi * std::ldexp(1.0, -n_qubits);
  std::vector<double> grid;
  grid.reserve(cfg.theta_count);
  for (int i = 0; i < cfg.theta_count; ++i) {
    const double fraction =
        cfg.theta_count == 1
            ? cfg.theta_start
            : cfg.theta_start + (cfg.theta_stop - cfg.theta_start) * i /
                                    (cfg.theta_count - 1);
    grid.push_back(fraction * branch);
  }
  return grid;
}

void validate_config(const ScanConfig& cfg) {
  if (std::find(kCommands.begin(), kCommands.end(), cfg.command) ==
      kCommands.end()) {
    throw ConfigError("command: expected one of precision-scan, jc-evolve, "
                      "bounds, commute-check, monte-carlo; got '" +
                      cfg.command + "'");
  }
  if (cfg.format != "csv" && cfg.format != "json") {
    throw ConfigError("format: expected csv or json, got '" + cfg.format + "'");
  }
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) {
    throw ConfigError("n_min/n_max: need 1 <= n_min <= n_max");
  }
  if (cfg.generator != "H" && cfg.generator != "A") {
    throw ConfigError("generator: expected H or A, got '" + cfg.generator + "'");
  }

  if (cfg.command == "precision-scan") {
    if (cfg.n_max > 14) throw ConfigError("n_max: precision-scan supports N <= 14");
    if (cfg.theta_count < 1) throw ConfigError("theta_count: grid is empty");
    if (!(cfg.theta_start > 0) || !(cfg.theta_stop < 1) ||
        cfg.theta_start > cfg.theta_stop) {
      throw ConfigError(
          "theta_start/theta_stop: need 0 < start <= stop < 1 (fractions of "
          "pi * 2^-N)");
    }
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      for (double theta : theta_grid_for(cfg, n)) {
        const double scaled = theta * std::ldexp(1.0, n);
        const double distance =
            std::abs(scaled - std::numbers::pi * std::round(scaled / std::numbers::pi));
        if (distance <= kStationaryExclusion) {
          throw ConfigError("theta grid: theta = " + format_g17(theta) +
                            " at N = " + std::to_string(n) +
                            " hits a stationary point (theta * 2^N = k pi)");
        }
      }
    }
  } else if (cfg.command == "commute-check") {
    if (cfg.n_max > 8) {
      throw ConfigError("n_max: commute-check pair enumeration supports N <= 8");
    }
  } else if (cfg.command == "monte-carlo") {
    if (cfg.n_max > 12) throw ConfigError("n_max: monte-carlo supports N <= 12");
    if (cfg.trials < 1) throw ConfigError("trials: must be >= 1");
    if (cfg.nu_list.empty()) throw ConfigError("nu_list: must not be empty");
    for (long nu : cfg.nu_list) {
      if (nu < 1) throw ConfigError("nu_list: entries must be >= 1");
    }
    if (!(cfg.theta_true_fraction > 0) || !(cfg.theta_true_fraction < 1)) {
      throw ConfigError("theta_true_fraction: need 0 < fraction < 1");
    }
  } else if (cfg.command == "jc-evolve") {
    JCModel model = jc_model(cfg);
    try {
      model.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("jc: ") + e.what());
    }
    if (cfg.jc.n_photons < 0 || cfg.jc.n_photons > cfg.jc.fock_cutoff - 1) {
      throw ConfigError("jc.n_photons: need 0 <= n_photons <= fock_cutoff - 1");
    }
    if (cfg.jc.t_count < 1) throw ConfigError("jc.t_count: must be >= 1");
    if (cfg.jc.t_max < 0) throw ConfigError("jc.t_max: must be >= 0");
    if (cfg.jc.g == 0 && cfg.jc.t_max == 0) {
      throw ConfigError("jc.g: zero coupling needs an explicit jc.t_max");
    }
  } else if (cfg.command == "bounds") {
    if (cfg.n_max > 20) throw ConfigError("n_max: bounds supports N <= 20");
    if (cfg.nu < 1) throw ConfigError("nu: must be >= 1");
  }
}

int run_command(const ScanConfig& cfg) {
  if (cfg.command == "precision-scan") return cmd_precision_scan(cfg);
  if (cfg.command == "jc-evolve") return cmd_jc_evolve(cfg);
  if (cfg.command == "bounds") return cmd_bounds(cfg);
  if (cfg.command == "commute-check") return cmd_commute_check(cfg);
  if (cfg.command == "monte-carlo") return cmd_monte_carlo(cfg);
  throw ConfigError("command: unknown command '" + cfg.command + "'");
}

int run_cli(const ScanConfig& cfg) {
  try {
    validate_config(cfg);
    return run_command(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qmet
