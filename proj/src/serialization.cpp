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

#include "qmet/serialization.hpp"

#include <cstdio>

namespace qmet {

std::string format_g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string precision_report_json(const PrecisionReport& r) {
  std::string out = "{";
  out += "\"n_qubits\":" + std::to_string(r.n_qubits);
  out += ",\"theta\":" + format_g17(r.theta);
  out += ",\"expectation_X\":" + format_g17(r.expectation_x);
  out += ",\"dispersion_X\":" + format_g17(r.dispersion_x);
  out += ",\"derivative_X\":" + format_g17(r.derivative_x);
  out += ",\"delta_theta\":" + format_g17(r.delta_theta);
  out += ",\"dispersion_H\":" + format_g17(r.dispersion_h);
  out += ",\"mt_bound\":" + format_g17(r.mt_bound);
  out += ",\"bc_bound\":" + format_g17(r.bc_bound);
  out += ",\"nu\":" + std::to_string(r.nu);
  out += ",\"label\":\"" + r.label.str() + "\"";
  out += "}";
  return out;
}

std::string precision_report_csv_header() {
  return "n_qubits,theta,expectation_X,dispersion_X,derivative_X,delta_theta,"
         "dispersion_H,mt_bound,bc_bound,nu,label";
}

std::string precision_report_csv_row(const PrecisionReport& r) {
  std::string out = std::to_string(r.n_qubits);
  out += ',' + format_g17(r.theta);
  out += ',' + format_g17(r.expectation_x);
  out += ',' + format_g17(r.dispersion_x);
  out += ',' + format_g17(r.derivative_x);
  out += ',' + format_g17(r.delta_theta);
  out += ',' + format_g17(r.dispersion_h);
  out += ',' + format_g17(r.mt_bound);
  out += ',' + format_g17(r.bc_bound);
  out += ',' + std::to_string(r.nu);
  out += ',' + r.label.str();
  return out;
}

std::string estimation_result_json(const MonteCarloConfig& c,
                                   const EstimationResult& r) {
  std::string out = "{";
  out += "\"N\":" + std::to_string(c.n_qubits);
  out += ",\"nu\":" + std::to_string(c.nu);
  out += ",\"trials\":" + std::to_string(c.trials);
  out += ",\"theta_true\":" + format_g17(c.theta_true);
  out += ",\"seed\":" + std::to_string(c.seed);
  out += ",\"delta_nu_empirical\":" + format_g17(r.delta_nu_theta_empirical);
  out += ",\"bc_bound\":" + format_g17(r.bc_bound);
  out += ",\"theta_est_mean\":" + format_g17(r.theta_est_mean);
  out += ",\"bias\":" + format_g17(r.bias);
  out += "}";
  return out;
}

}  // namespace qmet
