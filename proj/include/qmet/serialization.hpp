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

#include <string>

#include "qmet/estimation.hpp"
#include "qmet/metrology.hpp"

namespace qmet {

/// Fixed numeric rendering for all emitted tables: up to 17 significant
/// digits, '.' decimal point, no locale dependence. Two equal doubles always
/// produce identical bytes.
std::string format_g17(double value);

/// Flat JSON object with the report's field names.
std::string precision_report_json(const PrecisionReport& report);

/// Comma-separated values in the same field order as the JSON keys.
std::string precision_report_csv_header();
std::string precision_report_csv_row(const PrecisionReport& report);

std::string estimation_result_json(const MonteCarloConfig& config,
                                   const EstimationResult& result);

}  // namespace qmet
