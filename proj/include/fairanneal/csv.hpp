// Copyright 2026 The fairanneal Authors
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

// Sweep tables as CSV, one row per (tau, ground sector):
//
//   protocol,tau,beta,config_label,probability,P_GS,fairness_ratio,
//   tv_uniform,tv_boltzmann,kl_boltzmann,norm_drift
//
// Optional columns are left empty. A failed run writes one row with
// config_label "error" and empty metrics.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fairanneal/analysis.hpp"

namespace fairanneal {

inline constexpr const char* kCsvHeader =
    "protocol,tau,beta,config_label,probability,P_GS,fairness_ratio,tv_uniform,tv_boltzmann,kl_boltzmann,"
    "norm_drift";

struct CsvRow {
  std::string protocol;
  double tau = 0.0;
  std::optional<double> beta;
  std::string config_label;
  std::optional<double> probability;
  std::optional<double> p_gs;
  std::optional<double> fairness_ratio;
  std::optional<double> tv_uniform;
  std::optional<double> tv_boltzmann;
  std::optional<double> kl_boltzmann;
  std::optional<double> norm_drift;

  bool is_error() const { return config_label == "error"; }
};

/// Shortest round-trip decimal form.
std::string format_number(double x);

/// Rows for one run. Re-checks that the probability vector sums to 1 and
/// that the sector probabilities are consistent with P_GS.
std::vector<CsvRow> csv_rows(const RunResult& result);

void write_csv(std::ostream& out, const std::vector<RunResult>& results);
void write_csv(const std::filesystem::path& path, const std::vector<RunResult>& results);

/// Throws SchemaError on a header or field mismatch.
std::vector<CsvRow> read_csv(std::istream& in);
std::vector<CsvRow> read_csv(const std::filesystem::path& path);

}  // namespace fairanneal
