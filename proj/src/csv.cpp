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

#include "fairanneal/csv.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace fairanneal {

namespace {

std::string optional_field(const std::optional<double>& x) { return x ? format_number(*x) : std::string(); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::optional<double> parse_optional(const std::string& field, std::size_t line_no) {
  if (field.empty()) return std::nullopt;
  try {
    std::size_t used = 0;
    const double x = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return x;
  } catch (const std::exception&) {
    throw SchemaError(fmt::format("line {}: '{}' is not a number", line_no, field));
  }
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  return fmt::format("{}", x);
}

std::vector<CsvRow> csv_rows(const RunResult& r) {
  const std::string protocol(to_string(r.protocol.kind));
  std::optional<double> beta;
  if (r.protocol.kind == ProtocolKind::SBOQA) beta = r.protocol.beta_target;

  if (!r.ok()) {
    CsvRow row;
    row.protocol = protocol;
    row.tau = r.tau;
    row.beta = beta;
    row.config_label = "error";
    row.norm_drift = r.norm_drift;
    return {row};
  }

  const double total = r.probabilities.sum();
  if (!(std::abs(total - 1.0) <= 1e-9)) {
    throw DomainError(fmt::format("tau {}: probabilities sum to {}, not 1", r.tau, total));
  }
  double sectors = 0.0;
  for (double p : r.sector_fairness.probabilities) sectors += p;
  if (!(std::abs(sectors - r.p_gs) <= 1e-12) || r.p_gs > 1.0 + 1e-12) {
    throw DomainError(fmt::format("tau {}: ground-sector probabilities inconsistent with P_GS", r.tau));
  }

  std::vector<CsvRow> rows;
  for (std::size_t k = 0; k < r.sector_fairness.labels.size(); ++k) {
    CsvRow row;
    row.protocol = protocol;
    row.tau = r.tau;
    row.beta = beta;
    row.config_label = r.sector_fairness.labels[k];
    row.probability = r.sector_fairness.probabilities[k];
    row.p_gs = r.p_gs;
    row.fairness_ratio = r.sector_fairness.ratio;
    row.tv_uniform = r.sector_fairness.tv_uniform;
    if (r.boltzmann) {
      row.tv_boltzmann = r.boltzmann->tv;
      row.kl_boltzmann = r.boltzmann->kl;
    }
    row.norm_drift = r.norm_drift;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<RunResult>& results) {
  out << kCsvHeader << '\n';
  for (const RunResult& r : results) {
    for (const CsvRow& row : csv_rows(r)) {
      out << row.protocol << ',' << format_number(row.tau) << ',' << optional_field(row.beta) << ','
          << row.config_label << ',' << optional_field(row.probability) << ',' << optional_field(row.p_gs) << ','
          << optional_field(row.fairness_ratio) << ',' << optional_field(row.tv_uniform) << ','
          << optional_field(row.tv_boltzmann) << ',' << optional_field(row.kl_boltzmann) << ','
          << optional_field(row.norm_drift) << '\n';
    }
  }
}

void write_csv(const std::filesystem::path& path, const std::vector<RunResult>& results) {
  std::ostringstream buffer;
  write_csv(buffer, results);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path.string());
  out << buffer.str();
}

std::vector<CsvRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw SchemaError("unexpected CSV header: " + line);
  std::vector<CsvRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 11) throw SchemaError(fmt::format("line {}: expected 11 fields, got {}", line_no, f.size()));
    CsvRow row;
    row.protocol = f[0];
    const auto tau = parse_optional(f[1], line_no);
    if (!tau) throw SchemaError(fmt::format("line {}: missing tau", line_no));
    row.tau = *tau;
    row.beta = parse_optional(f[2], line_no);
    row.config_label = f[3];
    row.probability = parse_optional(f[4], line_no);
    row.p_gs = parse_optional(f[5], line_no);
    row.fairness_ratio = parse_optional(f[6], line_no);
    row.tv_uniform = parse_optional(f[7], line_no);
    row.tv_boltzmann = parse_optional(f[8], line_no);
    row.kl_boltzmann = parse_optional(f[9], line_no);
    row.norm_drift = parse_optional(f[10], line_no);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CsvRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  return read_csv(in);
}

}  // namespace fairanneal
