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

// fairanneal: exact-dynamics annealing runs, tau sweeps, ground-state
// verification, gap profiles and SVG plots.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "fairanneal/analysis.hpp"
#include "fairanneal/csv.hpp"
#include "fairanneal/dynamics.hpp"
#include "fairanneal/problem_io.hpp"
#include "fairanneal/run_config.hpp"
#include "fairanneal/svg.hpp"

namespace fa = fairanneal;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitPartial = 3;

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c == '\n' ? ' ' : c);
  }
  return out + "\"";
}

void report_error(const char* kind, const std::string& message) {
  std::cerr << "error kind=" << kind << " message=" << quote(message) << '\n';
}

int execute(const fa::RunConfig& config, int jobs) {
  const fa::IsingProblem problem = fa::load_problem(config.problem_path);
  const std::vector<fa::RunResult> results =
      fa::sweep(config.protocol, problem, config.taus(), config.integrator, jobs);

  int status = 0;
  for (const fa::RunResult& r : results) {
    if (!r.ok()) {
      std::cerr << "error kind=" << r.error_kind << " tau=" << fa::format_number(r.tau)
                << " message=" << quote(*r.error) << '\n';
      status = kExitPartial;
    }
  }
  if (config.output.csv) {
    fa::write_csv(*config.output.csv, results);
  } else {
    fa::write_csv(std::cout, results);
  }
  if (config.output.svg) {
    std::ostringstream csv;
    fa::write_csv(csv, results);
    std::istringstream in(csv.str());
    fa::PlotOptions options;
    if (config.protocol.kind == fa::ProtocolKind::QA) options.reference_lines = {0.5};
    if (config.protocol.kind == fa::ProtocolKind::SBO) options.reference_lines = {1.0 / 3.0};
    options.show_total = config.protocol.kind == fa::ProtocolKind::SBOQA;
    std::ofstream(*config.output.svg, std::ios::binary) << fa::render_svg(fa::read_csv(in), options);
  }
  return status;
}

int verify(const std::string& ref) {
  const fa::IsingProblem problem = fa::load_problem(fa::resolve_problem_path(ref));
  const fa::GroundSet ground = fa::enumerate_ground_states(problem);
  fmt::print("spins: {}\nground energy: {}\nground states: {}\n", problem.size(), fa::format_number(ground.energy),
             ground.configs.size());
  for (const fa::SpinConfig& s : ground.configs) {
    fmt::print("  {}  {}  E = {}\n", s.arrows(), s.label(), fa::format_number(fa::energy(problem, s)));
  }
  if (ref == "five_spin" || ref == "five_spin.json") {
    fa::validate_five_spin_fixture(problem);
    fmt::print("five-spin fixture: ground set matches the expected six states\n");
  }
  return 0;
}

struct GapArgs {
  std::string problem = "five_spin";
  std::string protocol = "sboqa";
  double beta = 1.0;
  double tau = 1.0;
  double c = 10.0;
  double eps = 1e-6;
  int samples = 21;
  int levels = 2;
  std::string csv;
};

int gap(const GapArgs& a) {
  const fa::IsingProblem problem = fa::load_problem(fa::resolve_problem_path(a.problem));
  fa::Protocol protocol;
  protocol.kind = fa::parse_protocol_kind(a.protocol);
  protocol.tau = a.tau;
  protocol.beta_target = protocol.kind == fa::ProtocolKind::SBOQA ? a.beta : 0.0;
  protocol.schedule_prefactor = a.c;
  protocol.schedule_eps = a.eps;
  protocol.validate();

  const fa::ProtocolPath path(protocol, problem);
  const auto slices = fa::gap_profile(protocol, problem, a.samples, a.levels);
  std::ostringstream out;
  out << "protocol,t,control";
  for (int k = 0; k < a.levels; ++k) out << ",lambda_" << k;
  out << ",gap\n";
  for (const auto& s : slices) {
    out << fa::to_string(protocol.kind) << ',' << fa::format_number(s.t) << ','
        << fa::format_number(path.control_at(s.t));
    for (int k = 0; k < a.levels; ++k) out << ',' << fa::format_number(s.eigenvalues(k));
    out << ',' << fa::format_number(s.gap()) << '\n';
  }
  if (a.csv.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream(a.csv, std::ios::binary) << out.str();
  }
  std::cerr << "min_gap=" << fa::format_number(fa::minimum_gap(slices)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-dynamics fair-sampling annealing simulator"};
  app.require_subcommand(1);

  std::string config_path;
  int jobs = 1;
  std::string csv_override;
  std::string svg_override;

  auto* run = app.add_subcommand("run", "Run the protocol in a config file (single tau or tau grid)");
  run->add_option("--config", config_path, "Run configuration (JSON)")->required();
  run->add_option("--jobs", jobs, "Worker threads for tau sweeps")->check(CLI::PositiveNumber);
  run->add_option("--csv", csv_override, "Override the CSV output path");
  run->add_option("--svg", svg_override, "Override the SVG output path");

  auto* sweep = app.add_subcommand("sweep", "Like run, but the config must give a tau grid");
  sweep->add_option("--config", config_path, "Run configuration (JSON)")->required();
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--csv", csv_override, "Override the CSV output path");
  sweep->add_option("--svg", svg_override, "Override the SVG output path");

  std::string problem_ref = "five_spin";
  auto* verify_cmd = app.add_subcommand("verify", "Enumerate and print the ground states of a problem");
  verify_cmd->add_option("--problem", problem_ref, "Problem name (under problems/) or path");

  GapArgs gap_args;
  auto* gap_cmd = app.add_subcommand("gap", "Spectral gap profile along a protocol as CSV");
  gap_cmd->add_option("--problem", gap_args.problem, "Problem name or path");
  gap_cmd->add_option("--protocol", gap_args.protocol, "qa | sbo | sboqa");
  gap_cmd->add_option("--beta", gap_args.beta, "Target beta (sboqa)");
  gap_cmd->add_option("--tau", gap_args.tau, "Annealing time (sets the t axis only)");
  gap_cmd->add_option("--c", gap_args.c, "SBO schedule prefactor");
  gap_cmd->add_option("--eps", gap_args.eps, "SBO schedule clamp");
  gap_cmd->add_option("--samples", gap_args.samples, "Evenly spaced sample times");
  gap_cmd->add_option("--levels", gap_args.levels, "Eigenvalues per sample (>= 2)");
  gap_cmd->add_option("--csv", gap_args.csv, "Output path (default stdout)");

  std::string plot_in;
  std::string plot_out;
  std::vector<double> refs;
  bool show_total = false;
  std::string title;
  auto* plot = app.add_subcommand("plot", "Render a sweep CSV as SVG");
  plot->add_option("--csv", plot_in, "Sweep CSV")->required();
  plot->add_option("--out", plot_out, "SVG output path")->required();
  plot->add_option("--ref", refs, "Reference line(s), e.g. --ref 0.3333 --ref 0.5");
  plot->add_flag("--total", show_total, "Also draw P_GS");
  plot->add_option("--title", title, "Figure title");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed() || sweep->parsed()) {
      fa::RunConfig config = fa::load_run_config(config_path);
      if (sweep->parsed() && !config.is_sweep()) throw fa::ConfigError("sweep needs a tau_grid in the config");
      if (!csv_override.empty()) config.output.csv = csv_override;
      if (!svg_override.empty()) config.output.svg = svg_override;
      return execute(config, jobs);
    }
    if (verify_cmd->parsed()) return verify(problem_ref);
    if (gap_cmd->parsed()) return gap(gap_args);
    if (plot->parsed()) {
      fa::PlotOptions options;
      options.reference_lines = refs;
      options.show_total = show_total;
      options.title = title;
      fa::plot_csv(plot_in, plot_out, options);
      return 0;
    }
  } catch (const fa::Error& e) {
    report_error(e.kind(), e.what());
    return kExitFailure;
  } catch (const std::exception& e) {
    report_error("internal", e.what());
    return kExitFailure;
  }
  return 0;
}
