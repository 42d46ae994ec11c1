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

#include "fairanneal/run_config.hpp"

#include <fstream>
#include <set>
#include <string>

#include "fairanneal/analysis.hpp"
#include "fairanneal/problem_io.hpp"

namespace fairanneal {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) throw ConfigError("unknown key '" + item.key() + "' in " + where);
  }
}

fs::path resolve_relative(const fs::path& p, const fs::path& base_dir) {
  return p.is_absolute() ? p : base_dir / p;
}

fs::path resolve_problem(const std::string& ref, const fs::path& base_dir) {
  const fs::path local = resolve_relative(ref, base_dir);
  if (fs::is_regular_file(local)) return local;
  try {
    return resolve_problem_path(ref);
  } catch (const MalformedProblem&) {
    throw ConfigError("problem '" + ref + "' cannot be resolved");
  }
}

std::vector<double> parse_grid(const json& g) {
  if (g.is_string()) {
    if (g.get<std::string>() != "default") throw ConfigError("tau_grid string must be \"default\"");
    return log_tau_grid();
  }
  if (g.is_array()) {
    auto grid = g.get<std::vector<double>>();
    if (grid.empty()) throw ConfigError("tau_grid is empty");
    for (std::size_t k = 0; k < grid.size(); ++k) {
      if (!(grid[k] > 0.0)) throw ConfigError("tau_grid entries must be positive");
      if (k > 0 && !(grid[k] > grid[k - 1])) throw ConfigError("tau_grid must be strictly ascending");
    }
    return grid;
  }
  if (g.is_object()) {
    reject_unknown_keys(g, {"min_decade", "max_decade", "points_per_decade"}, "tau_grid");
    return log_tau_grid(g.value("min_decade", 0), g.value("max_decade", 3), g.value("points_per_decade", 16));
  }
  throw ConfigError("tau_grid must be an array, an object or \"default\"");
}

void check_output_dir(const fs::path& p) {
  const fs::path parent = p.has_parent_path() ? p.parent_path() : fs::path(".");
  if (!fs::is_directory(parent)) throw ConfigError("output directory " + parent.string() + " does not exist");
}

}  // namespace

std::vector<double> RunConfig::taus() const {
  if (is_sweep()) return tau_grid;
  return {protocol.tau};
}

RunConfig parse_run_config(const json& j, const fs::path& base_dir) {
  try {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown_keys(j, {"problem", "protocol", "integrator", "output"}, "config");
    RunConfig c;
    c.problem_path = resolve_problem(j.at("problem").get<std::string>(), base_dir);

    const json& proto = j.at("protocol");
    reject_unknown_keys(proto, {"kind", "tau", "tau_grid", "beta", "c", "eps"}, "protocol");
    c.protocol.kind = parse_protocol_kind(proto.at("kind").get<std::string>());
    c.protocol.beta_target = proto.value("beta", 0.0);
    c.protocol.schedule_prefactor = proto.value("c", 10.0);
    c.protocol.schedule_eps = proto.value("eps", 1e-6);
    const bool has_tau = proto.contains("tau");
    const bool has_grid = proto.contains("tau_grid");
    if (has_tau == has_grid) throw ConfigError("protocol needs exactly one of 'tau' and 'tau_grid'");
    if (has_tau) {
      c.tau = proto.at("tau").get<double>();
      c.protocol.tau = *c.tau;
    } else {
      c.tau_grid = parse_grid(proto.at("tau_grid"));
      c.protocol.tau = c.tau_grid.front();
    }
    c.protocol.validate();
    if (c.protocol.kind != ProtocolKind::SBOQA && proto.contains("beta")) {
      throw ConfigError("'beta' applies to the sboqa protocol only");
    }

    if (j.contains("integrator")) {
      const json& in = j.at("integrator");
      reject_unknown_keys(in,
                          {"steps", "max_step", "norm_tol", "refine_tol", "max_refinements", "snapshots",
                           "phase_gauge"},
                          "integrator");
      IntegratorConfig& ic = c.integrator;
      ic.steps = in.value("steps", ic.steps);
      ic.max_step = in.value("max_step", ic.max_step);
      ic.norm_tol = in.value("norm_tol", ic.norm_tol);
      ic.refine_tol = in.value("refine_tol", ic.refine_tol);
      ic.max_refinements = in.value("max_refinements", ic.max_refinements);
      ic.snapshots = in.value("snapshots", ic.snapshots);
      ic.phase_gauge = in.value("phase_gauge", ic.phase_gauge);
    }
    c.integrator.validate();

    if (j.contains("output")) {
      const json& out = j.at("output");
      reject_unknown_keys(out, {"csv", "svg"}, "output");
      if (out.contains("csv")) c.output.csv = resolve_relative(out.at("csv").get<std::string>(), base_dir);
      if (out.contains("svg")) c.output.svg = resolve_relative(out.at("svg").get<std::string>(), base_dir);
      if (c.output.csv) check_output_dir(*c.output.csv);
      if (c.output.svg) check_output_dir(*c.output.svg);
    }
    return c;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

RunConfig load_run_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config file " + path.string() + ": " + e.what());
  }
  return parse_run_config(j, path.has_parent_path() ? path.parent_path() : fs::path("."));
}

}  // namespace fairanneal
