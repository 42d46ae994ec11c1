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

#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "fairanneal/dynamics.hpp"
#include "fairanneal/sbo.hpp"

namespace fairanneal {

struct OutputPaths {
  std::optional<std::filesystem::path> csv;
  std::optional<std::filesystem::path> svg;
};

/// Parsed run configuration. Relative paths are resolved against the config file's directory.
struct RunConfig {
  std::filesystem::path problem_path;
  /// tau of `protocol` is meaningless when `tau_grid` is set.
  Protocol protocol;
  std::optional<double> tau;
  std::vector<double> tau_grid;
  IntegratorConfig integrator;
  OutputPaths output;

  bool is_sweep() const { return !tau_grid.empty(); }
  std::vector<double> taus() const;
};

/// {
///   "problem": "five_spin" | "path/to/problem.json",
///   "protocol": {"kind": "sbo", "tau": 100 | "tau_grid": [..] | "default" |
///                {"min_decade": 0, "max_decade": 3, "points_per_decade": 16},
///                "beta": 1.0, "c": 10, "eps": 1e-6},
///   "integrator": {"steps": 1000, "max_step": 0.01, "norm_tol": 1e-8,
///                  "refine_tol": 1e-6, "max_refinements": 6, "phase_gauge": true},
///   "output": {"csv": "out.csv", "svg": "out.svg"}
/// }
RunConfig parse_run_config(const nlohmann::json& j, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace fairanneal
