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
#include <string>

#include <json.hpp>

#include "fairanneal/ising.hpp"

namespace fairanneal {

/// Parses {"n": N, "couplings": [[i, j, J], ...], "fields": [h0, ...]}.
IsingProblem problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const IsingProblem& p);

IsingProblem load_problem(const std::filesystem::path& path);
void save_problem(const IsingProblem& p, const std::filesystem::path& path);

/// Resolves a problem reference: an existing path, or a bare name looked up as
/// `<name>.json` under ./problems and then the installed problems directory.
std::filesystem::path resolve_problem_path(const std::string& ref);

/// Loads problems/five_spin.json and checks its ground set before returning it.
IsingProblem load_five_spin_fixture();

}  // namespace fairanneal
