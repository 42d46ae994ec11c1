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

#include "fairanneal/problem_io.hpp"

#include <fstream>
#include <vector>

namespace fairanneal {

namespace fs = std::filesystem;

IsingProblem problem_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw MalformedProblem("problem must be a JSON object");
    const int n = j.at("n").get<int>();
    std::vector<Coupling> couplings;
    for (const auto& c : j.at("couplings")) {
      if (!c.is_array() || c.size() != 3) throw MalformedProblem("each coupling must be [i, j, J]");
      couplings.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<double>()});
    }
    std::vector<double> fields;
    if (j.contains("fields")) {
      fields = j.at("fields").get<std::vector<double>>();
    } else {
      fields.assign(static_cast<std::size_t>(std::max(n, 0)), 0.0);
    }
    return IsingProblem(n, std::move(couplings), std::move(fields));
  } catch (const nlohmann::json::exception& e) {
    throw MalformedProblem(std::string("problem JSON: ") + e.what());
  }
}

nlohmann::json problem_to_json(const IsingProblem& p) {
  nlohmann::json couplings = nlohmann::json::array();
  for (const Coupling& c : p.couplings()) couplings.push_back({c.i, c.j, c.value});
  return {{"n", p.size()}, {"couplings", couplings}, {"fields", p.fields()}};
}

IsingProblem load_problem(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedProblem("cannot open problem file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedProblem("problem file " + path.string() + ": " + e.what());
  }
  return problem_from_json(j);
}

void save_problem(const IsingProblem& p, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw MalformedProblem("cannot write problem file " + path.string());
  out << problem_to_json(p).dump(2) << '\n';
}

fs::path resolve_problem_path(const std::string& ref) {
  const fs::path direct(ref);
  if (fs::is_regular_file(direct)) return direct;
  const std::string file = direct.has_extension() ? ref : ref + ".json";
  for (const fs::path& dir : {fs::path("problems"), fs::path(FAIRANNEAL_PROBLEMS_DIR)}) {
    if (fs::is_regular_file(dir / file)) return dir / file;
  }
  throw MalformedProblem("problem '" + ref + "' not found");
}

IsingProblem load_five_spin_fixture() {
  IsingProblem p = load_problem(fs::path(FAIRANNEAL_PROBLEMS_DIR) / "five_spin.json");
  validate_five_spin_fixture(p);
  return p;
}

}  // namespace fairanneal
