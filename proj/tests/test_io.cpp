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

#include <gtest/gtest.h>
#include <fmt/format.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

#include "fairanneal/csv.hpp"
#include "fairanneal/problem_io.hpp"
#include "fairanneal/run_config.hpp"
#include "fairanneal/svg.hpp"
#include "test_support.hpp"

using namespace fairanneal;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / fmt::format("fairanneal-test-{:x}", (std::uint64_t{rd()} << 32) | rd());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

struct CliResult {
  int status = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const TempDir& dir, const std::string& args) {
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  const std::string cmd =
      fmt::format("\"{}\" {} > \"{}\" 2> \"{}\"", FAIRANNEAL_CLI, args, out.string(), err.string());
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

json base_config() {
  return json{{"problem", "five_spin"}, {"protocol", {{"kind", "qa"}, {"tau", 2.0}}}};
}

RunResult small_run(const Protocol& protocol) {
  const IsingProblem p = load_five_spin_fixture();
  return run_protocol(protocol, p, enumerate_ground_states(p), IntegratorConfig{});
}

}  // namespace

TEST(ProblemJson, RoundTrip) {
  std::mt19937_64 rng(61);
  const IsingProblem p = fairanneal::testing::random_problem(rng, 4);
  TempDir dir;
  save_problem(p, dir / "p.json");
  const IsingProblem q = load_problem(dir / "p.json");
  EXPECT_EQ(energy_spectrum(p), energy_spectrum(q));
}

TEST(ProblemJson, MalformedInputs) {
  EXPECT_THROW(problem_from_json(json::parse(R"({"couplings": []})")), MalformedProblem);
  EXPECT_THROW(problem_from_json(json::parse(R"({"n": 2, "couplings": [[0, 2, 1.0]]})")), MalformedProblem);
  EXPECT_THROW(problem_from_json(json::parse(R"({"n": 2, "couplings": [[1, 0, 1.0]]})")), MalformedProblem);
  EXPECT_THROW(problem_from_json(json::parse(R"({"n": 2, "couplings": [[0, 1]]})")), MalformedProblem);
  EXPECT_THROW(problem_from_json(json::parse(R"({"n": 2, "couplings": [[0, 1, 1], [0, 1, 2]]})")), MalformedProblem);
  EXPECT_THROW(problem_from_json(json::parse(R"({"n": 2, "couplings": [], "fields": [1]})")), MalformedProblem);
  EXPECT_THROW(problem_from_json(json::parse(R"({"n": 2, "couplings": "x"})")), MalformedProblem);
  EXPECT_THROW(load_problem("/nonexistent/problem.json"), MalformedProblem);
  const IsingProblem ok = problem_from_json(json::parse(R"({"n": 2, "couplings": [[0, 1, -1.5]]})"));
  EXPECT_TRUE(ok.has_zero_fields());
}

TEST(ProblemJson, FixtureResolvesByName) {
  EXPECT_TRUE(fs::is_regular_file(resolve_problem_path("five_spin")));
  EXPECT_NO_THROW(validate_five_spin_fixture(load_five_spin_fixture()));
}

TEST(RunConfigParsing, SingleTauAndDefaults) {
  TempDir dir;
  const RunConfig c = parse_run_config(base_config(), dir.path());
  EXPECT_FALSE(c.is_sweep());
  EXPECT_EQ(c.taus(), std::vector<double>{2.0});
  EXPECT_EQ(c.protocol.kind, ProtocolKind::QA);
  EXPECT_EQ(c.integrator.norm_tol, 1e-8);
  EXPECT_EQ(c.integrator.refine_tol, 1e-6);
  EXPECT_EQ(c.integrator.max_refinements, 6);
}

TEST(RunConfigParsing, Grids) {
  TempDir dir;
  json j = base_config();
  j["protocol"].erase("tau");
  j["protocol"]["tau_grid"] = "default";
  EXPECT_EQ(parse_run_config(j, dir.path()).taus().size(), 49U);
  j["protocol"]["tau_grid"] = json{{"min_decade", 1}, {"max_decade", 2}, {"points_per_decade", 4}};
  EXPECT_EQ(parse_run_config(j, dir.path()).taus().size(), 5U);
  j["protocol"]["tau_grid"] = json::array({1.0, 3.0});
  EXPECT_TRUE(parse_run_config(j, dir.path()).is_sweep());
  j["protocol"]["tau_grid"] = json::array({3.0, 1.0});
  EXPECT_THROW(parse_run_config(j, dir.path()), ConfigError);
  j["protocol"]["tau_grid"] = json::array();
  EXPECT_THROW(parse_run_config(j, dir.path()), ConfigError);
}

TEST(RunConfigParsing, Rejections) {
  TempDir dir;
  auto rejects = [&](json j) { EXPECT_THROW(parse_run_config(j, dir.path()), ConfigError) << j.dump(); };
  json j = base_config();
  j["extra"] = 1;
  rejects(j);
  j = base_config();
  j["protocol"]["tau_grid"] = "default";
  rejects(j);
  j = base_config();
  j["protocol"].erase("tau");
  rejects(j);
  j = base_config();
  j["protocol"]["tau"] = -1.0;
  rejects(j);
  j = base_config();
  j["protocol"]["beta"] = 1.0;
  rejects(j);
  j = base_config();
  j["protocol"]["kind"] = "sboqa";
  rejects(j);
  j = base_config();
  j["protocol"]["kind"] = "anneal";
  rejects(j);
  j = base_config();
  j["integrator"] = {{"steps", 10}};
  rejects(j);
  j = base_config();
  j["integrator"] = {{"stepz", 1000}};
  rejects(j);
  j = base_config();
  j["problem"] = "no_such_problem";
  rejects(j);
  j = base_config();
  j["output"] = {{"csv", "missing_dir/out.csv"}};
  rejects(j);
}

TEST(RunConfigParsing, RelativePathsUseTheConfigDirectory) {
  TempDir dir;
  save_problem(load_five_spin_fixture(), dir / "local.json");
  json j = base_config();
  j["problem"] = "local.json";
  j["output"] = {{"csv", "out.csv"}};
  write_file(dir / "cfg.json", j.dump());
  const RunConfig c = load_run_config(dir / "cfg.json");
  EXPECT_EQ(c.problem_path, dir / "local.json");
  EXPECT_EQ(*c.output.csv, dir / "out.csv");
  write_file(dir / "bad.json", "{ not json");
  EXPECT_THROW(load_run_config(dir / "bad.json"), ConfigError);
}

TEST(Csv, HeaderAndRowsForAFixtureRun) {
  const RunResult r = small_run(Protocol::sboqa(2.0, 1.0));
  std::ostringstream out;
  write_csv(out, {r});
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), kCsvHeader);
  std::istringstream in(text);
  const auto rows = read_csv(in);
  ASSERT_EQ(rows.size(), 3U);
  double total = 0.0;
  for (const CsvRow& row : rows) {
    EXPECT_EQ(row.protocol, "sboqa");
    EXPECT_EQ(row.beta, 1.0);
    total += *row.probability;
    EXPECT_EQ(*row.p_gs, r.p_gs);
    EXPECT_TRUE(row.tv_boltzmann.has_value());
  }
  EXPECT_NEAR(total, r.p_gs, 1e-12);
  EXPECT_EQ(rows[0].config_label, "+++++");
  EXPECT_EQ(rows[2].config_label, "++---");
}

TEST(Csv, NumbersRoundTripExactly) {
  const RunResult r = small_run(Protocol::sbo(3.0));
  std::ostringstream out;
  write_csv(out, {r});
  std::istringstream in(out.str());
  const auto rows = read_csv(in);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(*rows[k].probability, r.sector_fairness.probabilities[k]);
    EXPECT_EQ(*rows[k].norm_drift, r.norm_drift);
    EXPECT_FALSE(rows[k].beta.has_value());
    EXPECT_FALSE(rows[k].tv_boltzmann.has_value());
  }
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(std::nan("")), "nan");
}

TEST(Csv, ErrorRow) {
  RunResult failed;
  failed.protocol = Protocol::qa(5.0);
  failed.tau = 5.0;
  failed.error = "integrator did not converge";
  failed.error_kind = "accuracy";
  const auto rows = csv_rows(failed);
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_TRUE(rows[0].is_error());
}

TEST(Csv, RejectsInconsistentProbabilities) {
  RunResult r = small_run(Protocol::qa(2.0));
  r.probabilities *= 1.01;
  EXPECT_THROW(csv_rows(r), DomainError);
}

TEST(Csv, SchemaErrors) {
  std::istringstream wrong_header("protocol,tau\nqa,1\n");
  EXPECT_THROW(read_csv(wrong_header), SchemaError);
  std::istringstream short_row(std::string(kCsvHeader) + "\nqa,1,,+++++\n");
  EXPECT_THROW(read_csv(short_row), SchemaError);
}

TEST(Svg, OnePolylinePerSectorAndPanel) {
  const IsingProblem p = load_five_spin_fixture();
  const auto results = sweep(Protocol::qa(1.0), p, {1.0, 2.0, 4.0}, IntegratorConfig{}, 2);
  std::ostringstream out;
  write_csv(out, results);
  std::istringstream in(out.str());
  PlotOptions options;
  options.reference_lines = {0.5};
  const std::string svg = render_svg(read_csv(in), options);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0U);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const std::regex polyline("<polyline");
  EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), polyline), std::sregex_iterator()), 3);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  EXPECT_THROW(render_svg({}), EmptyPlotError);
}

class Cli : public ::testing::Test {
 protected:
  TempDir dir;
};

TEST_F(Cli, VerifyFixture) {
  const CliResult r = run_cli(dir, "verify --problem five_spin");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("ground energy: -3"), std::string::npos);
  EXPECT_NE(r.out.find("ground states: 6"), std::string::npos);
  for (const char* label : {"+++++", "+++--", "++---", "-----", "---++", "--+++"}) {
    EXPECT_NE(r.out.find(label), std::string::npos) << label;
  }
}

TEST_F(Cli, RunIsByteIdenticalAcrossInvocations) {
  json j = base_config();
  j["protocol"] = {{"kind", "sboqa"}, {"beta", 1.0}, {"tau_grid", {1.0, 2.0, 4.0}}};
  j["output"] = {{"csv", (dir / "a.csv").string()}};
  write_file(dir / "a.json", j.dump());
  j["output"] = {{"csv", (dir / "b.csv").string()}};
  write_file(dir / "b.json", j.dump());
  ASSERT_EQ(run_cli(dir, fmt::format("sweep --config \"{}\" --jobs 1", (dir / "a.json").string())).status, 0);
  ASSERT_EQ(run_cli(dir, fmt::format("sweep --config \"{}\" --jobs 3", (dir / "b.json").string())).status, 0);
  const std::string a = slurp(dir / "a.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(dir / "b.csv"));
}

TEST_F(Cli, RunWritesCsvToStdout) {
  write_file(dir / "c.json", base_config().dump());
  const CliResult r = run_cli(dir, fmt::format("run --config \"{}\"", (dir / "c.json").string()));
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out.rfind(kCsvHeader, 0), 0U);
  std::istringstream in(r.out);
  EXPECT_EQ(read_csv(in).size(), 3U);
}

TEST_F(Cli, GapProfileCsv) {
  const CliResult r = run_cli(dir, "gap --problem five_spin --protocol sbo --tau 1 --samples 5");
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "protocol,t,control,lambda_0,lambda_1,gap");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 5);
  EXPECT_NE(r.err.find("min_gap="), std::string::npos);
}

TEST_F(Cli, BadConfigReportsKind) {
  json j = base_config();
  j["surprise"] = true;
  write_file(dir / "bad.json", j.dump());
  const CliResult r = run_cli(dir, fmt::format("run --config \"{}\"", (dir / "bad.json").string()));
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.err.find("error kind=config"), std::string::npos) << r.err;
}

TEST_F(Cli, ShippedConfigsParse) {
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(FAIRANNEAL_CONFIGS_DIR)) {
    if (entry.path().extension() != ".json") continue;
    EXPECT_NO_THROW(load_run_config(entry.path())) << entry.path();
    ++count;
  }
  EXPECT_GE(count, 4U);
}
