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

#include <cmath>
#include <random>

#include "fairanneal/analysis.hpp"
#include "fairanneal/problem_io.hpp"
#include "test_support.hpp"

using namespace fairanneal;

namespace {

Eigen::VectorXd indicator(Eigen::Index dim, Eigen::Index k) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(dim);
  p(k) = 1.0;
  return p;
}

}  // namespace

TEST(Measure, RenormalizesAndRejectsZero) {
  Eigen::VectorXcd v(2);
  v << std::complex<double>(0.0, 2.0), 2.0;
  EXPECT_EQ(measure(v), Eigen::Vector2d(0.5, 0.5));
  EXPECT_THROW(measure(Eigen::VectorXcd::Zero(4)), DomainError);
  EXPECT_NEAR(measure(QuantumState::uniform(3)).sum(), 1.0, 1e-15);
}

TEST(GroundSectors, FixtureLabels) {
  const GroundSet g = enumerate_ground_states(load_five_spin_fixture());
  const auto sectors = ground_sectors(g, true);
  ASSERT_EQ(sectors.size(), 3U);
  EXPECT_EQ(sectors[0].label(), "+++++");
  EXPECT_EQ(sectors[1].label(), "+++--");
  EXPECT_EQ(sectors[2].label(), "++---");
  for (const auto& s : sectors) {
    ASSERT_EQ(s.members.size(), 2U);
    EXPECT_EQ(s.members[1], s.members[0].flipped_all());
    EXPECT_EQ(s.representative.spin(0), 1);
  }
  EXPECT_EQ(ground_sectors(g, false).size(), 6U);
}

TEST(Fairness, UniformOverGroundStates) {
  const GroundSet g = enumerate_ground_states(load_five_spin_fixture());
  Eigen::VectorXd p = Eigen::VectorXd::Zero(32);
  for (const SpinConfig& s : g.configs) p(static_cast<Eigen::Index>(s.bits())) = 1.0 / 6.0;
  for (FairnessLevel level : {FairnessLevel::State, FairnessLevel::Sector}) {
    const FairnessReport r = fairness(p, g, level);
    EXPECT_NEAR(r.ratio, 1.0, 1e-15);
    EXPECT_NEAR(r.spread, 0.0, 1e-15);
    EXPECT_NEAR(r.tv_uniform, 0.0, 1e-15);
  }
}

TEST(Fairness, SingleGroundStateIndicator) {
  const GroundSet g = enumerate_ground_states(load_five_spin_fixture());
  const Eigen::VectorXd p = indicator(32, static_cast<Eigen::Index>(g.configs[2].bits()));
  const FairnessReport state = fairness(p, g, FairnessLevel::State);
  EXPECT_EQ(state.ratio, 0.0);
  EXPECT_NEAR(state.tv_uniform, 5.0 / 6.0, 1e-15);
  EXPECT_EQ(state.max, 1.0);
  const FairnessReport sector = fairness(p, g, FairnessLevel::Sector);
  EXPECT_EQ(sector.ratio, 0.0);
  EXPECT_NEAR(sector.tv_uniform, 2.0 / 3.0, 1e-15);
}

TEST(Fairness, NoGroundWeight) {
  const GroundSet g = enumerate_ground_states(load_five_spin_fixture());
  Eigen::VectorXd p = Eigen::VectorXd::Zero(32);
  for (Eigen::Index k = 0; k < 32; ++k) {
    if (!g.contains(SpinConfig(static_cast<std::uint64_t>(k), 5))) p(k) = 1.0 / 26.0;
  }
  const FairnessReport r = fairness(p, g, FairnessLevel::State);
  EXPECT_EQ(r.ratio, 1.0);
  EXPECT_EQ(r.tv_uniform, 0.0);
}

TEST(Fairness, TvIsBoundedAndRatioInUnitInterval) {
  std::mt19937_64 rng(51);
  const GroundSet g = enumerate_ground_states(load_five_spin_fixture());
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::VectorXd p(32);
    for (auto& x : p) x = std::pow(u(rng), 4);
    p /= p.sum();
    for (FairnessLevel level : {FairnessLevel::State, FairnessLevel::Sector}) {
      const FairnessReport r = fairness(p, g, level);
      EXPECT_GE(r.ratio, 0.0);
      EXPECT_LE(r.ratio, 1.0);
      EXPECT_GE(r.tv_uniform, 0.0);
      EXPECT_LE(r.tv_uniform, 1.0);
    }
  }
}

TEST(BoltzmannDistance, Properties) {
  const IsingProblem p = load_five_spin_fixture();
  const Eigen::VectorXd q = boltzmann_distribution(p, 1.0);
  const BoltzmannReport same = boltzmann_distance(q, p, 1.0);
  EXPECT_NEAR(same.tv, 0.0, 1e-15);
  EXPECT_NEAR(same.kl, 0.0, 1e-14);

  const Eigen::VectorXd delta = indicator(32, 0);
  const BoltzmannReport far = boltzmann_distance(delta, q);
  EXPECT_NEAR(far.tv, 1.0 - q(0), 1e-15);
  EXPECT_NEAR(far.kl, -std::log(q(0)), 1e-12);

  // Pinsker: TV <= sqrt(KL / 2).
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd m(32);
    for (auto& x : m) x = u(rng);
    m /= m.sum();
    const BoltzmannReport r = boltzmann_distance(m, q);
    EXPECT_LE(r.tv, std::sqrt(r.kl / 2.0) + 1e-12);
  }
  EXPECT_THROW(boltzmann_distance(Eigen::VectorXd::Zero(3), q), DimensionMismatch);
}

TEST(LogTauGrid, DefaultGrid) {
  const auto grid = log_tau_grid();
  ASSERT_EQ(grid.size(), 49U);
  EXPECT_EQ(grid.front(), 1.0);
  EXPECT_EQ(grid.back(), 1000.0);
  EXPECT_EQ(grid[16], 10.0);
  for (std::size_t k = 1; k < grid.size(); ++k) EXPECT_NEAR(grid[k] / grid[k - 1], std::pow(10.0, 1.0 / 16), 1e-12);
  EXPECT_THROW(log_tau_grid(3, 0), DomainError);
}

TEST(RunProtocol, QaPreservesGlobalFlipSymmetry) {
  const IsingProblem p = load_five_spin_fixture();
  const GroundSet g = enumerate_ground_states(p);
  for (double tau : {3.0, 40.0}) {
    const RunResult r = run_protocol(Protocol::qa(tau), p, g, IntegratorConfig{});
    ASSERT_TRUE(r.ok());
    for (std::uint64_t k = 0; k < 32; ++k) {
      const SpinConfig s(k, 5);
      EXPECT_NEAR(r.probabilities(static_cast<Eigen::Index>(k)),
                  r.probabilities(static_cast<Eigen::Index>(s.flipped_all().bits())), 1e-6);
    }
    double sector_total = 0.0;
    for (double x : r.sector_fairness.probabilities) sector_total += x;
    EXPECT_NEAR(sector_total, r.p_gs, 1e-14);
    EXPECT_FALSE(r.boltzmann.has_value());
  }
}

TEST(RunProtocol, SboqaReportsBoltzmannDistance) {
  const IsingProblem p = load_five_spin_fixture();
  const RunResult r = run_protocol(Protocol::sboqa(10.0, 1.0), p, enumerate_ground_states(p), IntegratorConfig{});
  ASSERT_TRUE(r.ok());
  ASSERT_TRUE(r.boltzmann.has_value());
  EXPECT_GE(r.boltzmann->tv, 0.0);
  EXPECT_NEAR(r.sector_probability("+++--"), r.sector_fairness.probabilities[1], 0.0);
  EXPECT_THROW(r.sector_probability("-----"), DomainError);
}

TEST(RunProtocol, IntegratorFailureIsRecorded) {
  const IsingProblem p = load_five_spin_fixture();
  IntegratorConfig config;
  config.max_refinements = 1;
  config.refine_tol = 1e-300;
  const RunResult r = run_protocol(Protocol::qa(5.0), p, enumerate_ground_states(p), config);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.error_kind, "accuracy");
}

TEST(Sweep, OrderAndDeterminismAcrossThreadCounts) {
  const IsingProblem p = load_five_spin_fixture();
  const std::vector<double> taus{1.0, 2.0, 4.0, 8.0, 16.0};
  const auto serial = sweep(Protocol::sbo(1.0), p, taus, IntegratorConfig{}, 1);
  const auto parallel = sweep(Protocol::sbo(1.0), p, taus, IntegratorConfig{}, 3);
  ASSERT_EQ(serial.size(), taus.size());
  for (std::size_t k = 0; k < taus.size(); ++k) {
    EXPECT_EQ(serial[k].tau, taus[k]);
    EXPECT_EQ(parallel[k].tau, taus[k]);
    EXPECT_EQ(serial[k].probabilities, parallel[k].probabilities);
  }
  EXPECT_THROW(sweep(Protocol::sbo(1.0), p, {2.0, 1.0}, IntegratorConfig{}), DomainError);
  EXPECT_THROW(sweep(Protocol::sbo(1.0), p, {1.0, 1.0}, IntegratorConfig{}), DomainError);
  EXPECT_THROW(sweep(Protocol::sbo(1.0), p, {}, IntegratorConfig{}), DomainError);
}

TEST(Sweep, SboqaApproachesBoltzmannAlongALadder) {
  const IsingProblem p = load_five_spin_fixture();
  const auto results = sweep(Protocol::sboqa(1.0, 1.0), p, {15.625, 250.0, 4000.0}, IntegratorConfig{}, 3);
  for (std::size_t k = 1; k < results.size(); ++k) {
    EXPECT_LT(results[k].boltzmann->tv, results[k - 1].boltzmann->tv);
    EXPECT_LT(results[k].boltzmann->kl, results[k - 1].boltzmann->kl);
  }
}
