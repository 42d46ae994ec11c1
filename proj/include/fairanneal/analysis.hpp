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

// Observables of a finished run: ground-state and ground-sector probabilities,
// fairness metrics, distance to the Boltzmann distribution, and tau sweeps.

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "fairanneal/dynamics.hpp"
#include "fairanneal/ising.hpp"
#include "fairanneal/sbo.hpp"

namespace fairanneal {

/// Born-rule readout, renormalized by the actual norm.
Eigen::VectorXd measure(const QuantumState& state);
Eigen::VectorXd measure(const Eigen::VectorXcd& amplitudes);

/// A set of ground states reported together. With zero fields a sector is a
/// global-flip pair; otherwise every ground state is its own sector.
struct GroundSector {
  SpinConfig representative;
  std::vector<SpinConfig> members;

  std::string label() const { return representative.label(); }
};

/// Flip-pair sectors when `pair_flips`, singleton sectors otherwise. Ordered by
/// descending representative bit pattern; the representative has sigma_0 = +1.
std::vector<GroundSector> ground_sectors(const GroundSet& ground, bool pair_flips);

enum class FairnessLevel { State, Sector };

struct FairnessReport {
  FairnessLevel level = FairnessLevel::State;
  std::vector<std::string> labels;
  std::vector<double> probabilities;
  double min = 0.0;
  double max = 0.0;
  double spread = 0.0;
  /// min / max, 1 when max = 0.
  double ratio = 1.0;
  /// Total variation between the renormalized ground distribution and uniform.
  double tv_uniform = 0.0;
};

FairnessReport fairness(const Eigen::VectorXd& probabilities, const std::vector<GroundSector>& sectors,
                        FairnessLevel level);
FairnessReport fairness(const Eigen::VectorXd& probabilities, const GroundSet& ground,
                        FairnessLevel level = FairnessLevel::State);

struct BoltzmannReport {
  double tv = 0.0;
  /// KL(measured || Boltzmann) with 0 log 0 = 0 and q floored at 1e-300.
  double kl = 0.0;
};

BoltzmannReport boltzmann_distance(const Eigen::VectorXd& measured, const Eigen::VectorXd& reference);
BoltzmannReport boltzmann_distance(const Eigen::VectorXd& measured, const IsingProblem& problem, double beta);

struct RunResult {
  Protocol protocol;
  double tau = 0.0;
  Eigen::VectorXd probabilities;
  std::vector<std::pair<SpinConfig, double>> ground_probabilities;
  double p_gs = 0.0;
  FairnessReport state_fairness;
  FairnessReport sector_fairness;
  std::optional<BoltzmannReport> boltzmann;
  double norm_drift = 0.0;
  int refinements = 0;
  int steps = 0;
  /// Set when the run failed; the metric fields are then meaningless.
  std::optional<std::string> error;
  std::string error_kind;

  bool ok() const { return !error.has_value(); }
  /// Probability of a sector by label, e.g. "+++--".
  double sector_probability(const std::string& label) const;
};

RunResult analyze(const Protocol& protocol, const IsingProblem& problem, const GroundSet& ground,
                  const Eigen::VectorXd& probabilities);

/// Evolves and analyzes one protocol. Integrator and domain errors are recorded
/// in the result rather than thrown.
RunResult run_protocol(const Protocol& protocol, const IsingProblem& problem, const GroundSet& ground,
                       const IntegratorConfig& config);

/// One run per tau, results in grid order. `jobs` worker threads (>= 1).
std::vector<RunResult> sweep(const Protocol& protocol_template, const IsingProblem& problem,
                             const std::vector<double>& taus, const IntegratorConfig& config, int jobs = 1);

/// 10^{k / points_per_decade} for every k from log10(min) to log10(max) (both
/// decades included).
std::vector<double> log_tau_grid(int min_decade = 0, int max_decade = 3, int points_per_decade = 16);

}  // namespace fairanneal
