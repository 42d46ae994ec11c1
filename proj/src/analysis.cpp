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

#include "fairanneal/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace fairanneal {

Eigen::VectorXd measure(const Eigen::VectorXcd& amplitudes) {
  Eigen::VectorXd p = amplitudes.cwiseAbs2();
  const double total = p.sum();
  if (!(total > 0.0)) throw DomainError("cannot measure a zero-norm state");
  return p / total;
}

Eigen::VectorXd measure(const QuantumState& state) { return measure(state.amplitudes()); }

std::vector<GroundSector> ground_sectors(const GroundSet& ground, bool pair_flips) {
  std::vector<GroundSector> out;
  for (const SpinConfig& s : ground.configs) {
    if (!pair_flips) {
      out.push_back({s, {s}});
      continue;
    }
    const SpinConfig flip = s.flipped_all();
    const SpinConfig rep = s.spin(0) == 1 ? s : flip;
    if (rep != s) continue;  // visited through its partner
    GroundSector sector{rep, {rep}};
    if (ground.contains(flip)) sector.members.push_back(flip);
    out.push_back(std::move(sector));
  }
  // A ground state whose partner is not a ground state and has sigma_0 = -1.
  if (pair_flips) {
    for (const SpinConfig& s : ground.configs) {
      if (s.spin(0) == -1 && !ground.contains(s.flipped_all())) out.push_back({s, {s}});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const GroundSector& a, const GroundSector& b) { return a.representative.bits() > b.representative.bits(); });
  return out;
}

FairnessReport fairness(const Eigen::VectorXd& probabilities, const std::vector<GroundSector>& sectors,
                        FairnessLevel level) {
  if (sectors.empty()) throw DomainError("fairness needs a nonempty ground set");
  FairnessReport r;
  r.level = level;
  for (const GroundSector& sector : sectors) {
    double acc = 0.0;
    for (const SpinConfig& s : sector.members) {
      if (static_cast<Eigen::Index>(s.bits()) >= probabilities.size()) {
        throw DimensionMismatch("ground state outside the probability vector");
      }
      acc += probabilities(static_cast<Eigen::Index>(s.bits()));
    }
    r.labels.push_back(sector.label());
    r.probabilities.push_back(acc);
  }
  const auto [lo, hi] = std::minmax_element(r.probabilities.begin(), r.probabilities.end());
  r.min = *lo;
  r.max = *hi;
  r.spread = r.max - r.min;
  r.ratio = r.max > 0.0 ? r.min / r.max : 1.0;
  double total = 0.0;
  for (double p : r.probabilities) total += p;
  r.tv_uniform = 0.0;
  if (total > 0.0) {
    const double uniform = 1.0 / static_cast<double>(r.probabilities.size());
    for (double p : r.probabilities) r.tv_uniform += std::abs(p / total - uniform);
    r.tv_uniform = std::clamp(0.5 * r.tv_uniform, 0.0, 1.0);
  }
  return r;
}

FairnessReport fairness(const Eigen::VectorXd& probabilities, const GroundSet& ground, FairnessLevel level) {
  return fairness(probabilities, ground_sectors(ground, level == FairnessLevel::Sector), level);
}

BoltzmannReport boltzmann_distance(const Eigen::VectorXd& measured, const Eigen::VectorXd& reference) {
  if (measured.size() != reference.size()) throw DimensionMismatch("boltzmann_distance: size mismatch");
  BoltzmannReport r;
  r.tv = std::clamp(0.5 * (measured - reference).cwiseAbs().sum(), 0.0, 1.0);
  double kl = 0.0;
  for (Eigen::Index k = 0; k < measured.size(); ++k) {
    const double p = measured(k);
    if (p > 0.0) kl += p * std::log(p / std::max(reference(k), 1e-300));
  }
  r.kl = std::max(kl, 0.0);
  return r;
}

BoltzmannReport boltzmann_distance(const Eigen::VectorXd& measured, const IsingProblem& problem, double beta) {
  return boltzmann_distance(measured, boltzmann_distribution(problem, beta));
}

double RunResult::sector_probability(const std::string& label) const {
  for (std::size_t k = 0; k < sector_fairness.labels.size(); ++k) {
    if (sector_fairness.labels[k] == label) return sector_fairness.probabilities[k];
  }
  throw DomainError("no ground sector labelled '" + label + "'");
}

RunResult analyze(const Protocol& protocol, const IsingProblem& problem, const GroundSet& ground,
                  const Eigen::VectorXd& probabilities) {
  if (probabilities.size() != static_cast<Eigen::Index>(problem.dimension())) {
    throw DimensionMismatch("analyze: probability vector size does not match the problem");
  }
  RunResult r;
  r.protocol = protocol;
  r.tau = protocol.tau;
  r.probabilities = probabilities;
  for (const SpinConfig& s : ground.configs) {
    const double p = probabilities(static_cast<Eigen::Index>(s.bits()));
    r.ground_probabilities.emplace_back(s, p);
    r.p_gs += p;
  }
  r.state_fairness = fairness(probabilities, ground, FairnessLevel::State);
  r.sector_fairness = fairness(probabilities, ground_sectors(ground, problem.has_zero_fields()),
                               FairnessLevel::Sector);
  if (protocol.kind == ProtocolKind::SBOQA) {
    r.boltzmann = boltzmann_distance(probabilities, problem, protocol.beta_target);
  }
  return r;
}

RunResult run_protocol(const Protocol& protocol, const IsingProblem& problem, const GroundSet& ground,
                       const IntegratorConfig& config) {
  try {
    const EvolutionTrace trace = evolve(protocol, problem, config);
    RunResult r = analyze(protocol, problem, ground, measure(trace.final_state));
    r.norm_drift = trace.norm_drift;
    r.refinements = trace.refinements;
    r.steps = trace.steps;
    return r;
  } catch (const AccuracyError& e) {
    RunResult r;
    r.protocol = protocol;
    r.tau = protocol.tau;
    r.norm_drift = e.norm_drift();
    r.refinements = config.max_refinements;
    r.error = e.what();
    r.error_kind = e.kind();
    return r;
  } catch (const Error& e) {
    RunResult r;
    r.protocol = protocol;
    r.tau = protocol.tau;
    r.error = e.what();
    r.error_kind = e.kind();
    return r;
  }
}

std::vector<RunResult> sweep(const Protocol& protocol_template, const IsingProblem& problem,
                             const std::vector<double>& taus, const IntegratorConfig& config, int jobs) {
  if (taus.empty()) throw DomainError("sweep needs a nonempty tau grid");
  for (std::size_t k = 1; k < taus.size(); ++k) {
    if (!(taus[k] > taus[k - 1])) throw DomainError("sweep tau grid must be strictly ascending");
  }
  const GroundSet ground = enumerate_ground_states(problem);
  std::vector<RunResult> results(taus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < taus.size(); k = next++) {
      results[k] = run_protocol(protocol_template.with_tau(taus[k]), problem, ground, config);
    }
  };
  const int threads = std::clamp(jobs, 1, static_cast<int>(taus.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  return results;
}

std::vector<double> log_tau_grid(int min_decade, int max_decade, int points_per_decade) {
  if (max_decade < min_decade || points_per_decade < 1) throw DomainError("invalid tau grid bounds");
  std::vector<double> out;
  for (int k = min_decade * points_per_decade; k <= max_decade * points_per_decade; ++k) {
    out.push_back(std::pow(10.0, static_cast<double>(k) / points_per_decade));
  }
  return out;
}

}  // namespace fairanneal
