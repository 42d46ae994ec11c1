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

#include "fairanneal/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "fairanneal/jacobi.hpp"

namespace fairanneal {

namespace {

constexpr std::complex<double> kMinusI(0.0, -1.0);

double max_abs_difference(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

void IntegratorConfig::validate() const {
  if (steps < 100) throw DomainError("integrator steps must be >= 100");
  if (!(max_step > 0.0)) throw DomainError("integrator max_step must be positive");
  if (!(norm_tol > 0.0) || !(refine_tol > 0.0)) throw DomainError("integrator tolerances must be positive");
  if (max_refinements < 0) throw DomainError("max_refinements must be >= 0");
  if (snapshots < 2) throw DomainError("at least two snapshots (t = 0 and t = tau) are recorded");
}

FixedStepResult integrate_rk4(TimeDependentHamiltonian& hamiltonian, const Eigen::VectorXcd& initial,
                              double duration, long steps, int snapshots, bool phase_gauge) {
  if (steps < 1) throw DomainError("integrate_rk4: steps must be positive");
  if (!(duration > 0.0)) throw DomainError("integrate_rk4: duration must be positive");
  if (snapshots < 2) throw DomainError("integrate_rk4: need at least two snapshots");
  const Eigen::Index dim = initial.size();
  if (dim != (Eigen::Index{1} << hamiltonian.qubits())) throw DimensionMismatch("integrate_rk4: state dimension");

  const double h = duration / static_cast<double>(steps);
  Eigen::VectorXcd psi = initial;
  Eigen::VectorXcd k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

  FixedStepResult out;
  auto next_sample = [&](int j) {
    return static_cast<long>(std::llround(static_cast<double>(j) * static_cast<double>(steps) / (snapshots - 1)));
  };
  int sample = 0;
  auto record = [&](long step) {
    while (sample < snapshots && next_sample(sample) == step) {
      out.sample_times.push_back(duration * static_cast<double>(step) / static_cast<double>(steps));
      out.probability_snapshots.push_back(psi.cwiseAbs2());
      ++sample;
    }
  };
  record(0);

  for (long step = 0; step < steps; ++step) {
    // Times are computed from the step index so t + h lands exactly on duration.
    const double t0 = duration * static_cast<double>(step) / static_cast<double>(steps);
    const double t_mid = duration * (static_cast<double>(step) + 0.5) / static_cast<double>(steps);
    const double t1 = duration * static_cast<double>(step + 1) / static_cast<double>(steps);

    hamiltonian.set_time(t0);
    hamiltonian.apply(psi, k1);
    double offset = 0.0;
    if (phase_gauge) offset = psi.dot(k1).real() / psi.squaredNorm();
    k1 = kMinusI * (k1 - offset * psi);

    hamiltonian.set_time(t_mid);
    tmp = psi + (0.5 * h) * k1;
    hamiltonian.apply(tmp, k2);
    k2 = kMinusI * (k2 - offset * tmp);
    tmp = psi + (0.5 * h) * k2;
    hamiltonian.apply(tmp, k3);
    k3 = kMinusI * (k3 - offset * tmp);

    hamiltonian.set_time(t1);
    tmp = psi + h * k3;
    hamiltonian.apply(tmp, k4);
    k4 = kMinusI * (k4 - offset * tmp);

    psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    record(step + 1);
  }
  out.state = std::move(psi);
  return out;
}

EvolutionTrace evolve(TimeDependentHamiltonian& hamiltonian, const Eigen::VectorXcd& initial, double duration,
                      const IntegratorConfig& config) {
  config.validate();
  const long initial_steps = std::max<long>(config.steps, static_cast<long>(std::ceil(duration / config.max_step)));

  long steps = initial_steps;
  FixedStepResult previous =
      integrate_rk4(hamiltonian, initial, duration, steps, config.snapshots, config.phase_gauge);
  std::vector<double> drifts{std::abs(previous.state.norm() - 1.0)};
  double change = 0.0;
  for (int refinement = 1; refinement <= config.max_refinements; ++refinement) {
    steps *= 2;
    FixedStepResult current =
        integrate_rk4(hamiltonian, initial, duration, steps, config.snapshots, config.phase_gauge);
    const double drift = std::abs(current.state.norm() - 1.0);
    drifts.push_back(drift);
    change = max_abs_difference(current.state.cwiseAbs2(), previous.state.cwiseAbs2());
    if (drift <= config.norm_tol && change <= config.refine_tol) {
      EvolutionTrace trace{std::move(current.sample_times), std::move(current.probability_snapshots),
                           QuantumState(std::move(current.state), std::max(config.norm_tol, 1e-9)),
                           drift,
                           std::move(drifts),
                           change,
                           refinement,
                           static_cast<int>(std::min<long>(steps, INT32_MAX))};
      return trace;
    }
    previous = std::move(current);
  }
  throw AccuracyError(fmt::format("integrator did not converge after {} refinements ({} steps): norm drift {:.3e}, "
                                  "probability change {:.3e}",
                                  config.max_refinements, steps, drifts.back(), change),
                      drifts.back(), change);
}

EvolutionTrace evolve(const Protocol& protocol, const IsingProblem& problem, const IntegratorConfig& config,
                      const std::optional<QuantumState>& initial) {
  const ProtocolPath path(protocol, problem);
  ProtocolHamiltonian hamiltonian(path);
  const QuantumState start = initial ? *initial : QuantumState::uniform(problem.size());
  if (start.qubits() != problem.size()) throw DimensionMismatch("initial state size does not match problem");
  return evolve(hamiltonian, start.amplitudes(), protocol.tau, config);
}

SpectrumSlice eigensolve_lowest(const DenseOperator& h, int k, double t) {
  const Eigen::MatrixXd m = h.real_symmetric_matrix();
  if (k < 1 || k > m.rows()) throw DomainError("eigensolve_lowest: k out of range");
  const auto eig = jacobi_eigen(m);
  SpectrumSlice slice;
  slice.t = t;
  slice.eigenvalues = eig.eigenvalues.head(k);
  slice.eigenvectors = eig.eigenvectors.leftCols(k);
  for (int j = 0; j < k; ++j) {
    const double residual = (m * slice.eigenvectors.col(j) - slice.eigenvalues(j) * slice.eigenvectors.col(j))
                                .cwiseAbs()
                                .maxCoeff();
    if (residual > 1e-8) {
      throw ConvergenceError(fmt::format("eigenpair {} residual {:.3e} exceeds 1e-8", j, residual));
    }
  }
  slice.ground_state = slice.eigenvectors.col(0);
  // Fix the sign so the largest-magnitude component is positive.
  Eigen::Index at = 0;
  slice.ground_state.cwiseAbs().maxCoeff(&at);
  if (slice.ground_state(at) < 0.0) slice.ground_state = -slice.ground_state;
  return slice;
}

std::vector<SpectrumSlice> gap_profile(const Protocol& protocol, const IsingProblem& problem, int samples,
                                       int levels) {
  if (samples < 2) throw DomainError("gap_profile needs at least two samples");
  if (levels < 2) throw DomainError("gap_profile needs at least two levels");
  const ProtocolPath path(protocol, problem);
  std::vector<SpectrumSlice> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const double t = protocol.tau * static_cast<double>(j) / static_cast<double>(samples - 1);
    out.push_back(eigensolve_lowest(path.terms_at(t).to_dense(), levels, t));
  }
  return out;
}

double minimum_gap(const std::vector<SpectrumSlice>& slices) {
  if (slices.empty()) throw DomainError("minimum_gap: no slices");
  double g = slices.front().gap();
  for (const auto& s : slices) g = std::min(g, s.gap());
  return g;
}

}  // namespace fairanneal
