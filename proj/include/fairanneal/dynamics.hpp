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

// Time-dependent Schrodinger integration (hbar = 1) and spectral diagnostics.

#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <vector>

#include "fairanneal/hilbert.hpp"
#include "fairanneal/ising.hpp"
#include "fairanneal/sbo.hpp"

namespace fairanneal {

struct IntegratorConfig {
  /// Initial RK4 step count; raised to ceil(tau / max_step) for long runs.
  int steps = 1000;
  /// Upper bound on the initial step size.
  double max_step = 0.01;
  /// Allowed | ||psi(tau)|| - 1 |.
  double norm_tol = 1e-8;
  /// Allowed max basis-probability change between successive step halvings.
  double refine_tol = 1e-6;
  int max_refinements = 6;
  /// Evenly spaced probability snapshots to record, including t = 0 and t = tau.
  int snapshots = 2;
  /// Subtract <psi|H|psi> at the start of each step. This changes only the
  /// global phase of the exact solution but shrinks the RK4 error.
  bool phase_gauge = true;

  void validate() const;
};

struct EvolutionTrace {
  std::vector<double> sample_times;
  std::vector<Eigen::VectorXd> probability_snapshots;
  QuantumState final_state;
  double norm_drift = 0.0;
  /// Norm drift of every attempted integration, coarsest first.
  std::vector<double> drift_history;
  /// Max probability change between the last two integrations.
  double probability_change = 0.0;
  int refinements = 0;
  int steps = 0;
};

struct SpectrumSlice {
  double t = 0.0;
  Eigen::VectorXd eigenvalues;  // lowest k, ascending
  Eigen::MatrixXd eigenvectors;  // matching columns
  Eigen::VectorXd ground_state;

  double gap() const { return eigenvalues.size() > 1 ? eigenvalues(1) - eigenvalues(0) : 0.0; }
};

/// A Hamiltonian that can be positioned at a time and then applied.
class TimeDependentHamiltonian {
 public:
  virtual ~TimeDependentHamiltonian() = default;
  virtual int qubits() const = 0;
  virtual void set_time(double t) = 0;
  virtual void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const = 0;
};

/// Adapts a protocol path; the split terms are refreshed on every set_time.
class ProtocolHamiltonian final : public TimeDependentHamiltonian {
 public:
  explicit ProtocolHamiltonian(const ProtocolPath& path) : path_(path) {}
  int qubits() const override { return path_.qubits(); }
  void set_time(double t) override { path_.terms_at(t, terms_); }
  void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const override { terms_.apply(in, out); }

 private:
  const ProtocolPath& path_;
  SplitHamiltonian terms_;
};

/// Adapts any t -> (transverse, diagonal) function.
class SplitHamiltonianFunction final : public TimeDependentHamiltonian {
 public:
  using Fn = std::function<void(double, SplitHamiltonian&)>;
  SplitHamiltonianFunction(int qubits, Fn fn) : qubits_(qubits), fn_(std::move(fn)) {}
  int qubits() const override { return qubits_; }
  void set_time(double t) override { fn_(t, terms_); }
  void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const override { terms_.apply(in, out); }

 private:
  int qubits_;
  Fn fn_;
  SplitHamiltonian terms_;
};

struct FixedStepResult {
  Eigen::VectorXcd state;
  std::vector<double> sample_times;
  std::vector<Eigen::VectorXd> probability_snapshots;
};

/// Classical RK4 with `steps` equal steps over [0, duration]. H is evaluated at
/// t, t + h/2 and t + h of every step. The state is not renormalized.
FixedStepResult integrate_rk4(TimeDependentHamiltonian& hamiltonian, const Eigen::VectorXcd& initial,
                              double duration, long steps, int snapshots = 2, bool phase_gauge = true);

/// Step-halving RK4 until the norm drift and probability change meet `config`.
/// Throws AccuracyError when max_refinements is exhausted.
EvolutionTrace evolve(TimeDependentHamiltonian& hamiltonian, const Eigen::VectorXcd& initial,
                      double duration, const IntegratorConfig& config);

/// Evolves the uniform superposition (or `initial`) under the protocol from t = 0 to tau.
EvolutionTrace evolve(const Protocol& protocol, const IsingProblem& problem, const IntegratorConfig& config,
                      const std::optional<QuantumState>& initial = std::nullopt);

/// Lowest `k` eigenpairs of a real symmetric operator via cyclic Jacobi.
/// Each pair satisfies ||H v - lambda v||_inf <= 1e-8.
SpectrumSlice eigensolve_lowest(const DenseOperator& h, int k, double t = 0.0);

/// Eigensolves H(t) at `samples` evenly spaced times in [0, tau].
std::vector<SpectrumSlice> gap_profile(const Protocol& protocol, const IsingProblem& problem, int samples,
                                       int levels = 2);

double minimum_gap(const std::vector<SpectrumSlice>& slices);

}  // namespace fairanneal
