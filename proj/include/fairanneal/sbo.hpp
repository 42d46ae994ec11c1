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

// Protocol Hamiltonians: conventional transverse-field annealing, the
// temperature-parametrized Hamiltonian H_S(beta) whose zero-energy ground state
// encodes the Boltzmann distribution, and the interpolation between the
// transverse field and H_S(beta_target).
//
// Every Hamiltonian here has the form  -a * sum_i sigma^x_i + diag(d),
// which is what SplitHamiltonian stores.

#pragma once

#include <Eigen/Dense>

#include <string>
#include <string_view>

#include "fairanneal/hilbert.hpp"
#include "fairanneal/ising.hpp"

namespace fairanneal {

enum class ProtocolKind { QA, SBO, SBOQA };

std::string_view to_string(ProtocolKind kind);
/// Accepts "qa", "sbo", "sboqa" (case-insensitive; "sbo+qa" also accepted).
ProtocolKind parse_protocol_kind(std::string_view text);

struct Protocol {
  ProtocolKind kind = ProtocolKind::QA;
  double tau = 1.0;
  /// Target inverse temperature; used by SBOQA only.
  double beta_target = 0.0;
  /// c in beta(t) = -c ln(1 - t/tau).
  double schedule_prefactor = 10.0;
  /// The schedule argument is clamped at tau (1 - eps).
  double schedule_eps = 1e-6;

  static Protocol qa(double tau);
  static Protocol sbo(double tau, double c = 10.0, double eps = 1e-6);
  static Protocol sboqa(double tau, double beta_target);

  /// Throws DomainError on tau <= 0, beta_target <= 0 for SBOQA, c <= 0, eps outside (0, 1).
  void validate() const;
  Protocol with_tau(double new_tau) const;
};

struct SboParams {
  /// Energy scale p in chi = e^{-beta p}; must bound every |H_i(sigma)|.
  double p = 0.0;

  static SboParams for_problem(const IsingProblem& problem);
};

/// H = -transverse * sum_i sigma^x_i + diag(diagonal).
struct SplitHamiltonian {
  double transverse = 0.0;
  Eigen::VectorXd diagonal;

  int qubits() const { return qubits_for_dimension(diagonal.size()); }
  DenseOperator to_dense() const;
  /// out = H * in, matrix-free.
  void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
};

/// max_i (sum_j |J_ij| + |h_i|), the exact bound on |H_i(sigma)|.
double compute_p(const IsingProblem& problem);

SplitHamiltonian hs_terms(const IsingProblem& problem, double beta, const SboParams& params);
SplitHamiltonian qa_terms(const IsingProblem& problem, double s);
SplitHamiltonian sboqa_terms(const IsingProblem& problem, double s, double beta_target,
                             const SboParams& params);

/// H_S(beta) = -chi sum_i sigma^x_i + sum_i e^{beta (H_i - p)}, chi = e^{-beta p}.
DenseOperator build_hs(const IsingProblem& problem, double beta, const SboParams& params);
/// s H_0 - (1 - s) sum_i sigma^x_i.
DenseOperator build_qa(const IsingProblem& problem, double s);
/// s H_S(beta_target) - (1 - s) sum_i sigma^x_i.
DenseOperator build_sboqa(const IsingProblem& problem, double s, double beta_target,
                          const SboParams& params);

/// beta(t) = -c ln(1 - min(t, tau (1 - eps)) / tau).
double sbo_beta_schedule(double t, double tau, double c = 10.0, double eps = 1e-6);

/// Precomputed tables for evaluating a protocol's Hamiltonian at many times.
class ProtocolPath {
 public:
  ProtocolPath(const Protocol& protocol, const IsingProblem& problem);

  const Protocol& protocol() const { return protocol_; }
  int qubits() const { return qubits_; }
  Eigen::Index dimension() const { return Eigen::Index{1} << qubits_; }
  double p() const { return p_; }

  /// Fills `out` with H(t). Reuses out.diagonal's storage.
  void terms_at(double t, SplitHamiltonian& out) const;
  SplitHamiltonian terms_at(double t) const;
  /// Control parameter at t: s = t/tau for QA/SBOQA, beta(t) for SBO.
  double control_at(double t) const;

 private:
  void sbo_diagonal(double beta, Eigen::VectorXd& out) const;

  Protocol protocol_;
  int qubits_;
  double p_;
  Eigen::VectorXd problem_energies_;
  // (H_i(sigma) - p) laid out as dimension x qubits.
  Eigen::MatrixXd shifted_local_;
  // sum_i e^{beta_target (H_i - p)} for SBOQA.
  Eigen::VectorXd target_diagonal_;
};

SplitHamiltonian hamiltonian_terms_at(const Protocol& protocol, const IsingProblem& problem, double t);
DenseOperator hamiltonian_at(const Protocol& protocol, const IsingProblem& problem, double t);

}  // namespace fairanneal
