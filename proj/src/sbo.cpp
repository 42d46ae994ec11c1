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

#include "fairanneal/sbo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace fairanneal {

namespace {

void check_s(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("normalized time s must lie in [0, 1], got " + std::to_string(s));
}

void check_beta(double beta) {
  if (!std::isfinite(beta) || beta < 0.0) throw DomainError("beta must be finite and >= 0");
}

// (H_i(sigma) - p) for every basis state and site.
Eigen::MatrixXd shifted_local_energies(const IsingProblem& problem, double p) {
  check_dense_qubits(problem.size());
  const int n = problem.size();
  const auto dim = static_cast<Eigen::Index>(problem.dimension());
  Eigen::MatrixXd out(dim, n);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const SpinConfig s(static_cast<std::uint64_t>(k), n);
    for (int i = 0; i < n; ++i) out(k, i) = local_energy(problem, s, i) - p;
  }
  return out;
}

void check_shifted(const Eigen::MatrixXd& shifted, double beta, double p) {
  const double worst = beta * shifted.maxCoeff();
  if (worst > 1e-12 * std::max(1.0, beta * p)) {
    throw DomainError("SBO parameter p is below max |H_i|: shifted exponent " + std::to_string(worst) +
                      " is positive");
  }
}

Eigen::VectorXd sum_of_exponentials(const Eigen::MatrixXd& shifted, double beta) {
  return (beta * shifted.array()).exp().rowwise().sum().matrix();
}

}  // namespace

std::string_view to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::QA:
      return "qa";
    case ProtocolKind::SBO:
      return "sbo";
    case ProtocolKind::SBOQA:
      return "sboqa";
  }
  return "unknown";
}

ProtocolKind parse_protocol_kind(std::string_view text) {
  std::string lower;
  for (char c : text) {
    if (c != '+' && c != '_' && c != '-') lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (lower == "qa") return ProtocolKind::QA;
  if (lower == "sbo") return ProtocolKind::SBO;
  if (lower == "sboqa") return ProtocolKind::SBOQA;
  throw DomainError("unknown protocol '" + std::string(text) + "'");
}

Protocol Protocol::qa(double tau) {
  Protocol p;
  p.kind = ProtocolKind::QA;
  p.tau = tau;
  return p;
}

Protocol Protocol::sbo(double tau, double c, double eps) {
  Protocol p;
  p.kind = ProtocolKind::SBO;
  p.tau = tau;
  p.schedule_prefactor = c;
  p.schedule_eps = eps;
  return p;
}

Protocol Protocol::sboqa(double tau, double beta_target) {
  Protocol p;
  p.kind = ProtocolKind::SBOQA;
  p.tau = tau;
  p.beta_target = beta_target;
  return p;
}

void Protocol::validate() const {
  if (!std::isfinite(tau) || tau <= 0.0) throw DomainError("tau must be positive and finite");
  if (kind == ProtocolKind::SBOQA && !(std::isfinite(beta_target) && beta_target > 0.0)) {
    throw DomainError("SBOQA needs a positive finite beta_target");
  }
  if (!(std::isfinite(schedule_prefactor) && schedule_prefactor > 0.0)) {
    throw DomainError("schedule prefactor c must be positive");
  }
  if (!(schedule_eps > 0.0 && schedule_eps < 1.0)) throw DomainError("schedule eps must lie in (0, 1)");
}

Protocol Protocol::with_tau(double new_tau) const {
  Protocol p = *this;
  p.tau = new_tau;
  return p;
}

SboParams SboParams::for_problem(const IsingProblem& problem) { return SboParams{compute_p(problem)}; }

DenseOperator SplitHamiltonian::to_dense() const {
  const int n = qubits();
  DenseOperator::Matrix m = (-transverse) * transverse_field(n).matrix();
  m.diagonal() += diagonal.cast<std::complex<double>>();
  return DenseOperator(std::move(m), true);
}

void SplitHamiltonian::apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
  const Eigen::Index dim = diagonal.size();
  if (in.size() != dim) throw DimensionMismatch("SplitHamiltonian::apply: dimension mismatch");
  const int n = qubits();
  out.resize(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    std::complex<double> flip(0.0);
    for (int i = 0; i < n; ++i) flip += in(k ^ (Eigen::Index{1} << i));
    out(k) = diagonal(k) * in(k) - transverse * flip;
  }
}

double compute_p(const IsingProblem& problem) {
  const Eigen::MatrixXd& J = problem.coupling_matrix();
  double p = 0.0;
  for (int i = 0; i < problem.size(); ++i) {
    p = std::max(p, J.row(i).cwiseAbs().sum() + std::abs(problem.fields()[i]));
  }
  return p;
}

SplitHamiltonian hs_terms(const IsingProblem& problem, double beta, const SboParams& params) {
  check_beta(beta);
  const Eigen::MatrixXd shifted = shifted_local_energies(problem, params.p);
  check_shifted(shifted, beta, params.p);
  return {std::exp(-beta * params.p), sum_of_exponentials(shifted, beta)};
}

SplitHamiltonian qa_terms(const IsingProblem& problem, double s) {
  check_s(s);
  check_dense_qubits(problem.size());
  return {1.0 - s, s * energy_spectrum(problem)};
}

SplitHamiltonian sboqa_terms(const IsingProblem& problem, double s, double beta_target,
                             const SboParams& params) {
  check_s(s);
  SplitHamiltonian hs = hs_terms(problem, beta_target, params);
  hs.transverse = s * hs.transverse + (1.0 - s);
  hs.diagonal *= s;
  return hs;
}

DenseOperator build_hs(const IsingProblem& problem, double beta, const SboParams& params) {
  return hs_terms(problem, beta, params).to_dense();
}

DenseOperator build_qa(const IsingProblem& problem, double s) { return qa_terms(problem, s).to_dense(); }

DenseOperator build_sboqa(const IsingProblem& problem, double s, double beta_target,
                          const SboParams& params) {
  return sboqa_terms(problem, s, beta_target, params).to_dense();
}

double sbo_beta_schedule(double t, double tau, double c, double eps) {
  if (!(tau > 0.0) || !(c > 0.0) || !(eps > 0.0 && eps < 1.0)) {
    throw DomainError("sbo_beta_schedule: need tau > 0, c > 0, eps in (0, 1)");
  }
  if (!(t >= 0.0 && t <= tau * (1.0 + 1e-12))) throw DomainError("sbo_beta_schedule: t outside [0, tau]");
  const double clamped = std::min(t, tau * (1.0 - eps));
  return -c * std::log1p(-clamped / tau);
}

// ProtocolPath -------------------------------------------------------------

ProtocolPath::ProtocolPath(const Protocol& protocol, const IsingProblem& problem)
    : protocol_(protocol), qubits_(problem.size()), p_(compute_p(problem)) {
  protocol_.validate();
  check_dense_qubits(qubits_);
  switch (protocol_.kind) {
    case ProtocolKind::QA:
      problem_energies_ = energy_spectrum(problem);
      break;
    case ProtocolKind::SBO:
      shifted_local_ = shifted_local_energies(problem, p_);
      break;
    case ProtocolKind::SBOQA:
      shifted_local_ = shifted_local_energies(problem, p_);
      check_shifted(shifted_local_, protocol_.beta_target, p_);
      target_diagonal_ = sum_of_exponentials(shifted_local_, protocol_.beta_target);
      break;
  }
}

double ProtocolPath::control_at(double t) const {
  if (!(t >= 0.0 && t <= protocol_.tau * (1.0 + 1e-12))) throw DomainError("time outside [0, tau]");
  if (protocol_.kind == ProtocolKind::SBO) {
    return sbo_beta_schedule(t, protocol_.tau, protocol_.schedule_prefactor, protocol_.schedule_eps);
  }
  return std::min(t / protocol_.tau, 1.0);
}

void ProtocolPath::sbo_diagonal(double beta, Eigen::VectorXd& out) const {
  const Eigen::Index dim = shifted_local_.rows();
  out.resize(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    double acc = 0.0;
    for (int i = 0; i < qubits_; ++i) acc += std::exp(beta * shifted_local_(k, i));
    out(k) = acc;
  }
}

void ProtocolPath::terms_at(double t, SplitHamiltonian& out) const {
  const double control = control_at(t);
  switch (protocol_.kind) {
    case ProtocolKind::QA:
      out.transverse = 1.0 - control;
      out.diagonal = control * problem_energies_;
      break;
    case ProtocolKind::SBO:
      out.transverse = std::exp(-control * p_);
      sbo_diagonal(control, out.diagonal);
      break;
    case ProtocolKind::SBOQA:
      out.transverse = control * std::exp(-protocol_.beta_target * p_) + (1.0 - control);
      out.diagonal = control * target_diagonal_;
      break;
  }
}

SplitHamiltonian ProtocolPath::terms_at(double t) const {
  SplitHamiltonian out;
  terms_at(t, out);
  return out;
}

SplitHamiltonian hamiltonian_terms_at(const Protocol& protocol, const IsingProblem& problem, double t) {
  return ProtocolPath(protocol, problem).terms_at(t);
}

DenseOperator hamiltonian_at(const Protocol& protocol, const IsingProblem& problem, double t) {
  return hamiltonian_terms_at(protocol, problem, t).to_dense();
}

}  // namespace fairanneal
