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

#include "fairanneal/ising.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <utility>

namespace fairanneal {

namespace {

void check_beta(double beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw DomainError("inverse temperature must be finite and >= 0, got " + std::to_string(beta));
  }
}

void check_enumerable(const IsingProblem& p) {
  if (p.size() > kMaxEnumerationSpins) {
    throw SizeLimitError("enumeration over " + std::to_string(p.size()) +
                         " spins exceeds the cap of " + std::to_string(kMaxEnumerationSpins));
  }
}

void check_matches(const IsingProblem& p, const SpinConfig& s) {
  if (s.size() != p.size()) {
    throw MalformedProblem("configuration has " + std::to_string(s.size()) +
                           " spins, problem has " + std::to_string(p.size()));
  }
}

}  // namespace

// SpinConfig ----------------------------------------------------------------

SpinConfig::SpinConfig(std::uint64_t bits, int spins) : bits_(bits), spins_(spins) {
  if (spins < 1 || spins > 62) throw DomainError("spin count out of range: " + std::to_string(spins));
  if ((bits >> spins) != 0) throw DomainError("configuration has bits above position n-1");
}

SpinConfig SpinConfig::from_spins(const std::vector<int>& spins) {
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < spins.size(); ++k) {
    if (spins[k] == 1) {
      bits |= std::uint64_t{1} << k;
    } else if (spins[k] != -1) {
      throw DomainError("spin values must be +1 or -1");
    }
  }
  return SpinConfig(bits, static_cast<int>(spins.size()));
}

SpinConfig SpinConfig::parse(const std::string& text) {
  std::vector<int> spins;
  for (std::size_t k = 0; k < text.size();) {
    // UTF-8 arrows are three bytes: U+2191 (up) and U+2193 (down).
    if (text.compare(k, 3, "\xE2\x86\x91") == 0) {
      spins.push_back(1);
      k += 3;
      continue;
    }
    if (text.compare(k, 3, "\xE2\x86\x93") == 0) {
      spins.push_back(-1);
      k += 3;
      continue;
    }
    const char c = text[k++];
    if (c == '+' || c == 'u' || c == 'U' || c == '1') {
      spins.push_back(1);
    } else if (c == '-' || c == 'd' || c == 'D' || c == '0') {
      spins.push_back(-1);
    } else {
      throw DomainError(std::string("invalid spin character '") + c + "'");
    }
  }
  return from_spins(spins);
}

int SpinConfig::spin(int site) const {
  if (site < 0 || site >= spins_) throw DomainError("site out of range");
  return ((bits_ >> site) & 1U) ? 1 : -1;
}

SpinConfig SpinConfig::flipped(int site) const {
  if (site < 0 || site >= spins_) throw DomainError("site out of range");
  return SpinConfig(bits_ ^ (std::uint64_t{1} << site), spins_);
}

SpinConfig SpinConfig::flipped_all() const {
  const std::uint64_t mask = (std::uint64_t{1} << spins_) - 1;
  return SpinConfig(bits_ ^ mask, spins_);
}

std::string SpinConfig::label() const {
  std::string out;
  for (int k = 0; k < spins_; ++k) out.push_back(((bits_ >> k) & 1U) ? '+' : '-');
  return out;
}

std::string SpinConfig::arrows() const {
  std::string out;
  for (int k = 0; k < spins_; ++k) out += ((bits_ >> k) & 1U) ? "\xE2\x86\x91" : "\xE2\x86\x93";
  return out;
}

// IsingProblem -------------------------------------------------------------

IsingProblem::IsingProblem(int spins, std::vector<Coupling> couplings, std::vector<double> fields)
    : spins_(spins), couplings_(std::move(couplings)), fields_(std::move(fields)) {
  if (spins < 1 || spins > 62) throw MalformedProblem("spin count must be in [1, 62]");
  if (static_cast<int>(fields_.size()) != spins) {
    throw MalformedProblem("expected " + std::to_string(spins) + " fields, got " +
                           std::to_string(fields_.size()));
  }
  for (double h : fields_) {
    if (!std::isfinite(h)) throw MalformedProblem("field values must be finite");
  }
  coupling_matrix_ = Eigen::MatrixXd::Zero(spins, spins);
  std::set<std::pair<int, int>> seen;
  for (const Coupling& c : couplings_) {
    if (c.i < 0 || c.i >= spins || c.j < 0 || c.j >= spins) {
      throw MalformedProblem("coupling (" + std::to_string(c.i) + ", " + std::to_string(c.j) +
                             ") has a site index out of range");
    }
    if (c.i >= c.j) throw MalformedProblem("couplings must satisfy i < j");
    if (!std::isfinite(c.value)) throw MalformedProblem("coupling values must be finite");
    if (!seen.emplace(c.i, c.j).second) {
      throw MalformedProblem("duplicate coupling (" + std::to_string(c.i) + ", " +
                             std::to_string(c.j) + ")");
    }
    coupling_matrix_(c.i, c.j) = c.value;
    coupling_matrix_(c.j, c.i) = c.value;
  }
}

bool IsingProblem::has_zero_fields() const {
  return std::all_of(fields_.begin(), fields_.end(), [](double h) { return h == 0.0; });
}

bool GroundSet::contains(const SpinConfig& s) const {
  return std::binary_search(configs.begin(), configs.end(), s);
}

// Energies -------------------------------------------------------------------

double energy(const IsingProblem& p, const SpinConfig& s) {
  check_matches(p, s);
  double e = 0.0;
  for (const Coupling& c : p.couplings()) e -= c.value * s.spin(c.i) * s.spin(c.j);
  for (int i = 0; i < p.size(); ++i) e -= p.fields()[i] * s.spin(i);
  return e;
}

double local_energy(const IsingProblem& p, const SpinConfig& s, int site) {
  check_matches(p, s);
  if (site < 0 || site >= p.size()) throw MalformedProblem("site " + std::to_string(site) + " out of range");
  const Eigen::MatrixXd& J = p.coupling_matrix();
  const int si = s.spin(site);
  double e = -p.fields()[site] * si;
  for (int j = 0; j < p.size(); ++j) {
    if (j != site) e -= J(site, j) * si * s.spin(j);
  }
  return e;
}

Eigen::VectorXd energy_spectrum(const IsingProblem& p) {
  check_enumerable(p);
  const auto dim = static_cast<Eigen::Index>(p.dimension());
  Eigen::VectorXd e(dim);
  for (Eigen::Index k = 0; k < dim; ++k) e(k) = energy(p, SpinConfig(static_cast<std::uint64_t>(k), p.size()));
  return e;
}

bool energies_equal(double e1, double e2, double reference) {
  return std::abs(e1 - e2) <= 1e-9 * std::max(1.0, std::abs(reference));
}

GroundSet enumerate_ground_states(const IsingProblem& p) {
  const Eigen::VectorXd e = energy_spectrum(p);
  GroundSet g;
  g.energy = e.minCoeff();
  for (Eigen::Index k = 0; k < e.size(); ++k) {
    if (energies_equal(e(k), g.energy, g.energy)) {
      g.configs.emplace_back(static_cast<std::uint64_t>(k), p.size());
    }
  }
  return g;
}

Eigen::VectorXd boltzmann_distribution(const IsingProblem& p, double beta) {
  check_beta(beta);
  const Eigen::VectorXd e = energy_spectrum(p);
  const double e_min = e.minCoeff();
  Eigen::VectorXd w = (-beta * (e.array() - e_min)).exp().matrix();
  return w / w.sum();
}

double thermal_expectation(const IsingProblem& p, double beta,
                           const std::function<double(const SpinConfig&)>& observable) {
  const Eigen::VectorXd prob = boltzmann_distribution(p, beta);
  double acc = 0.0;
  for (Eigen::Index k = 0; k < prob.size(); ++k) {
    acc += prob(k) * observable(SpinConfig(static_cast<std::uint64_t>(k), p.size()));
  }
  return acc;
}

QuantumState gibbs_state(const IsingProblem& p, double beta) {
  check_beta(beta);
  const Eigen::VectorXd e = energy_spectrum(p);
  const double e_min = e.minCoeff();
  Eigen::VectorXd a = (-0.5 * beta * (e.array() - e_min)).exp().matrix();
  a /= a.norm();
  return QuantumState(a.cast<std::complex<double>>());
}

std::vector<SpinConfig> five_spin_expected_ground_states() {
  std::vector<SpinConfig> out;
  for (const char* s : {"+++++", "+++--", "++---"}) {
    const SpinConfig c = SpinConfig::parse(s);
    out.push_back(c);
    out.push_back(c.flipped_all());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate_five_spin_fixture(const IsingProblem& p) {
  if (p.size() != 5) throw MalformedProblem("five-spin fixture must have 5 spins");
  if (!p.has_zero_fields()) throw MalformedProblem("five-spin fixture must have zero fields");
  for (const Coupling& c : p.couplings()) {
    if (c.value != 1.0 && c.value != -1.0) throw MalformedProblem("five-spin fixture couplings must be +-1");
  }
  const GroundSet g = enumerate_ground_states(p);
  if (g.configs != five_spin_expected_ground_states()) {
    throw MalformedProblem("five-spin fixture does not have the expected six ground states");
  }
}

}  // namespace fairanneal
