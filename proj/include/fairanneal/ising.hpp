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

// Classical Ising problems and the exhaustive-enumeration oracle.
//
//   H_0(sigma) = - sum_{i<j} J_ij sigma_i sigma_j - sum_i h_i sigma_i

#pragma once

#include <Eigen/Dense>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fairanneal/hilbert.hpp"

namespace fairanneal {

/// Largest spin count accepted by the enumeration routines.
inline constexpr int kMaxEnumerationSpins = 24;

/// One classical configuration. Bit k set means sigma_k = +1.
class SpinConfig {
 public:
  SpinConfig(std::uint64_t bits, int spins);

  /// Builds a configuration from a list of +1/-1 values, site 0 first.
  static SpinConfig from_spins(const std::vector<int>& spins);
  /// Parses "uudd.." / "++--.." / arrow strings, site 0 first.
  static SpinConfig parse(const std::string& text);

  std::uint64_t bits() const { return bits_; }
  int size() const { return spins_; }
  int spin(int site) const;

  SpinConfig flipped(int site) const;
  SpinConfig flipped_all() const;

  /// "+++--" style label, site 0 first.
  std::string label() const;
  /// Arrow label, site 0 first.
  std::string arrows() const;

  friend bool operator==(const SpinConfig&, const SpinConfig&) = default;
  friend auto operator<=>(const SpinConfig&, const SpinConfig&) = default;

 private:
  std::uint64_t bits_;
  int spins_;
};

struct Coupling {
  int i = 0;
  int j = 0;
  double value = 0.0;
};

/// Couplings J_ij (i < j) and fields h_i on n spins. Validated at construction.
class IsingProblem {
 public:
  IsingProblem(int spins, std::vector<Coupling> couplings, std::vector<double> fields);

  int size() const { return spins_; }
  std::size_t dimension() const { return std::size_t{1} << spins_; }
  const std::vector<Coupling>& couplings() const { return couplings_; }
  const std::vector<double>& fields() const { return fields_; }
  /// Symmetric J with zero diagonal.
  const Eigen::MatrixXd& coupling_matrix() const { return coupling_matrix_; }
  bool has_zero_fields() const;

 private:
  int spins_;
  std::vector<Coupling> couplings_;
  std::vector<double> fields_;
  Eigen::MatrixXd coupling_matrix_;
};

struct GroundSet {
  double energy = 0.0;
  std::vector<SpinConfig> configs;  // ascending by bit pattern

  bool contains(const SpinConfig& s) const;
};

/// H_0(sigma). Throws MalformedProblem if `s` does not match the problem size.
double energy(const IsingProblem& p, const SpinConfig& s);

/// H_i(sigma) = -sum_j J_ij sigma_i sigma_j - h_i sigma_i. Flipping spin i changes H_0 by -2 H_i.
double local_energy(const IsingProblem& p, const SpinConfig& s, int site);

/// All 2^n classical energies, indexed by basis index.
Eigen::VectorXd energy_spectrum(const IsingProblem& p);

/// Degeneracy test used throughout: |e1 - e2| <= 1e-9 * max(1, |reference|).
bool energies_equal(double e1, double e2, double reference);

GroundSet enumerate_ground_states(const IsingProblem& p);

/// e^{-beta H_0} / Z over all basis states, evaluated with the minimum energy subtracted.
Eigen::VectorXd boltzmann_distribution(const IsingProblem& p, double beta);

double thermal_expectation(const IsingProblem& p, double beta,
                           const std::function<double(const SpinConfig&)>& observable);

/// Amplitudes e^{-beta H_0 / 2} / sqrt(Z): the state whose Born probabilities are Boltzmann.
QuantumState gibbs_state(const IsingProblem& p, double beta);

/// Throws MalformedProblem unless `p` is a 5-spin, zero-field, +-1 coupling problem whose
/// ground set is exactly {+++++, +++--, ++---} and their global flips.
void validate_five_spin_fixture(const IsingProblem& p);

/// The six ground states the five-spin fixture must have.
std::vector<SpinConfig> five_spin_expected_ground_states();

}  // namespace fairanneal
