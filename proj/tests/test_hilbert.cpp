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

#include <algorithm>
#include <random>

#include "fairanneal/hilbert.hpp"
#include "fairanneal/ising.hpp"
#include "fairanneal/problem_io.hpp"
#include "test_support.hpp"

using namespace fairanneal;

namespace {

QuantumState random_state(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(Eigen::Index{1} << n);
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = {g(rng), g(rng)};
  return QuantumState(v / v.norm());
}

}  // namespace

TEST(SigmaX, SingleQubitMatrix) {
  const DenseOperator x = sigma_x(1, 0);
  Eigen::Matrix2cd expected;
  expected << 0, 1, 1, 0;
  EXPECT_EQ(x.matrix(), expected);
  EXPECT_TRUE(x.is_hermitian());
}

TEST(SigmaX, FlipsTheSiteBit) {
  const DenseOperator x = sigma_x(2, 1);
  // 00 <-> 10 and 01 <-> 11, written as basis indices with site 0 least significant.
  for (auto [from, to] : {std::pair{0, 2}, {2, 0}, {1, 3}, {3, 1}}) {
    EXPECT_EQ(x.matrix()(to, from), 1.0);
    EXPECT_EQ(x.matrix().col(from).cwiseAbs().sum(), 1.0);
  }
  EXPECT_THROW(sigma_x(2, 2), DomainError);
}

TEST(SigmaX, InvolutionAndCommutation) {
  std::mt19937_64 rng(1);
  const QuantumState psi = random_state(rng, 4);
  for (int i = 0; i < 4; ++i) {
    const DenseOperator x = sigma_x(4, i);
    const Eigen::VectorXcd twice = x.matrix() * (x.matrix() * psi.amplitudes());
    EXPECT_EQ(twice, psi.amplitudes());
    for (int j = 0; j < 4; ++j) {
      const DenseOperator y = sigma_x(4, j);
      EXPECT_EQ((x * y).matrix(), (y * x).matrix());
    }
  }
}

TEST(SigmaX, MatrixFreePathAgreesWithDense) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 7; ++n) {
    const QuantumState psi = random_state(rng, n);
    Eigen::VectorXcd out;
    for (int i = 0; i < n; ++i) {
      apply_sigma_x(i, psi.amplitudes(), out);
      EXPECT_LE((out - apply(sigma_x(n, i), psi)).cwiseAbs().maxCoeff(), 1e-12);
    }
    apply_transverse_field(psi.amplitudes(), out);
    EXPECT_LE((out - apply(transverse_field(n), psi)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(DiagFromClassical, SingleSpinEnergy) {
  const IsingProblem p(1, {}, {1.0});
  const DiagonalOperator d = diag_from_classical(1, [&](std::uint64_t k) { return energy(p, SpinConfig(k, 1)); });
  EXPECT_EQ(d(0), 1.0);   // down
  EXPECT_EQ(d(1), -1.0);  // up
}

TEST(DiagFromClassical, ConstantIsScaledIdentity) {
  const DiagonalOperator d = diag_from_classical(3, [](std::uint64_t) { return 2.5; });
  EXPECT_EQ(d.to_dense().matrix(), (2.5 * DenseOperator::identity(3)).matrix());
}

TEST(DiagFromClassical, ReproducesClassicalSpectrum) {
  std::mt19937_64 rng(3);
  std::vector<IsingProblem> problems{load_five_spin_fixture()};
  for (int n = 1; n <= 10; ++n) problems.push_back(fairanneal::testing::random_problem(rng, n));
  for (const IsingProblem& p : problems) {
    const int n = p.size();
    const DiagonalOperator h0 = diag_from_classical(n, [&](std::uint64_t k) { return energy(p, SpinConfig(k, n)); });
    std::vector<double> assembled(h0.diagonal().begin(), h0.diagonal().end());
    std::vector<double> oracle;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
      oracle.push_back(static_cast<double>(fairanneal::testing::brute_energy(p, k)));
    }
    std::sort(assembled.begin(), assembled.end());
    std::sort(oracle.begin(), oracle.end());
    ASSERT_EQ(assembled.size(), oracle.size());
    for (std::size_t k = 0; k < oracle.size(); ++k) EXPECT_NEAR(assembled[k], oracle[k], 1e-12);
  }
}

TEST(Expectation, IdentityAndSigmaZ) {
  std::mt19937_64 rng(4);
  const QuantumState psi = random_state(rng, 3);
  EXPECT_NEAR(expectation(DenseOperator::identity(3), psi), 1.0, 1e-14);
  EXPECT_NEAR(expectation(sigma_z(5, 0), QuantumState::uniform(5)), 0.0, 1e-15);
  EXPECT_NEAR(expectation(sigma_z(2, 1), QuantumState::basis(2, 0b10)), 1.0, 0.0);
}

TEST(Expectation, GibbsStateReproducesThermalAverage) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const IsingProblem p = fairanneal::testing::random_problem(rng, 2 + trial % 5);
    const int n = p.size();
    const double beta = 0.3 + 0.4 * trial;
    const DenseOperator h0 =
        diag_from_classical(n, [&](std::uint64_t k) { return energy(p, SpinConfig(k, n)); }).to_dense();
    const double quantum = expectation(h0, gibbs_state(p, beta));
    const double classical = thermal_expectation(p, beta, [&](const SpinConfig& s) { return energy(p, s); });
    EXPECT_NEAR(quantum, classical, 1e-10);
  }
}

TEST(Operators, HermitianFlagIsEnforced) {
  Eigen::Matrix2cd m;
  m << 0, 1, 2, 0;
  EXPECT_THROW(DenseOperator(m, true), DomainError);
  EXPECT_NO_THROW(DenseOperator(m, false));
  EXPECT_FALSE(DenseOperator(m).is_real_symmetric());
  m << 0, std::complex<double>(0, 1), std::complex<double>(0, -1), 0;  // sigma^y
  const DenseOperator y(m, true);
  EXPECT_FALSE(y.is_real_symmetric());
  EXPECT_THROW(y.real_symmetric_matrix(), DomainError);
}

TEST(Operators, AlgebraAndDimensionChecks) {
  const DenseOperator a = sigma_x(2, 0) + sigma_z(2, 1);
  EXPECT_TRUE(a.is_hermitian());
  EXPECT_TRUE(a.is_real_symmetric());
  EXPECT_EQ((a - a).matrix().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_THROW(sigma_x(2, 0) + sigma_x(3, 0), DimensionMismatch);
  EXPECT_THROW(apply(sigma_x(3, 0), QuantumState::uniform(2)), DimensionMismatch);
}

TEST(QuantumState, Invariants) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(4);
  EXPECT_THROW(QuantumState{v}, DomainError);
  EXPECT_NO_THROW(QuantumState(v / 2.0));
  EXPECT_NO_THROW(QuantumState(v / 2.0 * (1.0 + 1e-6), 1e-5));
  EXPECT_THROW(QuantumState(Eigen::VectorXcd::Ones(3) / std::sqrt(3.0)), DimensionMismatch);
  EXPECT_EQ(QuantumState::uniform(4).qubits(), 4);
  EXPECT_NEAR(QuantumState::uniform(3).fidelity(QuantumState::basis(3, 5)), 1.0 / 8.0, 1e-15);
}

TEST(DenseCap, RefusesOversizedOperators) {
  EXPECT_THROW(check_dense_qubits(kDefaultMaxDenseQubits + 1), SizeLimitError);
  EXPECT_NO_THROW(check_dense_qubits(kDefaultMaxDenseQubits));
  EXPECT_NO_THROW(check_dense_qubits(16, 16));
  EXPECT_THROW(sigma_x(kDefaultMaxDenseQubits + 1, 0), SizeLimitError);
}

// Same code path instantiated on an extended-precision scalar.
TEST(Templates, LongDoubleInstantiation) {
  using StateL = BasicQuantumState<long double>;
  const StateL psi = StateL::uniform(3);
  EXPECT_NEAR(static_cast<double>(expectation(sigma_x<long double>(3, 1), psi)), 1.0, 1e-15);
}
