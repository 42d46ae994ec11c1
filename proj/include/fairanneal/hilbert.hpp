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

// Dense states and operators on the 2^n computational-basis Hilbert space.
//
// Basis index k encodes a spin configuration with site 0 as the least
// significant bit; bit value 1 means spin up (sigma^z = +1).

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "fairanneal/errors.hpp"

namespace fairanneal {

/// Largest qubit count for which dense 2^n x 2^n operators are built.
inline constexpr int kDefaultMaxDenseQubits = 14;

inline std::size_t basis_dimension(int qubits) { return std::size_t{1} << qubits; }

inline void check_dense_qubits(int qubits, int cap = kDefaultMaxDenseQubits) {
  if (qubits < 1) throw DomainError("qubit count must be positive");
  if (qubits > cap) {
    throw SizeLimitError("dense operator on " + std::to_string(qubits) +
                         " qubits exceeds the cap of " + std::to_string(cap));
  }
}

inline void check_site(int qubits, int site) {
  if (site < 0 || site >= qubits) {
    throw DomainError("site " + std::to_string(site) + " out of range for " +
                      std::to_string(qubits) + " qubits");
  }
}

/// Qubit count of a vector/matrix dimension; throws unless it is a power of two.
inline int qubits_for_dimension(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw DimensionMismatch("dimension " + std::to_string(dim) + " is not a power of two >= 2");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Normalized amplitude vector over the computational basis.
template <typename Scalar>
class BasicQuantumState {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = ComplexVector<Scalar>;

  static constexpr Scalar kDefaultNormTolerance = Scalar(1e-9);

  explicit BasicQuantumState(Vector amplitudes, Scalar norm_tolerance = kDefaultNormTolerance)
      : amplitudes_(std::move(amplitudes)), qubits_(qubits_for_dimension(amplitudes_.size())) {
    const Scalar norm = amplitudes_.norm();
    if (!(std::abs(norm - Scalar(1)) <= norm_tolerance)) {
      throw DomainError("state norm " + std::to_string(static_cast<double>(norm)) +
                        " deviates from 1 beyond tolerance");
    }
  }

  static BasicQuantumState uniform(int qubits) {
    const auto dim = static_cast<Eigen::Index>(basis_dimension(qubits));
    return BasicQuantumState(Vector::Constant(dim, Complex(Scalar(1) / std::sqrt(Scalar(dim)))));
  }

  static BasicQuantumState basis(int qubits, std::uint64_t index) {
    const auto dim = static_cast<Eigen::Index>(basis_dimension(qubits));
    if (index >= static_cast<std::uint64_t>(dim)) throw DomainError("basis index out of range");
    Vector v = Vector::Zero(dim);
    v(static_cast<Eigen::Index>(index)) = Complex(1);
    return BasicQuantumState(std::move(v));
  }

  int qubits() const { return qubits_; }
  Eigen::Index dimension() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator()(Eigen::Index k) const { return amplitudes_(k); }
  Scalar norm() const { return amplitudes_.norm(); }

  /// |<this|other>|^2, insensitive to global phase.
  Scalar fidelity(const BasicQuantumState& other) const {
    if (other.dimension() != dimension()) throw DimensionMismatch("fidelity: dimension mismatch");
    return std::norm(amplitudes_.dot(other.amplitudes_));
  }

 private:
  Vector amplitudes_;
  int qubits_;
};

/// Dense 2^n x 2^n operator with an optional hermiticity guarantee.
template <typename Scalar>
class BasicDenseOperator {
 public:
  using Complex = std::complex<Scalar>;
  using Matrix = ComplexMatrix<Scalar>;

  static constexpr Scalar kHermitianTolerance = Scalar(1e-12);

  explicit BasicDenseOperator(Matrix matrix, bool hermitian = false)
      : matrix_(std::move(matrix)), hermitian_(hermitian) {
    if (matrix_.rows() != matrix_.cols()) throw DimensionMismatch("operator matrix is not square");
    qubits_ = qubits_for_dimension(matrix_.rows());
    if (hermitian_ && hermiticity_defect() > kHermitianTolerance) {
      throw DomainError("operator flagged hermitian but ||M - M^dagger||_max = " +
                        std::to_string(static_cast<double>(hermiticity_defect())));
    }
  }

  static BasicDenseOperator identity(int qubits) {
    const auto dim = static_cast<Eigen::Index>(basis_dimension(qubits));
    return BasicDenseOperator(Matrix::Identity(dim, dim), true);
  }

  int qubits() const { return qubits_; }
  Eigen::Index dimension() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  bool is_hermitian() const { return hermitian_; }

  Scalar hermiticity_defect() const {
    return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  }

  /// True when every entry is real and the matrix is symmetric within `tol`.
  bool is_real_symmetric(Scalar tol = kHermitianTolerance) const {
    return matrix_.imag().cwiseAbs().maxCoeff() == Scalar(0) &&
           (matrix_.real() - matrix_.real().transpose()).cwiseAbs().maxCoeff() <= tol;
  }

  /// Real part of a real symmetric operator; throws otherwise.
  RealMatrix<Scalar> real_symmetric_matrix() const {
    if (!is_real_symmetric()) throw DomainError("operator is not real symmetric");
    return matrix_.real();
  }

  friend BasicDenseOperator operator+(const BasicDenseOperator& a, const BasicDenseOperator& b) {
    check_same(a, b);
    return BasicDenseOperator(a.matrix_ + b.matrix_, a.hermitian_ && b.hermitian_);
  }
  friend BasicDenseOperator operator-(const BasicDenseOperator& a, const BasicDenseOperator& b) {
    check_same(a, b);
    return BasicDenseOperator(a.matrix_ - b.matrix_, a.hermitian_ && b.hermitian_);
  }
  friend BasicDenseOperator operator*(Scalar c, const BasicDenseOperator& a) {
    return BasicDenseOperator(c * a.matrix_, a.hermitian_);
  }
  friend BasicDenseOperator operator*(const BasicDenseOperator& a, const BasicDenseOperator& b) {
    check_same(a, b);
    return BasicDenseOperator(a.matrix_ * b.matrix_, false);
  }

 private:
  static void check_same(const BasicDenseOperator& a, const BasicDenseOperator& b) {
    if (a.dimension() != b.dimension()) throw DimensionMismatch("operator dimension mismatch");
  }

  Matrix matrix_;
  bool hermitian_;
  int qubits_ = 0;
};

/// Real diagonal operator, stored as its diagonal.
template <typename Scalar>
class BasicDiagonalOperator {
 public:
  using Vector = RealVector<Scalar>;

  explicit BasicDiagonalOperator(Vector diagonal)
      : diagonal_(std::move(diagonal)), qubits_(qubits_for_dimension(diagonal_.size())) {}

  int qubits() const { return qubits_; }
  Eigen::Index dimension() const { return diagonal_.size(); }
  const Vector& diagonal() const { return diagonal_; }
  Scalar operator()(Eigen::Index k) const { return diagonal_(k); }

  BasicDenseOperator<Scalar> to_dense() const {
    return BasicDenseOperator<Scalar>(
        diagonal_.template cast<std::complex<Scalar>>().asDiagonal().toDenseMatrix(), true);
  }

 private:
  Vector diagonal_;
  int qubits_;
};

using QuantumState = BasicQuantumState<double>;
using DenseOperator = BasicDenseOperator<double>;
using DiagonalOperator = BasicDiagonalOperator<double>;

// Pauli operators -----------------------------------------------------------

/// sigma^x on `site`: the permutation flipping bit `site` of the basis index.
template <typename Scalar = double>
BasicDenseOperator<Scalar> sigma_x(int qubits, int site) {
  check_dense_qubits(qubits);
  check_site(qubits, site);
  const auto dim = static_cast<Eigen::Index>(basis_dimension(qubits));
  const Eigen::Index mask = Eigen::Index{1} << site;
  ComplexMatrix<Scalar> m = ComplexMatrix<Scalar>::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) m(k ^ mask, k) = Scalar(1);
  return BasicDenseOperator<Scalar>(std::move(m), true);
}

template <typename Scalar = double>
BasicDenseOperator<Scalar> sigma_z(int qubits, int site) {
  check_dense_qubits(qubits);
  check_site(qubits, site);
  const auto dim = static_cast<Eigen::Index>(basis_dimension(qubits));
  const Eigen::Index mask = Eigen::Index{1} << site;
  RealVector<Scalar> d(dim);
  for (Eigen::Index k = 0; k < dim; ++k) d(k) = (k & mask) ? Scalar(1) : Scalar(-1);
  return BasicDiagonalOperator<Scalar>(std::move(d)).to_dense();
}

/// Sum_i sigma^x_i as a dense matrix.
template <typename Scalar = double>
BasicDenseOperator<Scalar> transverse_field(int qubits) {
  check_dense_qubits(qubits);
  const auto dim = static_cast<Eigen::Index>(basis_dimension(qubits));
  ComplexMatrix<Scalar> m = ComplexMatrix<Scalar>::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    for (int i = 0; i < qubits; ++i) m(k ^ (Eigen::Index{1} << i), k) += Scalar(1);
  }
  return BasicDenseOperator<Scalar>(std::move(m), true);
}

// Matrix-free sigma^x ------------------------------------------------------

/// out = sigma^x_site * in, as a bit-flip permutation.
template <typename Derived, typename OutDerived>
void apply_sigma_x(int site, const Eigen::MatrixBase<Derived>& in, Eigen::MatrixBase<OutDerived>& out) {
  const Eigen::Index mask = Eigen::Index{1} << site;
  const Eigen::Index dim = in.size();
  out.derived().resize(dim);
  for (Eigen::Index k = 0; k < dim; ++k) out(k) = in(k ^ mask);
}

/// out = (Sum_i sigma^x_i) * in without forming the matrix.
template <typename Derived, typename OutDerived>
void apply_transverse_field(const Eigen::MatrixBase<Derived>& in, Eigen::MatrixBase<OutDerived>& out) {
  const Eigen::Index dim = in.size();
  const int qubits = qubits_for_dimension(dim);
  out.derived().resize(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    typename Derived::Scalar acc(0);
    for (int i = 0; i < qubits; ++i) acc += in(k ^ (Eigen::Index{1} << i));
    out(k) = acc;
  }
}

// Classical functions as diagonal operators --------------------------------

/// diag[k] = f(k) where k is the basis index (site 0 = least significant bit).
template <typename Scalar = double, typename Fn>
BasicDiagonalOperator<Scalar> diag_from_classical(int qubits, Fn&& f) {
  if (qubits < 1 || qubits > 30) throw DomainError("qubit count out of range");
  const auto dim = static_cast<Eigen::Index>(basis_dimension(qubits));
  RealVector<Scalar> d(dim);
  for (Eigen::Index k = 0; k < dim; ++k) d(k) = static_cast<Scalar>(f(static_cast<std::uint64_t>(k)));
  return BasicDiagonalOperator<Scalar>(std::move(d));
}

// Operator/state algebra ---------------------------------------------------

/// op * state. The result is generally not normalized, so it is returned as a raw vector.
template <typename Scalar>
ComplexVector<Scalar> apply(const BasicDenseOperator<Scalar>& op, const BasicQuantumState<Scalar>& state) {
  if (op.dimension() != state.dimension()) throw DimensionMismatch("apply: dimension mismatch");
  return op.matrix() * state.amplitudes();
}

template <typename Scalar>
ComplexVector<Scalar> apply(const BasicDiagonalOperator<Scalar>& op, const BasicQuantumState<Scalar>& state) {
  if (op.dimension() != state.dimension()) throw DimensionMismatch("apply: dimension mismatch");
  return op.diagonal().template cast<std::complex<Scalar>>().cwiseProduct(state.amplitudes());
}

/// <state|op|state>. Hermitian operators must give an imaginary residue below 1e-10.
template <typename Scalar>
Scalar expectation(const BasicDenseOperator<Scalar>& op, const BasicQuantumState<Scalar>& state) {
  const std::complex<Scalar> value = state.amplitudes().dot(apply(op, state));
  if (op.is_hermitian() && std::abs(value.imag()) > Scalar(1e-10)) {
    throw DomainError("hermitian expectation has imaginary residue " +
                      std::to_string(static_cast<double>(value.imag())));
  }
  return value.real();
}

template <typename Scalar>
Scalar expectation(const BasicDiagonalOperator<Scalar>& op, const BasicQuantumState<Scalar>& state) {
  if (op.dimension() != state.dimension()) throw DimensionMismatch("expectation: dimension mismatch");
  return (op.diagonal().array() * state.amplitudes().cwiseAbs2().array()).sum();
}

}  // namespace fairanneal
