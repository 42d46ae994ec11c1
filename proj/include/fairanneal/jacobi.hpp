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

// Cyclic Jacobi diagonalization of dense real symmetric matrices.
//
// Off-diagonal entries are annihilated until every |a_pq| is negligible
// relative to sqrt(|a_pp a_qq|). That test keeps tiny eigenvalues of graded
// positive semidefinite matrices accurate in the relative sense, which a
// plain Frobenius-norm stopping rule does not.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "fairanneal/errors.hpp"

namespace fairanneal {

template <typename Scalar>
struct SymmetricEigen {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvalues;                // ascending
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> eigenvectors;  // columns
  int sweeps = 0;
};

template <typename Scalar>
struct JacobiOptions {
  /// Relative threshold on |a_pq| / sqrt(|a_pp a_qq|).
  Scalar relative_tolerance = std::numeric_limits<Scalar>::epsilon();
  /// Required ratio ||offdiag||_F / ||A||_F at exit.
  Scalar frobenius_tolerance = Scalar(1e-12);
  Scalar symmetry_tolerance = Scalar(1e-12);
  int max_sweeps = 100;
};

template <typename Derived>
SymmetricEigen<typename Derived::Scalar> jacobi_eigen(
    const Eigen::MatrixBase<Derived>& input,
    const JacobiOptions<typename Derived::Scalar>& options = {}) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using std::abs;
  using std::sqrt;

  if (input.rows() != input.cols()) throw DomainError("jacobi_eigen: matrix is not square");
  Matrix a = input;
  const Eigen::Index dim = a.rows();
  const Scalar scale = std::max(a.cwiseAbs().maxCoeff(), Scalar(1));
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > options.symmetry_tolerance * scale) {
    throw DomainError("jacobi_eigen: matrix is not symmetric");
  }
  a = (a + a.transpose()) / Scalar(2);
  const Scalar frobenius = a.norm();

  Matrix v = Matrix::Identity(dim, dim);
  const Scalar floor = std::numeric_limits<Scalar>::min();
  int sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < dim; ++p) {
      for (Eigen::Index q = p + 1; q < dim; ++q) {
        const Scalar apq = a(p, q);
        const Scalar app = a(p, p);
        const Scalar aqq = a(q, q);
        if (abs(apq) <= options.relative_tolerance * sqrt(abs(app) * abs(aqq)) || abs(apq) <= floor) {
          a(p, q) = a(q, p) = Scalar(0);
          continue;
        }
        rotated = true;
        const Scalar theta = (aqq - app) / (Scalar(2) * apq);
        Scalar t;
        if (abs(theta) > Scalar(1e150)) {
          t = Scalar(1) / (Scalar(2) * theta);
        } else {
          t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) / (abs(theta) + sqrt(Scalar(1) + theta * theta));
        }
        const Scalar c = Scalar(1) / sqrt(Scalar(1) + t * t);
        const Scalar s = t * c;
        for (Eigen::Index k = 0; k < dim; ++k) {
          if (k == p || k == q) continue;
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = Scalar(0);
        for (Eigen::Index k = 0; k < dim; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    if (!rotated) break;
  }
  const Scalar off = (a - Matrix(a.diagonal().asDiagonal())).norm();
  if (sweep == options.max_sweeps || off > options.frobenius_tolerance * frobenius) {
    throw ConvergenceError("jacobi_eigen: no convergence after " + std::to_string(sweep) + " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(dim));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

  SymmetricEigen<Scalar> out;
  out.eigenvalues.resize(dim);
  out.eigenvectors.resize(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    out.eigenvalues(k) = a(order[k], order[k]);
    out.eigenvectors.col(k) = v.col(order[k]);
  }
  out.sweeps = sweep + 1;
  return out;
}

}  // namespace fairanneal
