// Copyright 2026 The chanpur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chanpur/qcore/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "chanpur/error.hpp"

namespace chanpur::qcore {

ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                 static_cast<Eigen::Index>(dim));
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix tensor_product(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) {
    return identity(1);
  }
  ComplexMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    out = tensor_product(out, factors[k]);
  }
  return out;
}

ComplexMatrix swap_operator(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      s(b * d + a, a * d + b) = 1.0;
    }
  }
  return s;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

bool is_square(const ComplexMatrix& m) { return m.rows() == m.cols() && m.rows() > 0; }

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return is_square(m) && max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return is_square(m) && max_abs(m.adjoint() * m - identity(m.rows())) <= tol;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  RealVector roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return 0.5 * hermitian_eigenvalues(a - b).cwiseAbs().sum();
}

ComplexVector vec(const ComplexMatrix& m) {
  ComplexVector v(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      v(i * m.cols() + j) = m(i, j);
    }
  }
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, std::size_t rows, std::size_t cols) {
  if (static_cast<std::size_t>(v.size()) != rows * cols) {
    throw DimensionError("unvec: length does not match rows * cols");
  }
  ComplexMatrix m(rows, cols);
  const auto c = static_cast<Eigen::Index>(cols);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < c; ++j) {
      m(i, j) = v(i * c + j);
    }
  }
  return m;
}

std::optional<int> qubit_count(std::size_t dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    return std::nullopt;
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) {
    ++n;
  }
  return n;
}

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) {
    p *= d;
  }
  return p;
}

}  // namespace chanpur::qcore
