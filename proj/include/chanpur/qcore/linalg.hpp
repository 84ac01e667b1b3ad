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

#ifndef CHANPUR_QCORE_LINALG_HPP
#define CHANPUR_QCORE_LINALG_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>

#include <Eigen/Dense>

namespace chanpur::qcore {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Numerical tolerances shared by every module. The defaults are the
/// library-wide contract; callers may tighten or loosen them per call.
struct Tolerances {
  double hermitian = 1e-10;
  double trace = 1e-10;
  /// Eigenvalues in [-psd, 0) are treated as rounding noise.
  double psd = 1e-9;
};

ComplexMatrix identity(std::size_t dim);

/// Kronecker product. The left factor indexes the most significant digits,
/// matching the |q0 q1 ...> ordering used throughout the library.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor_product(std::span<const ComplexMatrix> factors);

/// SWAP on C^dim (x) C^dim.
ComplexMatrix swap_operator(std::size_t dim);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_square(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);

/// Eigenvalues of the Hermitian part of `m`, ascending.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// Square root of a PSD matrix; negative eigenvalues are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Trace norm distance 0.5 * ||a - b||_1 of two Hermitian matrices.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Row-major vectorisation: vec(m)[i * cols + j] = m(i, j). With this
/// convention vec(A X B) = (A (x) B^T) vec(X).
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v, std::size_t rows, std::size_t cols);

/// Number of qubits n if dim == 2^n (n >= 1), nullopt otherwise.
std::optional<int> qubit_count(std::size_t dim);

/// Product of a list of subsystem dimensions.
std::size_t product(std::span<const std::size_t> dims);

}  // namespace chanpur::qcore

#endif  // CHANPUR_QCORE_LINALG_HPP
