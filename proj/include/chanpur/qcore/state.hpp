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

#ifndef CHANPUR_QCORE_STATE_HPP
#define CHANPUR_QCORE_STATE_HPP

#include <cstddef>
#include <span>

#include "chanpur/qcore/linalg.hpp"

namespace chanpur::qcore {

/// Unit vector in C^dim.
class PureState {
 public:
  /// Throws ValidationError unless ||amplitudes|| = 1 within 1e-12.
  explicit PureState(ComplexVector amplitudes);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

  /// |psi><psi|
  ComplexMatrix projector() const;
  Complex overlap(const PureState& other) const;

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  /// Validates the matrix against `tol` and throws ValidationError (or
  /// DimensionError for non-square input) when it is not a state.
  explicit DensityMatrix(ComplexMatrix matrix, const Tolerances& tol = {});
  explicit DensityMatrix(const PureState& psi);

  /// Repairs floating-point drift: takes the Hermitian part, clamps
  /// eigenvalues in [-tol.psd, 0) to zero and rescales to unit trace.
  /// Larger negative eigenvalues or a non-positive trace are rejected.
  static DensityMatrix normalized(const ComplexMatrix& matrix, const Tolerances& tol = {});

  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  double expectation(const ComplexMatrix& observable) const;
  double purity() const;

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix matrix, Unchecked) : matrix_(std::move(matrix)) {}

  ComplexMatrix matrix_;
};

/// I / dim.
DensityMatrix maximally_mixed(std::size_t dim);

/// (|00> + |11>) / sqrt(2).
PureState bell_state();

/// |index> in C^dim.
PureState basis_state(std::size_t dim, std::size_t index);

/// Reduced operator on the subsystems listed in `keep` (any order, kept in
/// ascending subsystem order). Works on arbitrary, possibly unnormalised
/// operators.
ComplexMatrix partial_trace(const ComplexMatrix& op,
                            std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep);

DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep);

}  // namespace chanpur::qcore

#endif  // CHANPUR_QCORE_STATE_HPP
