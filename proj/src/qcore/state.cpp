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

#include "chanpur/qcore/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "chanpur/error.hpp"

namespace chanpur::qcore {

namespace {

void check_state(const ComplexMatrix& m, const Tolerances& tol) {
  if (!is_square(m)) {
    throw DimensionError("density matrix must be square and non-empty");
  }
  const double herm = max_abs(m - m.adjoint());
  if (herm > tol.hermitian) {
    std::ostringstream os;
    os << "density matrix is not Hermitian (max deviation " << herm << ")";
    throw ValidationError(os.str());
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > tol.trace) {
    std::ostringstream os;
    os << "density matrix trace is " << tr.real() << " (expected 1)";
    throw ValidationError(os.str());
  }
  const double min_eig = hermitian_eigenvalues(m).minCoeff();
  if (min_eig < -tol.psd) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << min_eig;
    throw ValidationError(os.str());
  }
}

// Splits every full index into (kept index, traced index) digit groups.
struct IndexSplit {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> traced;
  std::size_t kept_dim = 1;
};

IndexSplit split_indices(std::span<const std::size_t> dims, std::span<const std::size_t> keep) {
  const std::size_t n = dims.size();
  std::vector<bool> is_kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n) {
      throw DimensionError("partial_trace: subsystem index out of range");
    }
    is_kept[k] = true;
  }
  IndexSplit split;
  const std::size_t total = product(dims);
  split.kept.resize(total);
  split.traced.resize(total);
  for (std::size_t s = 0; s < n; ++s) {
    if (is_kept[s]) {
      split.kept_dim *= dims[s];
    }
  }
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    std::size_t kept = 0;
    std::size_t traced = 0;
    std::size_t kept_scale = 1;
    std::size_t traced_scale = 1;
    for (std::size_t s = n; s-- > 0;) {
      const std::size_t digit = rest % dims[s];
      rest /= dims[s];
      if (is_kept[s]) {
        kept += digit * kept_scale;
        kept_scale *= dims[s];
      } else {
        traced += digit * traced_scale;
        traced_scale *= dims[s];
      }
    }
    split.kept[idx] = kept;
    split.traced[idx] = traced;
  }
  return split;
}

}  // namespace

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) {
    throw DimensionError("pure state needs at least one amplitude");
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "pure state is not normalised (norm " << norm << ")";
    throw ValidationError(os.str());
  }
}

ComplexMatrix PureState::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

Complex PureState::overlap(const PureState& other) const {
  if (other.dim() != dim()) {
    throw DimensionError("overlap: dimension mismatch");
  }
  return amplitudes_.dot(other.amplitudes_);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, const Tolerances& tol)
    : matrix_(std::move(matrix)) {
  check_state(matrix_, tol);
}

DensityMatrix::DensityMatrix(const PureState& psi) : matrix_(psi.projector()) {}

DensityMatrix DensityMatrix::normalized(const ComplexMatrix& matrix, const Tolerances& tol) {
  if (!is_square(matrix)) {
    throw DimensionError("density matrix must be square and non-empty");
  }
  const double herm = max_abs(matrix - matrix.adjoint());
  if (herm > tol.hermitian * std::max(1.0, max_abs(matrix))) {
    throw ValidationError("cannot normalise a non-Hermitian operator");
  }
  const ComplexMatrix h = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  RealVector evals = solver.eigenvalues();
  const double tr = evals.sum();
  if (!(tr > 0.0)) {
    throw ValidationError("cannot normalise an operator with non-positive trace");
  }
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) < -tol.psd * tr) {
      std::ostringstream os;
      os << "operator has negative eigenvalue " << evals(i) / tr << " after normalisation";
      throw ValidationError(os.str());
    }
    evals(i) = std::max(evals(i), 0.0);
  }
  evals /= evals.sum();
  ComplexMatrix out = solver.eigenvectors() * evals.asDiagonal() * solver.eigenvectors().adjoint();
  out = 0.5 * (out + out.adjoint());
  return DensityMatrix(std::move(out), Unchecked{});
}

double DensityMatrix::expectation(const ComplexMatrix& observable) const {
  if (observable.rows() != matrix_.rows() || observable.cols() != matrix_.cols()) {
    throw DimensionError("expectation: observable dimension mismatch");
  }
  return (matrix_ * observable).trace().real();
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

DensityMatrix maximally_mixed(std::size_t dim) {
  if (dim < 2) {
    throw ValidationError("maximally_mixed: dim must be >= 2");
  }
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

PureState bell_state() {
  ComplexVector amps = ComplexVector::Zero(4);
  amps(0) = amps(3) = 1.0 / std::sqrt(2.0);
  return PureState(std::move(amps));
}

PureState basis_state(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw DimensionError("basis_state: index out of range");
  }
  ComplexVector amps = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  amps(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(amps));
}

ComplexMatrix partial_trace(const ComplexMatrix& op,
                            std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep) {
  if (!is_square(op) || product(subsystem_dims) != static_cast<std::size_t>(op.rows())) {
    throw DimensionError("partial_trace: subsystem dimensions do not match the operator");
  }
  if (keep.empty()) {
    throw DimensionError("partial_trace: keep set must be non-empty");
  }
  const IndexSplit split = split_indices(subsystem_dims, keep);
  const auto kd = static_cast<Eigen::Index>(split.kept_dim);
  ComplexMatrix out = ComplexMatrix::Zero(kd, kd);
  const std::size_t total = split.kept.size();
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (split.traced[i] == split.traced[j]) {
        out(static_cast<Eigen::Index>(split.kept[i]), static_cast<Eigen::Index>(split.kept[j])) +=
            op(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep) {
  return DensityMatrix::normalized(partial_trace(rho.matrix(), subsystem_dims, keep));
}

}  // namespace chanpur::qcore
