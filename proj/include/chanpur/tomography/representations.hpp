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

#ifndef CHANPUR_TOMOGRAPHY_REPRESENTATIONS_HPP
#define CHANPUR_TOMOGRAPHY_REPRESENTATIONS_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "chanpur/qcore/channel.hpp"
#include "chanpur/qcore/linalg.hpp"
#include "chanpur/qcore/pauli.hpp"
#include "chanpur/qcore/serialization.hpp"

namespace chanpur::tomography {

using qcore::Complex;
using qcore::ComplexMatrix;
using qcore::ComplexVector;
using qcore::RealMatrix;

/// A linear map on operators, stored as the (d_out^2 x d_in^2) matrix that
/// acts on row-major vectorised operators. Unlike KrausChannel it can hold
/// maps that are not completely positive, e.g. signed branch combinations.
class Superoperator {
 public:
  Superoperator(std::size_t dim_in, std::size_t dim_out, ComplexMatrix matrix);

  static Superoperator identity(std::size_t dim);
  static Superoperator from_kraus(const qcore::KrausChannel& ch);

  /// Tabulates an arbitrary linear action by evaluating it on the matrix
  /// units |i><j|.
  static Superoperator from_action(std::size_t dim_in, std::size_t dim_out,
                                   const std::function<ComplexMatrix(const ComplexMatrix&)>& action);

  std::size_t dim_in() const noexcept { return dim_in_; }
  std::size_t dim_out() const noexcept { return dim_out_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  ComplexMatrix apply(const ComplexMatrix& op) const;

  /// this after `first`.
  Superoperator after(const Superoperator& first) const;

  /// Applies the map to subsystem `target` of a multipartite operator.
  ComplexMatrix apply_to_subsystem(const ComplexMatrix& op, std::span<const std::size_t> dims,
                                   std::size_t target) const;

  friend Superoperator operator+(const Superoperator& a, const Superoperator& b);
  friend Superoperator operator-(const Superoperator& a, const Superoperator& b);
  friend Superoperator operator*(Complex s, const Superoperator& a);

 private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  ComplexMatrix matrix_;
};

/// Process matrix in the Pauli operator basis:
///   C(rho) = sum_ab chi_ab P_a rho P_b^dagger
/// with un-normalised Pauli strings, so a trace-preserving map has tr chi = 1
/// and a Pauli channel has chi = diag(probs). Rows and columns follow the
/// lexicographic Pauli order (I, X, Y, Z per qubit).
struct ChiMatrix {
  int n_qubits = 1;
  ComplexMatrix entries;

  /// Re chi(I...I, I...I); the weight of the noiseless component.
  double identity_weight() const { return entries(0, 0).real(); }
  std::vector<std::string> basis_labels() const;
};

/// R_ab = tr(P_a C(P_b)) / d. Real for Hermiticity-preserving maps.
struct PauliTransferMatrix {
  int n_qubits = 1;
  RealMatrix entries;
};

/// J = sum_ij C(|i><j|) (x) |i><j|, output factor first. J is PSD iff the
/// map is completely positive and tr_out J = I iff it is trace preserving.
struct ChoiMatrix {
  std::size_t dim = 2;
  ComplexMatrix entries;
};

struct ChoiDiagnostics {
  double min_eigenvalue = 0.0;
  /// max |tr_out J - I|
  double tp_deviation = 0.0;
  double hermiticity_deviation = 0.0;
};

ChoiMatrix choi_from_superop(const Superoperator& s);
Superoperator superop_from_choi(const ChoiMatrix& j);

ChiMatrix chi_from_choi(const ChoiMatrix& j);
ChoiMatrix choi_from_chi(const ChiMatrix& chi);

ChiMatrix chi_from_superop(const Superoperator& s);
Superoperator superop_from_chi(const ChiMatrix& chi);

PauliTransferMatrix ptm_from_superop(const Superoperator& s);
Superoperator superop_from_ptm(const PauliTransferMatrix& r);

ChiMatrix chi_from_channel(const qcore::KrausChannel& ch);
PauliTransferMatrix ptm_from_channel(const qcore::KrausChannel& ch);
ChoiMatrix choi_from_channel(const qcore::KrausChannel& ch);
ChiMatrix chi_from_pauli_channel(const qcore::PauliChannel& pc);

/// Kraus decomposition from the Choi eigendecomposition. Eigenvalues below
/// `tol` (relative to the largest) are dropped; a Choi matrix with an
/// eigenvalue below -tol is not CP and is rejected with ValidationError.
qcore::KrausChannel channel_from_choi(const ChoiMatrix& j, double tol = 1e-9);

ChoiDiagnostics diagnose(const ChoiMatrix& j);

/// Number of Kraus operators needed: rank of the Choi matrix.
std::size_t kraus_rank(const ChoiMatrix& j, double tol = 1e-9);

/// {"n_qubits", "basis", "rows", "cols", "entries": [[re, im], ...]}
Json chi_to_json(const ChiMatrix& chi);
ChiMatrix chi_from_json(const Json& j);
Json ptm_to_json(const PauliTransferMatrix& r);

}  // namespace chanpur::tomography

#endif  // CHANPUR_TOMOGRAPHY_REPRESENTATIONS_HPP
