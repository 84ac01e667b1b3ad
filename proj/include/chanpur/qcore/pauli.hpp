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

#ifndef CHANPUR_QCORE_PAULI_HPP
#define CHANPUR_QCORE_PAULI_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chanpur/qcore/linalg.hpp"

namespace chanpur::qcore {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// X = [[0,1],[1,0]], Y = [[0,-i],[i,0]], Z = diag(1,-1).
ComplexMatrix pauli_matrix(Pauli p);

/// 4^n, the number of n-qubit Pauli strings.
std::size_t pauli_basis_size(int n_qubits);

/// Tensor product of single-qubit Paulis, leftmost label acting on qubit 0
/// (the most significant basis digit).
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> labels);

  /// Parses "IXYZ"-style labels; throws ValidationError on other characters.
  static PauliString parse(std::string_view text);

  /// Lexicographic (I < X < Y < Z) position among the 4^n strings.
  static PauliString from_index(int n_qubits, std::size_t index);

  int n_qubits() const noexcept { return static_cast<int>(labels_.size()); }
  std::span<const Pauli> labels() const noexcept { return labels_; }
  std::size_t index() const;
  std::string str() const;
  ComplexMatrix matrix() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> labels_;
};

/// Matrix of the Pauli string with the given lexicographic index.
ComplexMatrix pauli_basis_element(int n_qubits, std::size_t index);

/// Probability distribution over n-qubit Pauli strings, stored densely in
/// lexicographic order so probs()[0] is the identity weight.
class PauliChannel {
 public:
  /// Throws ValidationError unless every entry lies in [0, 1] and the sum is
  /// 1 within `sum_tol`.
  PauliChannel(int n_qubits, std::vector<double> probs, double sum_tol = 1e-10);

  /// Missing labels get probability zero.
  static PauliChannel from_labels(int n_qubits, const std::map<std::string, double>& probs,
                                  double sum_tol = 1e-10);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return std::size_t{1} << n_qubits_; }
  std::span<const double> probs() const noexcept { return probs_; }
  double prob(std::size_t index) const { return probs_.at(index); }
  double prob(const PauliString& label) const;
  double identity_prob() const noexcept { return probs_.front(); }

  /// sum_a p_a^2
  double collision_probability() const;

  /// Applies sum_a p_a P_a rho P_a directly.
  ComplexMatrix apply(const ComplexMatrix& rho) const;

 private:
  int n_qubits_;
  std::vector<double> probs_;
};

/// rho -> p rho + (1 - p) I/d, written as a Pauli channel.
PauliChannel depolarizing_channel(double p, int n_qubits = 1);

/// {I: p0, X: 1 - p0}
PauliChannel bit_flip_channel(double p0);

/// {I: p0, Z: 1 - p0}
PauliChannel phase_flip_channel(double p0);

PauliChannel identity_pauli_channel(int n_qubits = 1);

}  // namespace chanpur::qcore

#endif  // CHANPUR_QCORE_PAULI_HPP
