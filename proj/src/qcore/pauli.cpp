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

#include "chanpur/qcore/pauli.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "chanpur/error.hpp"

namespace chanpur::qcore {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << what << " must lie in [0, 1], got " << p;
    throw ValidationError(os.str());
  }
}

void check_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 8) {
    throw ValidationError("Pauli channels support 1..8 qubits");
  }
}

}  // namespace

char to_char(Pauli p) {
  constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      throw ValidationError(std::string("not a Pauli label: '") + c + "'");
  }
}

ComplexMatrix pauli_matrix(Pauli p) {
  const Complex i{0.0, 1.0};
  ComplexMatrix m(2, 2);
  switch (p) {
    case Pauli::I:
      m << 1.0, 0.0, 0.0, 1.0;
      break;
    case Pauli::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case Pauli::Y:
      m << 0.0, -i, i, 0.0;
      break;
    case Pauli::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

std::size_t pauli_basis_size(int n_qubits) { return std::size_t{1} << (2 * n_qubits); }

PauliString::PauliString(std::vector<Pauli> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw ValidationError("Pauli string must act on at least one qubit");
  }
}

PauliString PauliString::parse(std::string_view text) {
  std::vector<Pauli> labels;
  labels.reserve(text.size());
  for (char c : text) {
    labels.push_back(pauli_from_char(c));
  }
  return PauliString(std::move(labels));
}

PauliString PauliString::from_index(int n_qubits, std::size_t index) {
  if (index >= pauli_basis_size(n_qubits)) {
    throw DimensionError("Pauli index out of range");
  }
  std::vector<Pauli> labels(static_cast<std::size_t>(n_qubits));
  for (int q = n_qubits; q-- > 0;) {
    labels[static_cast<std::size_t>(q)] = static_cast<Pauli>(index % 4);
    index /= 4;
  }
  return PauliString(std::move(labels));
}

std::size_t PauliString::index() const {
  std::size_t idx = 0;
  for (Pauli p : labels_) {
    idx = idx * 4 + static_cast<std::size_t>(p);
  }
  return idx;
}

std::string PauliString::str() const {
  std::string s;
  for (Pauli p : labels_) {
    s.push_back(to_char(p));
  }
  return s;
}

ComplexMatrix PauliString::matrix() const {
  ComplexMatrix m = pauli_matrix(labels_.front());
  for (std::size_t k = 1; k < labels_.size(); ++k) {
    m = tensor_product(m, pauli_matrix(labels_[k]));
  }
  return m;
}

ComplexMatrix pauli_basis_element(int n_qubits, std::size_t index) {
  return PauliString::from_index(n_qubits, index).matrix();
}

PauliChannel::PauliChannel(int n_qubits, std::vector<double> probs, double sum_tol)
    : n_qubits_(n_qubits), probs_(std::move(probs)) {
  check_qubits(n_qubits);
  if (probs_.size() != pauli_basis_size(n_qubits)) {
    throw DimensionError("Pauli channel needs 4^n probabilities");
  }
  for (double p : probs_) {
    check_probability(p, "Pauli probability");
  }
  const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(total - 1.0) > sum_tol) {
    std::ostringstream os;
    os.precision(17);
    os << "Pauli probabilities sum to " << total << ", expected 1";
    throw ValidationError(os.str());
  }
}

PauliChannel PauliChannel::from_labels(int n_qubits, const std::map<std::string, double>& probs,
                                       double sum_tol) {
  check_qubits(n_qubits);
  std::vector<double> dense(pauli_basis_size(n_qubits), 0.0);
  for (const auto& [label, p] : probs) {
    const PauliString s = PauliString::parse(label);
    if (s.n_qubits() != n_qubits) {
      throw ValidationError("Pauli label '" + label + "' has the wrong number of qubits");
    }
    dense[s.index()] += p;
  }
  return PauliChannel(n_qubits, std::move(dense), sum_tol);
}

double PauliChannel::prob(const PauliString& label) const {
  if (label.n_qubits() != n_qubits_) {
    throw DimensionError("Pauli label has the wrong number of qubits");
  }
  return probs_[label.index()];
}

double PauliChannel::collision_probability() const {
  double s = 0.0;
  for (double p : probs_) {
    s += p * p;
  }
  return s;
}

ComplexMatrix PauliChannel::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != static_cast<Eigen::Index>(dim()) || !is_square(rho)) {
    throw DimensionError("PauliChannel::apply: dimension mismatch");
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (std::size_t a = 0; a < probs_.size(); ++a) {
    if (probs_[a] == 0.0) {
      continue;
    }
    const ComplexMatrix p = pauli_basis_element(n_qubits_, a);
    out += probs_[a] * p * rho * p.adjoint();
  }
  return out;
}

PauliChannel depolarizing_channel(double p, int n_qubits) {
  check_probability(p, "depolarizing parameter p");
  check_qubits(n_qubits);
  const std::size_t size = pauli_basis_size(n_qubits);
  const double uniform = (1.0 - p) / static_cast<double>(size);
  std::vector<double> probs(size, uniform);
  probs[0] = p + uniform;
  return PauliChannel(n_qubits, std::move(probs));
}

PauliChannel bit_flip_channel(double p0) {
  check_probability(p0, "bit-flip p0");
  return PauliChannel(1, {p0, 1.0 - p0, 0.0, 0.0});
}

PauliChannel phase_flip_channel(double p0) {
  check_probability(p0, "phase-flip p0");
  return PauliChannel(1, {p0, 0.0, 0.0, 1.0 - p0});
}

PauliChannel identity_pauli_channel(int n_qubits) {
  check_qubits(n_qubits);
  std::vector<double> probs(pauli_basis_size(n_qubits), 0.0);
  probs[0] = 1.0;
  return PauliChannel(n_qubits, std::move(probs));
}

}  // namespace chanpur::qcore
