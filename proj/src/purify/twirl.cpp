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

#include "chanpur/purify/twirl.hpp"

#include <cstddef>
#include <vector>

#include "chanpur/error.hpp"

namespace chanpur::purify {

namespace {

int require_qubit_channel(const qcore::KrausChannel& ch) {
  if (ch.dim_in() != ch.dim_out()) {
    throw DimensionError("pauli_twirl: channel is not square");
  }
  const auto n = qcore::qubit_count(ch.dim_in());
  if (!n) {
    throw DimensionError("pauli_twirl: dimension is not a power of two");
  }
  const auto report = qcore::is_cptp(ch);
  if (!report) {
    throw ValidationError("pauli_twirl: channel is not CPTP: " + report.diagnostic);
  }
  return *n;
}

/// Reads a Pauli distribution off a chi diagonal, absorbing rounding noise.
qcore::PauliChannel from_diagonal(const tomography::ChiMatrix& chi) {
  std::vector<double> probs(static_cast<std::size_t>(chi.entries.rows()));
  for (std::size_t a = 0; a < probs.size(); ++a) {
    const double p = chi.entries(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)).real();
    probs[a] = p < 0.0 && p > -1e-12 ? 0.0 : p;
  }
  return qcore::PauliChannel(chi.n_qubits, std::move(probs));
}

}  // namespace

tomography::Superoperator twirl_superoperator(const tomography::Superoperator& s) {
  if (s.dim_in() != s.dim_out()) {
    throw DimensionError("twirl_superoperator: map is not square");
  }
  const auto n = qcore::qubit_count(s.dim_in());
  if (!n) {
    throw DimensionError("twirl_superoperator: dimension is not a power of two");
  }
  const std::size_t count = qcore::pauli_basis_size(*n);
  qcore::ComplexMatrix acc = qcore::ComplexMatrix::Zero(s.matrix().rows(), s.matrix().cols());
  for (std::size_t a = 0; a < count; ++a) {
    const auto conj = tomography::Superoperator::from_kraus(
        qcore::KrausChannel::unitary(qcore::pauli_basis_element(*n, a)));
    acc += conj.after(s).after(conj).matrix();
  }
  return tomography::Superoperator(s.dim_in(), s.dim_out(), acc / static_cast<double>(count));
}

qcore::PauliChannel pauli_twirl(const qcore::KrausChannel& ch) {
  require_qubit_channel(ch);
  const auto twirled = twirl_superoperator(tomography::Superoperator::from_kraus(ch));
  return from_diagonal(tomography::chi_from_superop(twirled));
}

qcore::PauliChannel pauli_twirl_from_chi(const qcore::KrausChannel& ch) {
  require_qubit_channel(ch);
  return from_diagonal(tomography::chi_from_channel(ch));
}

}  // namespace chanpur::purify
