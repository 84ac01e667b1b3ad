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

#ifndef CHANPUR_METRICS_ENTANGLEMENT_HPP
#define CHANPUR_METRICS_ENTANGLEMENT_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "chanpur/qcore/serialization.hpp"
#include "chanpur/qcore/state.hpp"

namespace chanpur::metrics {

/// Transposes subsystem `transposed` of a multipartite operator.
qcore::ComplexMatrix partial_transpose(const qcore::ComplexMatrix& op,
                                       std::span<const std::size_t> subsystem_dims,
                                       std::size_t transposed);
qcore::ComplexMatrix partial_transpose(const qcore::DensityMatrix& rho,
                                       std::span<const std::size_t> subsystem_dims,
                                       std::size_t transposed);

/// Indeterminate: the minimum eigenvalue lies within kPptTolerance of zero.
enum class PptVerdict { Separable, Entangled, Indeterminate };

std::string to_string(PptVerdict verdict);

/// Minimum eigenvalues within this distance of zero are indeterminate.
inline constexpr double kPptTolerance = 1e-9;

struct PptResult {
  /// Ascending eigenvalues of the partial transpose.
  std::vector<double> eigenvalues;
  PptVerdict verdict = PptVerdict::Indeterminate;

  bool entangled() const noexcept { return verdict == PptVerdict::Entangled; }
};

/// Two-qubit PPT test on the second qubit. Throws DimensionError unless
/// rho is 4 x 4.
PptResult ppt_eigenvalues(const qcore::DensityMatrix& rho);
PptResult ppt_eigenvalues(const qcore::ComplexMatrix& op);

Json to_json(const PptResult& result);

}  // namespace chanpur::metrics

#endif  // CHANPUR_METRICS_ENTANGLEMENT_HPP
