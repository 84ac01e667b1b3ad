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

#ifndef CHANPUR_METRICS_FIDELITY_HPP
#define CHANPUR_METRICS_FIDELITY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "chanpur/qcore/serialization.hpp"
#include "chanpur/qcore/state.hpp"
#include "chanpur/tomography/representations.hpp"

namespace chanpur::metrics {

enum class FidelityKind { StateOverlap, Process, Average };

std::string to_string(FidelityKind kind);

/// Flag set when the input may be a non-CP pseudo-channel.
inline constexpr const char* kVirtualFlag = "virtual";
/// Flag set when the input fails a physicality check (PSD, unit trace).
inline constexpr const char* kNonPhysicalFlag = "non-physical";

struct FidelityReport {
  double value = 0.0;
  FidelityKind kind = FidelityKind::StateOverlap;
  std::string target;
  std::vector<std::string> flags;

  bool has_flag(const std::string& flag) const;
};

/// {"value", "kind", "target", "flags"}
Json to_json(const FidelityReport& report);

/// <Phi+| rho |Phi+>. Throws DimensionError unless rho is 4 x 4.
FidelityReport bell_fidelity(const qcore::DensityMatrix& rho);

/// Same functional on an arbitrary 4 x 4 operator; flagged non-physical if
/// it is not a density matrix.
FidelityReport bell_fidelity(const qcore::ComplexMatrix& op);

/// Re chi(I, I). `is_virtual` marks a signed branch combination.
FidelityReport process_fidelity_to_identity(const tomography::ChiMatrix& chi,
                                            bool is_virtual = false);

/// (d F_pro + 1) / (d + 1).
FidelityReport average_fidelity(const tomography::ChiMatrix& chi, std::size_t dim,
                                bool is_virtual = false);

/// The relation above on a bare process fidelity.
double average_from_process_fidelity(double process_fidelity, std::size_t dim);

}  // namespace chanpur::metrics

#endif  // CHANPUR_METRICS_FIDELITY_HPP
