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

#ifndef CHANPUR_QCORE_CHANNEL_HPP
#define CHANPUR_QCORE_CHANNEL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "chanpur/qcore/linalg.hpp"
#include "chanpur/qcore/pauli.hpp"
#include "chanpur/qcore/state.hpp"

namespace chanpur::qcore {

/// rho -> sum_k K_k rho K_k^dagger. Construction only checks shapes;
/// complete positivity is structural and trace preservation is checked by
/// is_cptp().
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> ops);

  static KrausChannel identity(std::size_t dim);
  static KrausChannel unitary(const ComplexMatrix& u);

  std::size_t dim_in() const noexcept { return dim_in_; }
  std::size_t dim_out() const noexcept { return dim_out_; }
  const std::vector<ComplexMatrix>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }

 private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  std::vector<ComplexMatrix> ops_;
};

struct CptpReport {
  bool ok = false;
  /// max |sum K^dagger K - I|
  double deviation = 0.0;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

CptpReport is_cptp(const KrausChannel& ch, double tol = 1e-9);

/// Raw action on any operator of matching size.
ComplexMatrix apply_kraus(const KrausChannel& ch, const ComplexMatrix& op);

/// Action on a state; the result is re-normalised within the PSD tolerance,
/// so a non-trace-preserving channel yields the conditional output state.
DensityMatrix apply_kraus(const KrausChannel& ch, const DensityMatrix& rho);

/// a after b: Kraus set {A_i B_j}.
KrausChannel compose(const KrausChannel& a, const KrausChannel& b);

/// a (x) b acting on the joint register, a on the most significant factor.
KrausChannel tensor_product(const KrausChannel& a, const KrausChannel& b);

/// Kraus operators sqrt(p_a) P_a for every non-zero p_a.
KrausChannel pauli_channel_to_kraus(const PauliChannel& pc);

}  // namespace chanpur::qcore

#endif  // CHANPUR_QCORE_CHANNEL_HPP
