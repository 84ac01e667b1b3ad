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

#ifndef CHANPUR_PURIFY_CIRCUIT_HPP
#define CHANPUR_PURIFY_CIRCUIT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "chanpur/qcore/channel.hpp"
#include "chanpur/qcore/linalg.hpp"
#include "chanpur/qcore/state.hpp"
#include "chanpur/tomography/representations.hpp"

namespace chanpur::purify {

using qcore::ComplexMatrix;
using tomography::ChiMatrix;
using tomography::Superoperator;

/// |0><0| (x) I + |1><1| (x) SWAP on control (x) C^d (x) C^d.
ComplexMatrix fredkin_unitary(std::size_t target_dim);

struct CircuitConfig {
  /// Interference contrast in [0, 1]; scales the control-coherence blocks.
  double visibility = 1.0;
  std::uint64_t seed = 0;
};

/// Both post-selected branches of the two-Fredkin circuit.
///
/// The branch maps are tabulated over the matrix units, so `plus_raw` and
/// `minus_raw` are the exact unnormalised linear maps X -> sigma_+-(X).
/// Branch probabilities refer to the simulated input state. For Pauli
/// channels they do not depend on it, and the normalised branches are
/// trace preserving.
struct PurificationOutcome {
  Superoperator plus_raw;
  Superoperator minus_raw;
  double p_plus = 0.0;
  double p_minus = 0.0;
  /// plus_raw / p_plus; absent when p_plus is zero.
  std::optional<Superoperator> plus_channel;
  /// minus_raw / p_minus; absent when p_minus is zero (e.g. identical
  /// noiseless channels).
  std::optional<Superoperator> minus_channel;
  /// (plus_raw - minus_raw) / (p_plus - p_minus); absent when p_plus and
  /// p_minus coincide within 1e-12.
  std::optional<Superoperator> virtual_channel;
  /// Conditional output states for the simulated input.
  std::optional<ComplexMatrix> plus_state;
  std::optional<ComplexMatrix> minus_state;
  double visibility = 1.0;
};

/// Threshold below which p_plus - p_minus counts as zero.
inline constexpr double kUndefinedCombinationTolerance = 1e-12;

/// Runs |+><+| (x) rho_m (x) rho through Fredkin, c1 on the ancilla and c2
/// on the main register, Fredkin, an X-basis control measurement and the
/// ancilla discard. Throws ValidationError for non-CPTP channels or a
/// visibility outside [0, 1], DimensionError for mismatched dimensions.
PurificationOutcome simulate_purification(const qcore::KrausChannel& c1,
                                          const qcore::KrausChannel& c2,
                                          const qcore::DensityMatrix& rho,
                                          const CircuitConfig& cfg = {});

/// Chi matrix of the signed branch combination. Throws
/// UndefinedCombinationError when p_plus == p_minus.
ChiMatrix virtual_combination(const PurificationOutcome& outcome);

enum class Sign : std::uint8_t { Plus, Minus };
enum class Branch : std::uint8_t { Plus, Minus };

/// Outcome relabelling for a Bell-pair control register: equal signs select
/// the plus branch, opposite signs the minus branch.
Branch map_bell_control_outcomes(Sign first, Sign second);

}  // namespace chanpur::purify

#endif  // CHANPUR_PURIFY_CIRCUIT_HPP
