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

#ifndef CHANPUR_PURIFY_CLOSED_FORM_HPP
#define CHANPUR_PURIFY_CLOSED_FORM_HPP

#include <optional>

#include "chanpur/qcore/pauli.hpp"

namespace chanpur::purify {

using qcore::PauliChannel;

/// Plus branch for two copies of `p`: p'_i = p_i (1 + p_i) / (1 + sum_j p_j^2).
PauliChannel purified_pauli_probs(const PauliChannel& p);

/// Minus branch for two copies of `p`: p_i (1 - p_i) / (1 - sum_j p_j^2).
/// Throws UndefinedCombinationError when the minus branch never fires.
PauliChannel minus_pauli_probs(const PauliChannel& p);

/// Signed branch combination for two copies: p''_i = p_i^2 / sum_j p_j^2.
PauliChannel virtual_pauli_probs(const PauliChannel& p);

struct TwoChannelProbs {
  PauliChannel plus;
  /// Absent when p_minus == 0.
  std::optional<PauliChannel> minus;
  double p_plus = 0.0;
  double p_minus = 0.0;
  /// q_a r_a / sum_b q_b r_b; absent when the branches are indistinguishable
  /// (zero visibility or disjoint supports).
  std::optional<PauliChannel> virtual_channel;
};

/// Branches for distinct Pauli channels q (ancilla) and r (main) at
/// visibility v:
///   plus_a  = (q_a + r_a + 2 v q_a r_a) / (2 + 2 v sum_b q_b r_b)
///   minus_a = (q_a + r_a - 2 v q_a r_a) / (2 - 2 v sum_b q_b r_b)
///   p_plus  = (1 + v sum_b q_b r_b) / 2
TwoChannelProbs two_channel_purified_probs(const PauliChannel& q, const PauliChannel& r,
                                           double visibility = 1.0);

}  // namespace chanpur::purify

#endif  // CHANPUR_PURIFY_CLOSED_FORM_HPP
