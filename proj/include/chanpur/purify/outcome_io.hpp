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

#ifndef CHANPUR_PURIFY_OUTCOME_IO_HPP
#define CHANPUR_PURIFY_OUTCOME_IO_HPP

#include "chanpur/purify/circuit.hpp"
#include "chanpur/purify/closed_form.hpp"
#include "chanpur/qcore/serialization.hpp"

namespace chanpur::purify {

/// {"visibility", "p_plus", "p_minus", "plus_chi", "minus_chi",
///  "virtual_chi"}; absent branches are null.
Json outcome_to_json(const PurificationOutcome& outcome);

/// {"n_qubits": n, "probs": {"I": p, "X": p, ...}} in lexicographic order.
Json pauli_channel_to_json(const qcore::PauliChannel& p);

Json two_channel_to_json(const TwoChannelProbs& probs);

}  // namespace chanpur::purify

#endif  // CHANPUR_PURIFY_OUTCOME_IO_HPP
