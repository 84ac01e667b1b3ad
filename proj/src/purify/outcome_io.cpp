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

#include "chanpur/purify/outcome_io.hpp"

#include <cstddef>

namespace chanpur::purify {

namespace {

Json optional_chi(const std::optional<Superoperator>& s) {
  if (!s) {
    return nullptr;
  }
  return tomography::chi_to_json(tomography::chi_from_superop(*s));
}

}  // namespace

Json outcome_to_json(const PurificationOutcome& outcome) {
  Json j;
  j["visibility"] = outcome.visibility;
  j["p_plus"] = outcome.p_plus;
  j["p_minus"] = outcome.p_minus;
  j["plus_chi"] = optional_chi(outcome.plus_channel);
  j["minus_chi"] = optional_chi(outcome.minus_channel);
  j["virtual_chi"] = optional_chi(outcome.virtual_channel);
  return j;
}

Json pauli_channel_to_json(const qcore::PauliChannel& p) {
  Json probs = Json::object();
  for (std::size_t a = 0; a < p.probs().size(); ++a) {
    probs[qcore::PauliString::from_index(p.n_qubits(), a).str()] = p.probs()[a];
  }
  Json j;
  j["n_qubits"] = p.n_qubits();
  j["probs"] = std::move(probs);
  return j;
}

Json two_channel_to_json(const TwoChannelProbs& probs) {
  Json j;
  j["p_plus"] = probs.p_plus;
  j["p_minus"] = probs.p_minus;
  j["plus"] = pauli_channel_to_json(probs.plus);
  j["minus"] = probs.minus ? pauli_channel_to_json(*probs.minus) : Json(nullptr);
  j["virtual"] = probs.virtual_channel ? pauli_channel_to_json(*probs.virtual_channel) : Json(nullptr);
  return j;
}

}  // namespace chanpur::purify
