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

#ifndef CHANPUR_PURIFY_TWIRL_HPP
#define CHANPUR_PURIFY_TWIRL_HPP

#include "chanpur/qcore/channel.hpp"
#include "chanpur/qcore/pauli.hpp"
#include "chanpur/tomography/representations.hpp"

namespace chanpur::purify {

/// Averages `ch` over all 4^n Pauli conjugations P C(P X P) P and reads the
/// resulting Pauli-diagonal channel off its chi matrix. Throws
/// DimensionError unless the channel is square on qubits and
/// ValidationError unless it is CPTP.
qcore::PauliChannel pauli_twirl(const qcore::KrausChannel& ch);

/// The same distribution from the diagonal of the chi matrix of `ch`.
qcore::PauliChannel pauli_twirl_from_chi(const qcore::KrausChannel& ch);

/// The twirled map itself, valid for any qubit superoperator.
tomography::Superoperator twirl_superoperator(const tomography::Superoperator& s);

}  // namespace chanpur::purify

#endif  // CHANPUR_PURIFY_TWIRL_HPP
