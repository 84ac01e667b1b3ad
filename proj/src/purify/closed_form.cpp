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

#include "chanpur/purify/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "chanpur/error.hpp"
#include "chanpur/purify/circuit.hpp"

namespace chanpur::purify {

namespace {

double overlap(const PauliChannel& q, const PauliChannel& r) {
  double s = 0.0;
  for (std::size_t a = 0; a < q.probs().size(); ++a) {
    s += q.probs()[a] * r.probs()[a];
  }
  return s;
}

PauliChannel normalized(int n_qubits, std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) {
    total += w;
  }
  for (double& w : weights) {
    w /= total;
  }
  return PauliChannel(n_qubits, std::move(weights));
}

}  // namespace

PauliChannel purified_pauli_probs(const PauliChannel& p) {
  const double s = p.collision_probability();
  std::vector<double> out(p.probs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = p.probs()[i] * (1.0 + p.probs()[i]) / (1.0 + s);
  }
  return normalized(p.n_qubits(), std::move(out));
}

PauliChannel minus_pauli_probs(const PauliChannel& p) {
  const double s = p.collision_probability();
  if (1.0 - s <= kUndefinedCombinationTolerance) {
    throw UndefinedCombinationError("minus branch has zero probability for a noiseless channel");
  }
  std::vector<double> out(p.probs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = p.probs()[i] * (1.0 - p.probs()[i]) / (1.0 - s);
  }
  return normalized(p.n_qubits(), std::move(out));
}

PauliChannel virtual_pauli_probs(const PauliChannel& p) {
  const double s = p.collision_probability();
  std::vector<double> out(p.probs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = p.probs()[i] * p.probs()[i] / s;
  }
  return normalized(p.n_qubits(), std::move(out));
}

TwoChannelProbs two_channel_purified_probs(const PauliChannel& q, const PauliChannel& r,
                                           double visibility) {
  if (q.n_qubits() != r.n_qubits()) {
    throw DimensionError("two_channel_purified_probs: channels act on different qubit counts");
  }
  if (!(visibility >= 0.0 && visibility <= 1.0)) {
    throw ValidationError("visibility must lie in [0, 1]");
  }
  const double s = overlap(q, r);
  const std::size_t m = q.probs().size();
  std::vector<double> plus(m);
  std::vector<double> minus(m);
  std::vector<double> both(m);
  for (std::size_t a = 0; a < m; ++a) {
    const double qa = q.probs()[a];
    const double ra = r.probs()[a];
    plus[a] = (qa + ra + 2.0 * visibility * qa * ra) / 4.0;
    minus[a] = std::max(0.0, (qa + ra - 2.0 * visibility * qa * ra) / 4.0);
    both[a] = qa * ra;
  }
  TwoChannelProbs out{normalized(q.n_qubits(), plus), std::nullopt, 0.5 * (1.0 + visibility * s),
                      0.5 * (1.0 - visibility * s), std::nullopt};
  if (out.p_minus > 0.0) {
    out.minus = normalized(q.n_qubits(), minus);
  }
  if (visibility * s > kUndefinedCombinationTolerance) {
    out.virtual_channel = normalized(q.n_qubits(), both);
  }
  return out;
}

}  // namespace chanpur::purify
