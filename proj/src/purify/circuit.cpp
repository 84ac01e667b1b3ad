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

#include "chanpur/purify/circuit.hpp"

#include <array>
#include <cmath>
#include <string>

#include "chanpur/error.hpp"

namespace chanpur::purify {

namespace {

using qcore::Complex;

/// Applies k1 (x) k2 to the ancilla (x) main part of a control-extended
/// operator, leaving the control untouched.
ComplexMatrix apply_pair(const qcore::KrausChannel& c1, const qcore::KrausChannel& c2,
                         const ComplexMatrix& op) {
  const ComplexMatrix id2 = qcore::identity(2);
  ComplexMatrix out = ComplexMatrix::Zero(op.rows(), op.cols());
  for (const ComplexMatrix& a : c1.ops()) {
    const ComplexMatrix ca = qcore::tensor_product(id2, a);
    for (const ComplexMatrix& b : c2.ops()) {
      const ComplexMatrix k = qcore::tensor_product(ca, b);
      out += k * op * k.adjoint();
    }
  }
  return out;
}

struct BranchPair {
  ComplexMatrix plus;
  ComplexMatrix minus;
};

BranchPair run_circuit(const qcore::KrausChannel& c1, const qcore::KrausChannel& c2,
                       const ComplexMatrix& fredkin, const ComplexMatrix& control_and_ancilla,
                       const ComplexMatrix& input, double visibility) {
  const std::size_t d = static_cast<std::size_t>(input.rows());
  const Eigen::Index block = static_cast<Eigen::Index>(d * d);
  ComplexMatrix state = qcore::tensor_product(control_and_ancilla, input);
  state = fredkin * state * fredkin.adjoint();
  state = apply_pair(c1, c2, state);
  state = fredkin * state * fredkin.adjoint();
  const ComplexMatrix diag = state.topLeftCorner(block, block) + state.bottomRightCorner(block, block);
  const ComplexMatrix cross =
      visibility * (state.topRightCorner(block, block) + state.bottomLeftCorner(block, block));
  const std::array<std::size_t, 2> dims{d, d};
  const std::array<std::size_t, 1> keep{1};
  return BranchPair{qcore::partial_trace(0.5 * (diag + cross), dims, keep),
                    qcore::partial_trace(0.5 * (diag - cross), dims, keep)};
}

void require_cptp(const qcore::KrausChannel& ch, const char* name) {
  if (ch.dim_in() != ch.dim_out()) {
    throw DimensionError(std::string(name) + " must map a register to itself");
  }
  const auto report = qcore::is_cptp(ch);
  if (!report) {
    throw ValidationError(std::string(name) + " is not CPTP: " + report.diagnostic);
  }
}

}  // namespace

ComplexMatrix fredkin_unitary(std::size_t target_dim) {
  if (target_dim < 2) {
    throw DimensionError("fredkin_unitary: target_dim must be >= 2");
  }
  const std::size_t n = target_dim * target_dim;
  ComplexMatrix u = ComplexMatrix::Zero(static_cast<Eigen::Index>(2 * n), static_cast<Eigen::Index>(2 * n));
  u.topLeftCorner(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) = qcore::identity(n);
  u.bottomRightCorner(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) =
      qcore::swap_operator(target_dim);
  return u;
}

PurificationOutcome simulate_purification(const qcore::KrausChannel& c1,
                                          const qcore::KrausChannel& c2,
                                          const qcore::DensityMatrix& rho,
                                          const CircuitConfig& cfg) {
  if (!(cfg.visibility >= 0.0 && cfg.visibility <= 1.0)) {
    throw ValidationError("visibility must lie in [0, 1]");
  }
  require_cptp(c1, "first channel");
  require_cptp(c2, "second channel");
  const std::size_t d = rho.dim();
  if (c1.dim_in() != d || c2.dim_in() != d) {
    throw DimensionError("channel dimensions must match the input state");
  }
  const ComplexMatrix plus = ComplexMatrix::Constant(2, 2, Complex{0.5, 0.0});
  const ComplexMatrix control_and_ancilla =
      qcore::tensor_product(plus, qcore::maximally_mixed(d).matrix());
  const ComplexMatrix fredkin = fredkin_unitary(d);
  const double v = cfg.visibility;

  // Tabulate both branches in one pass over the matrix units.
  const Eigen::Index dd = static_cast<Eigen::Index>(d * d);
  ComplexMatrix plus_m(dd, dd);
  ComplexMatrix minus_m(dd, dd);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix unit = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
      unit(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
      const BranchPair out = run_circuit(c1, c2, fredkin, control_and_ancilla, unit, v);
      const Eigen::Index col = static_cast<Eigen::Index>(i * d + j);
      plus_m.col(col) = qcore::vec(out.plus);
      minus_m.col(col) = qcore::vec(out.minus);
    }
  }
  PurificationOutcome result{Superoperator(d, d, plus_m), Superoperator(d, d, minus_m),
                             0.0, 0.0, {}, {}, {}, {}, {}, v};
  const ComplexMatrix sigma_plus = result.plus_raw.apply(rho.matrix());
  const ComplexMatrix sigma_minus = result.minus_raw.apply(rho.matrix());
  result.p_plus = sigma_plus.trace().real();
  result.p_minus = sigma_minus.trace().real();
  if (result.p_plus > 0.0) {
    result.plus_channel = Complex{1.0 / result.p_plus, 0.0} * result.plus_raw;
    result.plus_state = sigma_plus / result.p_plus;
  }
  if (result.p_minus > 0.0) {
    result.minus_channel = Complex{1.0 / result.p_minus, 0.0} * result.minus_raw;
    result.minus_state = sigma_minus / result.p_minus;
  }
  const double gap = result.p_plus - result.p_minus;
  if (std::abs(gap) > kUndefinedCombinationTolerance) {
    result.virtual_channel = Complex{1.0 / gap, 0.0} * (result.plus_raw - result.minus_raw);
  }
  return result;
}

ChiMatrix virtual_combination(const PurificationOutcome& outcome) {
  if (!outcome.virtual_channel) {
    throw UndefinedCombinationError(
        "virtual combination undefined: p_plus and p_minus coincide (p_plus = " +
        format_real(outcome.p_plus) + ")");
  }
  return tomography::chi_from_superop(*outcome.virtual_channel);
}

Branch map_bell_control_outcomes(Sign first, Sign second) {
  return first == second ? Branch::Plus : Branch::Minus;
}

}  // namespace chanpur::purify
