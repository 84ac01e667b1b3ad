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

#include <array>
#include <cmath>

#include "catch_amalgamated.hpp"
#include "chanpur/error.hpp"
#include "chanpur/metrics/entanglement.hpp"
#include "chanpur/metrics/fidelity.hpp"
#include "chanpur/purify/circuit.hpp"
#include "chanpur/purify/closed_form.hpp"
#include "chanpur/qcore/channel.hpp"
#include "chanpur/qcore/pauli.hpp"
#include "chanpur/tomography/representations.hpp"
#include "support/random.hpp"

using namespace chanpur;
using namespace chanpur::metrics;
using qcore::ComplexMatrix;
using qcore::DensityMatrix;
using qcore::identity;
using qcore::max_abs_diff;
using Catch::Matchers::WithinAbs;

namespace {

ComplexMatrix isotropic(double p) { return p * qcore::bell_state().projector() + (1.0 - p) * identity(4) / 4.0; }

ComplexMatrix one_sided(const qcore::PauliChannel& pc) {
  const auto ch = qcore::tensor_product(qcore::KrausChannel::identity(2), qcore::pauli_channel_to_kraus(pc));
  return qcore::apply_kraus(ch, qcore::bell_state().projector());
}

constexpr std::array<std::size_t, 2> kQubits{2, 2};

}  // namespace

TEST_CASE("bell_fidelity examples", "[metrics]") {
  CHECK_THAT(bell_fidelity(DensityMatrix(qcore::bell_state())).value, WithinAbs(1.0, 1e-15));
  CHECK_THAT(bell_fidelity(qcore::maximally_mixed(4)).value, WithinAbs(0.25, 1e-15));
  const auto r = bell_fidelity(DensityMatrix(isotropic(0.33)));
  CHECK_THAT(r.value, WithinAbs(0.4975, 1e-15));
  CHECK(r.kind == FidelityKind::StateOverlap);
  CHECK(r.flags.empty());
  CHECK_THROWS_AS(bell_fidelity(qcore::maximally_mixed(2)), DimensionError);
  CHECK_THROWS_AS(bell_fidelity(ComplexMatrix::Identity(3, 3)), DimensionError);
}

TEST_CASE("bell fidelity along the isotropic line", "[metrics][property]") {
  for (int k = 0; k < 50; ++k) {
    const double p = k / 49.0;
    CHECK_THAT(bell_fidelity(isotropic(p)).value, WithinAbs(p + (1.0 - p) / 4.0, 1e-12));
  }
}

TEST_CASE("bell fidelity of one-sided Pauli noise is the identity weight", "[metrics][property]") {
  testing::Rng rng(301);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pc = testing::random_pauli_channel(1, rng);
    CHECK_THAT(bell_fidelity(one_sided(pc)).value, WithinAbs(pc.identity_prob(), 1e-12));
  }
}

TEST_CASE("process and average fidelity examples", "[metrics]") {
  const auto id = tomography::chi_from_channel(qcore::KrausChannel::identity(2));
  CHECK_THAT(process_fidelity_to_identity(id).value, WithinAbs(1.0, 1e-15));
  CHECK_THAT(average_fidelity(id, 2).value, WithinAbs(1.0, 1e-15));

  const auto dep = tomography::chi_from_pauli_channel(qcore::depolarizing_channel(0.5));
  CHECK_THAT(process_fidelity_to_identity(dep).value, WithinAbs(0.625, 1e-15));
  const auto avg = average_fidelity(dep, 2);
  CHECK_THAT(avg.value, WithinAbs(0.75, 1e-15));
  CHECK(avg.kind == FidelityKind::Average);
  CHECK(to_json(avg)["kind"] == "average");

  const auto pair = purify::simulate_purification(qcore::pauli_channel_to_kraus(qcore::bit_flip_channel(0.5)),
                                                  qcore::pauli_channel_to_kraus(qcore::phase_flip_channel(0.5)),
                                                  qcore::maximally_mixed(2));
  const auto plus = tomography::chi_from_superop(*pair.plus_channel);
  CHECK_THAT(process_fidelity_to_identity(plus).value, WithinAbs(0.6, 1e-12));

  const auto dep_pair = purify::simulate_purification(qcore::pauli_channel_to_kraus(qcore::depolarizing_channel(0.5)),
                                                      qcore::pauli_channel_to_kraus(qcore::depolarizing_channel(0.5)),
                                                      qcore::maximally_mixed(2));
  const auto virt = average_fidelity(purify::virtual_combination(dep_pair), 2, true);
  CHECK_THAT(virt.value, WithinAbs(0.928571, 1e-6));
  CHECK_THAT(virt.value, WithinAbs((2.0 * 0.390625 / 0.4375 + 1.0) / 3.0, 1e-12));
  CHECK(virt.has_flag(kVirtualFlag));
  CHECK_FALSE(virt.has_flag(kNonPhysicalFlag));

  CHECK_THAT(average_from_process_fidelity(0.625, 2), WithinAbs(0.75, 1e-16));
  CHECK_THROWS_AS(average_from_process_fidelity(0.5, 1), ValidationError);
}

TEST_CASE("non-physical virtual maps are flagged", "[metrics]") {
  tomography::ChiMatrix chi{1, ComplexMatrix::Zero(4, 4)};
  chi.entries(0, 0) = 1.1;
  chi.entries(1, 1) = -0.1;
  const auto report = process_fidelity_to_identity(chi, true);
  CHECK(report.has_flag(kVirtualFlag));
  CHECK(report.has_flag(kNonPhysicalFlag));
  CHECK(to_json(report)["flags"].size() == 2);
}

TEST_CASE("partial transpose examples", "[metrics]") {
  testing::Rng rng(302);
  const auto a = testing::random_density_matrix(2, rng);
  const auto b = testing::random_density_matrix(2, rng);
  const ComplexMatrix prod = qcore::tensor_product(a.matrix(), b.matrix());
  const ComplexMatrix pt = partial_transpose(prod, kQubits, 1);
  CHECK(max_abs_diff(pt, qcore::tensor_product(a.matrix(), b.matrix().transpose())) < 1e-15);
  CHECK(qcore::hermitian_eigenvalues(pt)(0) >= -1e-12);

  const auto bell = qcore::hermitian_eigenvalues(partial_transpose(qcore::bell_state().projector(), kQubits, 1));
  CHECK_THAT(bell(0), WithinAbs(-0.5, 1e-15));
  CHECK_THAT(bell(1), WithinAbs(0.5, 1e-15));
  CHECK_THAT(bell(3), WithinAbs(0.5, 1e-15));

  CHECK(max_abs_diff(partial_transpose(qcore::maximally_mixed(4), kQubits, 0), identity(4) / 4.0) == 0.0);
  const std::array<std::size_t, 2> bad{2, 3};
  CHECK_THROWS_AS(partial_transpose(prod, bad, 0), DimensionError);
}

TEST_CASE("partial transpose is a trace-preserving involution", "[metrics][property]") {
  testing::Rng rng(303);
  const std::array<std::size_t, 2> dims{2, 3};
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = testing::random_density_matrix(6, rng);
    for (std::size_t sys : {0, 1}) {
      const ComplexMatrix once = partial_transpose(rho.matrix(), dims, sys);
      CHECK(std::abs(once.trace().real() - 1.0) < 1e-12);
      CHECK(qcore::is_hermitian(once, 1e-12));
      CHECK(max_abs_diff(partial_transpose(once, dims, sys), rho.matrix()) < 1e-12);
    }
  }
}

TEST_CASE("ppt examples", "[metrics]") {
  const auto ideal = ppt_eigenvalues(isotropic(0.33));
  REQUIRE(ideal.eigenvalues.size() == 4);
  CHECK_THAT(ideal.eigenvalues[0], WithinAbs(0.0025, 1e-12));
  for (std::size_t k = 1; k < 4; ++k) {
    CHECK_THAT(ideal.eigenvalues[k], WithinAbs(0.3325, 1e-12));
  }
  CHECK(ideal.verdict == PptVerdict::Separable);

  const auto bell = ppt_eigenvalues(DensityMatrix(qcore::bell_state()));
  CHECK_THAT(bell.eigenvalues[0], WithinAbs(-0.5, 1e-12));
  CHECK(bell.entangled());
  CHECK(to_json(bell)["verdict"] == "entangled");

  const auto mixed = ppt_eigenvalues(qcore::maximally_mixed(4));
  for (double e : mixed.eigenvalues) {
    CHECK_THAT(e, WithinAbs(0.25, 1e-15));
  }
  CHECK(mixed.verdict == PptVerdict::Separable);

  // At p = 1/3 the smallest eigenvalue sits on the boundary.
  CHECK(ppt_eigenvalues(isotropic(1.0 / 3.0)).verdict == PptVerdict::Indeterminate);
  CHECK(to_string(PptVerdict::Indeterminate) == "indeterminate");
  CHECK_THROWS_AS(ppt_eigenvalues(qcore::maximally_mixed(2)), DimensionError);
}

TEST_CASE("fidelity above one half coincides with PPT entanglement", "[metrics][property]") {
  for (int k = 0; k <= 100; ++k) {
    const double p = k / 100.0;
    const ComplexMatrix rho = isotropic(p);
    const double f = bell_fidelity(rho).value;
    const auto ppt = ppt_eigenvalues(rho);
    CAPTURE(p, f);
    CHECK(ppt.eigenvalues[0] == Catch::Approx((1.0 - p) / 4.0 - p / 2.0).margin(1e-12));
    if (std::abs(f - 0.5) > 1e-9) {
      CHECK((f > 0.5) == ppt.entangled());
    }
  }
}
