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

#include <cmath>
#include <numeric>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "chanpur/error.hpp"
#include "chanpur/qcore/channel.hpp"
#include "chanpur/qcore/pauli.hpp"
#include "chanpur/qcore/state.hpp"
#include "chanpur/tomography/measurement.hpp"
#include "chanpur/tomography/mle.hpp"
#include "chanpur/tomography/records_io.hpp"
#include "chanpur/tomography/representations.hpp"
#include "support/random.hpp"

using namespace chanpur;
using namespace chanpur::tomography;
using qcore::DensityMatrix;
using qcore::KrausChannel;
using qcore::identity;
using qcore::max_abs_diff;
using Catch::Matchers::WithinAbs;

namespace {

// Uhlmann fidelity, computed independently of the metrics module.
double state_fidelity(const ComplexMatrix& a, const ComplexMatrix& b) {
  const ComplexMatrix sa = qcore::psd_sqrt(a);
  const double root = qcore::psd_sqrt(sa * b * sa).trace().real();
  return root * root;
}

ComplexMatrix depolarized_bell(double p) {
  return p * qcore::bell_state().projector() + (1.0 - p) * identity(4) / 4.0;
}

double chi_error(const ChiMatrix& a, const ChiMatrix& b) { return max_abs_diff(a.entries, b.entries); }

bool non_decreasing(const std::vector<double>& history) {
  for (std::size_t k = 1; k < history.size(); ++k) {
    if (history[k] < history[k - 1] - 1e-13) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("representation examples", "[tomography]") {
  const auto id_chi = chi_from_channel(KrausChannel::identity(2));
  ComplexMatrix e00 = ComplexMatrix::Zero(4, 4);
  e00(0, 0) = 1.0;
  CHECK(max_abs_diff(id_chi.entries, e00) < 1e-15);

  const auto dep = qcore::pauli_channel_to_kraus(qcore::depolarizing_channel(0.5));
  const auto chi = chi_from_channel(dep);
  CHECK_THAT(chi.entries(0, 0).real(), WithinAbs(0.625, 1e-15));
  for (Eigen::Index k = 1; k < 4; ++k) {
    CHECK_THAT(chi.entries(k, k).real(), WithinAbs(0.125, 1e-15));
  }
  CHECK(qcore::max_abs(chi.entries - ComplexMatrix(chi.entries.diagonal().asDiagonal())) < 1e-15);
  CHECK(chi.basis_labels() == std::vector<std::string>{"I", "X", "Y", "Z"});

  for (double p : {0.0, 0.3, 0.5, 1.0}) {
    const auto ptm = ptm_from_channel(qcore::pauli_channel_to_kraus(qcore::depolarizing_channel(p)));
    const Eigen::Vector4d expected(1.0, p, p, p);
    CHECK((ptm.entries - RealMatrix(expected.asDiagonal())).cwiseAbs().maxCoeff() < 1e-15);
  }
  CHECK_THROWS_AS(chi_from_channel(KrausChannel::identity(3)), DimensionError);
}

TEST_CASE("representation round trips on random channels", "[tomography][property]") {
  testing::Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n_kraus = 1 + static_cast<std::size_t>(trial % 4);
    const auto ch = testing::random_cptp_channel(2, n_kraus, rng);
    const auto choi = choi_from_channel(ch);
    const auto back = channel_from_choi(choi);
    const auto chi = chi_from_channel(ch);
    const auto ptm = ptm_from_channel(ch);
    const auto via_chi = superop_from_chi(chi);
    const auto via_ptm = superop_from_ptm(ptm);
    const auto via_choi = superop_from_choi(choi_from_chi(chi));

    CHECK(std::abs(chi.entries.trace().real() - 1.0) < 1e-10);
    CHECK((ptm.entries.row(0) - Eigen::RowVector4d(1, 0, 0, 0)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(max_abs_diff(chi_from_choi(choi).entries, chi.entries) < 1e-12);
    CHECK(diagnose(choi).tp_deviation < 1e-10);
    CHECK(diagnose(choi).min_eigenvalue > -1e-10);
    CHECK(kraus_rank(choi) <= n_kraus);

    for (int s = 0; s < 5; ++s) {
      const auto rho = testing::random_density_matrix(2, rng);
      const ComplexMatrix target = qcore::apply_kraus(ch, rho.matrix());
      CHECK(max_abs_diff(qcore::apply_kraus(back, rho.matrix()), target) < 1e-10);
      CHECK(max_abs_diff(via_chi.apply(rho.matrix()), target) < 1e-10);
      CHECK(max_abs_diff(via_ptm.apply(rho.matrix()), target) < 1e-10);
      CHECK(max_abs_diff(via_choi.apply(rho.matrix()), target) < 1e-10);
    }
  }
}

TEST_CASE("Kraus reconstruction acts like the channel on 50 states", "[tomography][property]") {
  testing::Rng rng(102);
  const auto ch = testing::random_cptp_channel(4, 3, rng);
  const auto back = channel_from_choi(choi_from_channel(ch));
  for (int s = 0; s < 50; ++s) {
    const auto rho = testing::random_density_matrix(4, rng);
    CHECK(max_abs_diff(qcore::apply_kraus(back, rho.matrix()), qcore::apply_kraus(ch, rho.matrix())) < 1e-10);
  }
}

TEST_CASE("chi of a Pauli channel is its probability vector", "[tomography][property]") {
  testing::Rng rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    const auto pc = testing::random_pauli_channel(1 + trial % 2, rng);
    const auto chi = chi_from_pauli_channel(pc);
    const auto via_kraus = chi_from_channel(qcore::pauli_channel_to_kraus(pc));
    CHECK(max_abs_diff(chi.entries, via_kraus.entries) < 1e-12);
    for (std::size_t a = 0; a < pc.probs().size(); ++a) {
      CHECK(chi.entries(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)).real() == pc.probs()[a]);
    }
  }
}

TEST_CASE("chi json round trip", "[tomography][io]") {
  testing::Rng rng(104);
  const auto chi = chi_from_channel(testing::random_cptp_channel(2, 2, rng));
  const auto back = chi_from_json(parse_json_text(dump_json(chi_to_json(chi))));
  CHECK(back.n_qubits == 1);
  CHECK(max_abs_diff(back.entries, chi.entries) == 0.0);
  CHECK_THROWS_AS(chi_from_json(Json::parse(R"({"entries":[]})")), ParseError);
}

TEST_CASE("sample_counts examples", "[tomography]") {
  const DensityMatrix zero(qcore::basis_state(2, 0));
  const MeasurementSetting z{std::nullopt, {Axis::Z}};
  const auto rec = sample_counts(zero, z, 1000, 1);
  CHECK(rec.counts.at("0") == 1000);
  CHECK(rec.shots == 1000);

  const DensityMatrix plus(qcore::PureState(qcore::ComplexVector::Constant(2, 1.0 / std::sqrt(2.0))));
  const auto plus_rec = sample_counts(plus, z, 1000000, 7);
  CHECK(std::abs(plus_rec.frequency(0) - 0.5) < 0.002);
  CHECK(plus_rec.counts.at("0") + plus_rec.counts.at("1") == 1000000);

  const auto mixed = qcore::maximally_mixed(2);
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    const auto r = sample_counts(mixed, MeasurementSetting{std::nullopt, {a}}, 1000000, 9);
    CHECK(std::abs(r.frequency(0) - 0.5) < 0.002);
    CHECK(std::abs(r.frequency(1) - 0.5) < 0.002);
  }

  const auto again = sample_counts(plus, z, 1000000, 7);
  CHECK(again.counts == plus_rec.counts);
  const auto other = sample_counts(plus, z, 1000000, 8);
  CHECK(other.counts != plus_rec.counts);
  CHECK_THROWS_AS(sample_counts(plus, z, 0, 7), ValidationError);
}

TEST_CASE("two-qubit sampling follows Born probabilities", "[tomography]") {
  const DensityMatrix phi(depolarized_bell(0.6));
  const MeasurementSetting zz{std::nullopt, {Axis::Z, Axis::Z}};
  const auto probs = born_probabilities(phi.matrix(), zz.basis);
  CHECK_THAT(probs[0], WithinAbs(0.4, 1e-15));
  CHECK_THAT(probs[1], WithinAbs(0.1, 1e-15));
  const auto rec = sample_counts(phi, zz, 1000000, 3);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(rec.frequency(k) - probs[k]) < 0.002);
  }
  CHECK(outcome_label(2, 2) == "10");
  CHECK(max_abs_diff(outcome_projector({Axis::Z, Axis::Z}, 2), qcore::basis_state(4, 2).projector()) == 0.0);
}

TEST_CASE("process tomography frame", "[tomography]") {
  const auto frame = process_tomography_frame();
  REQUIRE(frame.size() == 12);
  CHECK(frame.front().preparation == Preparation::Zero);
  CHECK(frame.front().basis == std::vector<Axis>{Axis::X});
  CHECK(frame.back().preparation == Preparation::PlusI);
  CHECK(frame.back().basis == std::vector<Axis>{Axis::Z});
  CHECK(state_tomography_frame(2).size() == 9);
  CHECK(process_frame_metadata()["settings"] == 12);
  CHECK(to_string(Preparation::PlusI) == "+i");
  CHECK(preparation_from_string("+") == Preparation::Plus);
  CHECK_THROWS_AS(axis_from_string("W"), ParseError);
}

TEST_CASE("simulate_process_tomography examples", "[tomography]") {
  const auto id = simulate_process_tomography(KrausChannel::identity(2), kExactShots, 0);
  REQUIRE(id.size() == 12);
  for (const auto& rec : id) {
    CHECK(rec.exact());
    const auto born = born_probabilities(preparation_state(*rec.setting.preparation), rec.setting.basis);
    CHECK(rec.frequency(0) == born[0]);
    CHECK(rec.frequency(1) == born[1]);
  }

  const auto dep0 = simulate_process_tomography(qcore::pauli_channel_to_kraus(qcore::depolarizing_channel(0.0)),
                                                kExactShots, 0);
  for (const auto& rec : dep0) {
    CHECK_THAT(rec.frequency(0), WithinAbs(0.5, 1e-15));
  }

  const auto bf = simulate_process_tomography(qcore::pauli_channel_to_kraus(qcore::bit_flip_channel(0.5)),
                                              kExactShots, 0);
  const auto& zero_z = bf[2];
  REQUIRE(zero_z.setting.preparation == Preparation::Zero);
  REQUIRE(zero_z.setting.basis == std::vector<Axis>{Axis::Z});
  CHECK_THAT(zero_z.frequency(0), WithinAbs(0.5, 1e-15));
  CHECK_THAT(zero_z.frequency(1), WithinAbs(0.5, 1e-15));

  const auto sampled = simulate_process_tomography(KrausChannel::identity(2), 500, 42);
  const auto repeat = simulate_process_tomography(KrausChannel::identity(2), 500, 42);
  for (std::size_t k = 0; k < sampled.size(); ++k) {
    CHECK(sampled[k].counts == repeat[k].counts);
    CHECK(sampled[k].shots == 500);
  }
}

TEST_CASE("mle_state on exact records", "[tomography][mle]") {
  for (bool shortcut : {true, false}) {
    CAPTURE(shortcut);
    MleOptions opts;
    opts.use_inversion_shortcut = shortcut;

    const DensityMatrix zero(qcore::basis_state(2, 0));
    const auto est0 = mle_state(simulate_state_tomography(zero, kExactShots, 0), opts);
    CHECK(qcore::trace_distance(est0.state.matrix(), zero.matrix()) < 1e-6);
    CHECK(non_decreasing(est0.log_likelihood));

    const auto mixed = qcore::maximally_mixed(2);
    const auto est1 = mle_state(simulate_state_tomography(mixed, kExactShots, 0), opts);
    CHECK(qcore::trace_distance(est1.state.matrix(), mixed.matrix()) < 1e-6);

    const DensityMatrix bell(depolarized_bell(0.33));
    const auto est2 = mle_state(simulate_state_tomography(bell, kExactShots, 0), opts);
    CHECK(qcore::trace_distance(est2.state.matrix(), bell.matrix()) < 1e-6);
    CHECK(est2.converged);
  }
}

TEST_CASE("mle_state at 1e6 shots", "[tomography][mle]") {
  const ComplexMatrix truth = depolarized_bell(0.33);
  const auto est = mle_state(simulate_state_tomography(DensityMatrix(truth), 1000000, 2024));
  CHECK(state_fidelity(est.state.matrix(), truth) >= 0.995);
  CHECK(non_decreasing(est.log_likelihood));
  CHECK(qcore::hermitian_eigenvalues(est.state.matrix())(0) >= -1e-12);
  CHECK_THAT(est.state.matrix().trace().real(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("mle_state likelihood is monotone on random data", "[tomography][mle][property]") {
  testing::Rng rng(105);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = testing::random_density_matrix(4, rng);
    MleOptions opts;
    opts.use_inversion_shortcut = false;
    const auto est = mle_state(simulate_state_tomography(rho, 2000, 500 + static_cast<std::uint64_t>(trial)), opts);
    CHECK(non_decreasing(est.log_likelihood));
    CHECK(est.log_likelihood.size() >= 2);
  }
}

TEST_CASE("mle_state rejects incomplete records", "[tomography][mle]") {
  const DensityMatrix zero(qcore::basis_state(2, 0));
  auto records = simulate_state_tomography(zero, kExactShots, 0);
  records.pop_back();
  CHECK_THROWS_AS(mle_state(records), UnderdeterminedError);
  CHECK_THROWS_AS(mle_state(std::vector<CountRecord>{}), UnderdeterminedError);
}

TEST_CASE("mle_process on exact records", "[tomography][mle]") {
  const auto id = simulate_process_tomography(KrausChannel::identity(2), kExactShots, 0);
  const auto dep = simulate_process_tomography(qcore::pauli_channel_to_kraus(qcore::depolarizing_channel(0.5)),
                                               kExactShots, 0);
  const auto id_est = mle_process(id);
  CHECK(chi_error(id_est.chi, chi_from_channel(KrausChannel::identity(2))) < 1e-6);
  const auto dep_est = mle_process(dep);
  CHECK(chi_error(dep_est.chi, chi_from_pauli_channel(qcore::depolarizing_channel(0.5))) < 1e-6);
  CHECK(dep_est.tp_deviation <= 1e-6);

  SECTION("without the inversion shortcut on full-rank channels") {
    MleOptions opts;
    opts.use_inversion_shortcut = false;
    const auto iter = mle_process(dep, opts);
    CHECK_FALSE(iter.from_inversion);
    CHECK(chi_error(iter.chi, chi_from_pauli_channel(qcore::depolarizing_channel(0.5))) < 1e-6);
    CHECK(iter.tp_deviation <= 1e-6);
    CHECK(non_decreasing(iter.log_likelihood));

    testing::Rng rng(106);
    const auto ch = testing::random_cptp_channel(2, 4, rng);
    const auto est = mle_process(simulate_process_tomography(ch, kExactShots, 0), opts);
    CHECK(chi_error(est.chi, chi_from_channel(ch)) < 1e-6);
  }
}

TEST_CASE("mle_process recovers random channels from exact data", "[tomography][mle][property]") {
  testing::Rng rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ch = testing::random_cptp_channel(2, 1 + static_cast<std::size_t>(trial % 4), rng);
    const auto est = mle_process(simulate_process_tomography(ch, kExactShots, 0));
    CHECK(chi_error(est.chi, chi_from_channel(ch)) < 1e-6);
    CHECK(est.tp_deviation <= 1e-6);
  }
}

TEST_CASE("mle_process at 1e5 shots", "[tomography][mle]") {
  const auto truth = chi_from_pauli_channel(qcore::depolarizing_channel(0.5));
  const auto est = mle_process(simulate_process_tomography(
      qcore::pauli_channel_to_kraus(qcore::depolarizing_channel(0.5)), 100000, 77));
  CHECK(std::abs(est.chi.identity_weight() - 0.625) < 0.02);
  CHECK(chi_error(est.chi, truth) < 0.02);
  CHECK(est.tp_deviation <= 1e-6);
  CHECK(non_decreasing(est.log_likelihood));
  CHECK(qcore::hermitian_eigenvalues(est.chi.entries)(0) >= -1e-9);
}

TEST_CASE("mle_process rejects incomplete frames", "[tomography][mle]") {
  auto records = simulate_process_tomography(KrausChannel::identity(2), kExactShots, 0);
  records.erase(records.begin() + 9, records.end());
  CHECK_THROWS_AS(mle_process(records), UnderdeterminedError);
}

TEST_CASE("reconstruction error shrinks with shots", "[tomography][mle][property]") {
  const std::vector<std::uint64_t> shots{1000, 10000, 100000, 1000000};
  const ComplexMatrix truth = depolarized_bell(0.6);
  const auto dep = qcore::pauli_channel_to_kraus(qcore::depolarizing_channel(0.7));
  const auto dep_chi = chi_from_pauli_channel(qcore::depolarizing_channel(0.7));
  constexpr int kSeeds = 5;
  std::vector<double> state_err;
  std::vector<double> process_err;
  for (std::uint64_t n : shots) {
    double s = 0.0;
    double p = 0.0;
    for (int seed = 0; seed < kSeeds; ++seed) {
      const auto u = static_cast<std::uint64_t>(seed);
      s += qcore::trace_distance(mle_state(simulate_state_tomography(DensityMatrix(truth), n, u)).state.matrix(),
                                 truth);
      p += chi_error(mle_process(simulate_process_tomography(dep, n, u)).chi, dep_chi);
    }
    state_err.push_back(s / kSeeds);
    process_err.push_back(p / kSeeds);
  }
  for (std::size_t k = 1; k < shots.size(); ++k) {
    CAPTURE(k, state_err, process_err);
    CHECK(state_err[k] < state_err[k - 1]);
    CHECK(process_err[k] < process_err[k - 1]);
  }
}

TEST_CASE("count records round trip through JSON lines", "[tomography][io]") {
  testing::Rng rng(108);
  const auto ch = testing::random_cptp_channel(2, 2, rng);
  auto records = simulate_process_tomography(ch, 1234, 5);
  const auto exact = simulate_process_tomography(ch, kExactShots, 0);
  records.insert(records.end(), exact.begin(), exact.end());
  std::ostringstream os;
  write_records_jsonl(os, records);
  const auto back = read_records_jsonl(os.str());
  REQUIRE(back.size() == records.size());
  for (std::size_t k = 0; k < back.size(); ++k) {
    CHECK(back[k].setting == records[k].setting);
    CHECK(back[k].shots == records[k].shots);
    CHECK(back[k].counts == records[k].counts);
    CHECK(back[k].probabilities == records[k].probabilities);
  }

  const auto first = record_to_json(records.front());
  CHECK(first["prep"] == "0");
  CHECK(first["basis"] == "X");
  CHECK(first["shots"] == 1234);

  const auto two = read_records_jsonl(R"({"basis":"XZ","counts":{"00":3,"11":1},"shots":4})");
  CHECK_FALSE(two.front().setting.preparation.has_value());
  CHECK(two.front().setting.basis == std::vector<Axis>{Axis::X, Axis::Z});
}

TEST_CASE("count record validation", "[tomography][io]") {
  CHECK_THROWS_AS(read_records_jsonl(R"({"prep":"0","basis":"Z","counts":{"0":3,"1":1},"shots":5})"),
                  ValidationError);
  CHECK_THROWS_AS(read_records_jsonl(R"({"prep":"0","basis":"Z","counts":{"2":3},"shots":3})"), ParseError);
  CHECK_THROWS_AS(read_records_jsonl(R"({"prep":"-","basis":"Z","counts":{"0":1},"shots":1})"), ParseError);
  CHECK_THROWS_AS(read_records_jsonl(R"({"prep":"0","basis":"Z","shots":"exact","probs":{"0":0.3,"1":0.3}})"),
                  ValidationError);
  try {
    read_records_jsonl("{\"prep\":\"0\",\"basis\":\"Z\",\"counts\":{\"0\":1},\"shots\":1}\n{\"prep\":\"0\",\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}
