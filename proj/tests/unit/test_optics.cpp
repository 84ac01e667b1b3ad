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
#include <numbers>
#include <random>

#include "catch_amalgamated.hpp"
#include "chanpur/error.hpp"
#include "chanpur/optics/beam_splitter.hpp"
#include "chanpur/optics/jones.hpp"
#include "chanpur/purify/twirl.hpp"
#include "chanpur/qcore/channel.hpp"
#include "chanpur/qcore/pauli.hpp"
#include "support/random.hpp"

using namespace chanpur;
using namespace chanpur::optics;
using qcore::Complex;
using qcore::ComplexMatrix;
using qcore::max_abs_diff;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

ComplexMatrix diag2(Complex a, Complex b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

BsPhases random_balanced(testing::Rng& rng) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  BsPhases p;
  p.phi0 = {angle(rng), angle(rng)};
  p.tau = {angle(rng), angle(rng)};
  p.rho = {angle(rng), angle(rng)};
  return p;
}

}  // namespace

TEST_CASE("wave plates", "[optics]") {
  const ComplexMatrix h = hwp(degrees(22.5));
  qcore::ComplexVector horizontal(2);
  horizontal << 1.0, 0.0;
  qcore::ComplexVector diagonal(2);
  diagonal << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(std::abs(std::abs(diagonal.dot(h * horizontal)) - 1.0) < 1e-15);

  // The half-wave plate is a reflection in this convention: HWP^2 = I.
  testing::Rng rng(401);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int k = 0; k < 20; ++k) {
    const double t = angle(rng);
    CHECK(qcore::is_unitary(hwp(t), 1e-12));
    CHECK(qcore::is_unitary(qwp(t), 1e-12));
    CHECK(max_abs_diff(hwp(t) * hwp(t), qcore::identity(2)) < 1e-15);
  }

  const ComplexMatrix flat = qwp(kPi / 4) * hwp(kPi / 4) * qwp(kPi / 4);
  CHECK(distance_up_to_global_phase(flat, qcore::identity(2)) < 1e-12);
  const ComplexMatrix quarter = qwp(kPi / 4) * hwp(0.0) * qwp(kPi / 4);
  CHECK(distance_up_to_global_phase(quarter, diag2(kI, -kI)) < 1e-12);
}

TEST_CASE("QWP-HWP-QWP is a tunable phase", "[optics][property]") {
  testing::Rng rng(402);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int k = 0; k < 100; ++k) {
    const double theta = angle(rng);
    const double big = 2.0 * (theta - kPi / 4);
    const ComplexMatrix m = qwp(kPi / 4) * hwp(theta) * qwp(kPi / 4);
    const ComplexMatrix target = diag2(std::polar(1.0, -big), std::polar(1.0, big));
    CHECK(max_abs_diff(m, target) < 1e-12);
  }
}

TEST_CASE("wave-plate settings for the Pauli channels", "[optics]") {
  const auto rows = pauli_waveplate_settings();
  REQUIRE(rows.size() == 4);
  const ComplexMatrix x = qcore::pauli_matrix(qcore::Pauli::X);
  const ComplexMatrix y = qcore::pauli_matrix(qcore::Pauli::Y);
  const ComplexMatrix z = qcore::pauli_matrix(qcore::Pauli::Z);
  const std::vector<ComplexMatrix> targets{qcore::identity(2), -kI * x, -kI * y, -kI * z};
  const std::vector<std::string> labels{"I", "-iX", "-iY", "-iZ"};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CAPTURE(rows[k].label);
    CHECK(rows[k].label == labels[k]);
    CHECK(max_abs_diff(rows[k].target, targets[k]) == 0.0);
    const ComplexMatrix m = waveplate_chain(rows[k].chain);
    CHECK(qcore::is_unitary(m, 1e-12));
    CHECK(distance_up_to_global_phase(m, targets[k]) <= 1e-12);
  }

  const std::vector<WavePlateSetting> x_row{{WavePlate::QWP, 0.0}, {WavePlate::HWP, degrees(45)},
                                            {WavePlate::QWP, 0.0}};
  CHECK(distance_up_to_global_phase(waveplate_chain(x_row), x) < 1e-12);
  const std::vector<WavePlateSetting> y_row{{WavePlate::QWP, 0.0}, {WavePlate::HWP, degrees(45)},
                                            {WavePlate::QWP, degrees(90)}};
  CHECK(distance_up_to_global_phase(waveplate_chain(y_row), y) < 1e-12);
  CHECK_THROWS_AS(waveplate_chain({}), ValidationError);
}

TEST_CASE("chain order applies the first element first", "[optics]") {
  const std::vector<WavePlateSetting> chain{{WavePlate::HWP, 0.3}, {WavePlate::QWP, 0.2}};
  CHECK(max_abs_diff(waveplate_chain(chain), qwp(0.2) * hwp(0.3)) < 1e-15);
}

TEST_CASE("axis-angle rotations", "[optics]") {
  CHECK(max_abs_diff(rotation_from_axis_angle({0, 0, 1}, 0.0), qcore::identity(2)) < 1e-15);
  CHECK(max_abs_diff(rotation_from_axis_angle({1, 0, 0}, kPi), -kI * qcore::pauli_matrix(qcore::Pauli::X)) < 1e-15);
  const ComplexMatrix expected = (qcore::identity(2) - kI * qcore::pauli_matrix(qcore::Pauli::Z)) / std::sqrt(2.0);
  CHECK(max_abs_diff(rotation_from_axis_angle({0, 0, 1}, kPi / 2), expected) < 1e-15);
  CHECK_THROWS_AS(rotation_from_axis_angle({1, 1, 0}, 0.5), ValidationError);
}

TEST_CASE("twirled rotations spread sin^2 over the axis", "[optics][property]") {
  testing::Rng rng(403);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int k = 0; k < 50; ++k) {
    std::array<double, 3> n{g(rng), g(rng), g(rng)};
    const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    for (double& c : n) {
      c /= norm;
    }
    const double theta = angle(rng);
    const ComplexMatrix u = rotation_from_axis_angle(n, theta);
    CHECK(qcore::is_unitary(u, 1e-12));
    const auto tw = purify::pauli_twirl(qcore::KrausChannel::unitary(u));
    const double s2 = std::pow(std::sin(theta / 2), 2);
    CHECK_THAT(tw.prob(0), WithinAbs(std::pow(std::cos(theta / 2), 2), 1e-10));
    for (std::size_t a = 0; a < 3; ++a) {
      CHECK_THAT(tw.prob(a + 1), WithinAbs(s2 * n[a] * n[a], 1e-10));
    }
  }
}

TEST_CASE("beam splitter matrix", "[optics]") {
  const BsPhases zero;
  const ComplexMatrix u = bs_unitary(zero, Polarization::H);
  ComplexMatrix expected(2, 2);
  expected << 1.0, 1.0, -1.0, 1.0;
  expected /= std::sqrt(2.0);
  CHECK(max_abs_diff(u, expected) < 1e-15);

  BsPhases mirror;
  mirror.R = 1.0;
  mirror.T = 0.0;
  mirror.tau = {0.4, -0.2};
  const ComplexMatrix m = bs_unitary(mirror, Polarization::V);
  CHECK(std::abs(m(0, 1)) == 0.0);
  CHECK(std::abs(m(1, 0)) == 0.0);

  testing::Rng rng(404);
  for (int k = 0; k < 20; ++k) {
    BsPhases p = random_balanced(rng);
    p.R = 0.3;
    p.T = 0.7;
    for (Polarization pol : {Polarization::H, Polarization::V}) {
      const ComplexMatrix b = bs_unitary(p, pol);
      CHECK(qcore::is_unitary(b, 1e-12));
      CHECK_THAT(std::abs(b.determinant()), WithinAbs(1.0, 1e-12));
    }
  }
  BsPhases lossy;
  lossy.R = 0.6;
  lossy.T = 0.6;
  CHECK_THROWS_AS(bs_unitary(lossy, Polarization::H), ValidationError);
}

TEST_CASE("compensation examples", "[optics]") {
  const BsPhases zero;
  const auto c = solve_compensation(zero);
  CHECK(c.theta1 == 0.0);
  CHECK_THAT(std::abs(canonical_angle(c.theta1 - c.theta2)), WithinAbs(kPi, 1e-12));
  CHECK_THAT(c.delta, WithinAbs(0.0, 1e-15));
  const auto check = verify_spatial_hadamard(zero, c);
  CHECK(check.ok);
  CHECK(check.residual <= 1e-10);

  BsPhases quarter;
  quarter.rho = {kPi / 2, kPi / 2};
  quarter.tau = {kPi / 2, kPi / 2};
  const auto q = solve_compensation(quarter);
  CHECK_THAT(std::abs(q.delta), WithinAbs(kPi, 1e-12));
  CHECK_THAT(std::abs(canonical_angle(q.theta1 - q.theta2)), WithinAbs(kPi, 1e-12));
  CHECK(verify_spatial_hadamard(quarter, q).ok);

  BsPhases unbalanced;
  unbalanced.R = 0.6;
  unbalanced.T = 0.4;
  CHECK_THROWS_AS(solve_compensation(unbalanced), UnsupportedConfigurationError);
  CHECK_THROWS_AS(solve_compensation(unbalanced), ValidationError);
}

TEST_CASE("solved compensation yields a spatial Hadamard", "[optics][property]") {
  testing::Rng rng(405);
  const double h = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < 100; ++k) {
    const BsPhases p = random_balanced(rng);
    const auto c = solve_compensation(p);
    for (double angle : {c.theta1, c.theta2, c.theta3, c.theta4, c.delta}) {
      CHECK(angle > -kPi);
      CHECK(angle <= kPi);
    }
    CHECK(compensation_residual(p, c) <= 1e-10);
    const auto check = verify_spatial_hadamard(p, c);
    CHECK(check.ok);
    CHECK(check.residual <= 1e-10);

    // Independent look at the composite: identical polarization blocks whose
    // rows are phased rows of the Hadamard matrix.
    const ComplexMatrix w = composite_operator(p, c);
    CHECK(max_abs_diff(w.topLeftCorner(2, 2), w.bottomRightCorner(2, 2)) < 1e-10);
    CHECK(qcore::max_abs(w.topRightCorner(2, 2)) < 1e-15);
    const ComplexMatrix block = w.topLeftCorner(2, 2);
    CHECK(std::abs(block(0, 0) - block(0, 1)) < 1e-10);
    CHECK(std::abs(block(1, 0) + block(1, 1)) < 1e-10);
    CHECK_THAT(std::abs(block(0, 0)), WithinAbs(h, 1e-12));

    qcore::ComplexVector plus(4);
    plus << Complex{0.6 * h, 0.0}, Complex{0.6 * h, 0.0}, Complex{0.0, 0.8 * h}, Complex{0.0, 0.8 * h};
    const qcore::ComplexVector out = w * plus;
    CHECK(std::norm(out(0)) + std::norm(out(2)) > 1.0 - 1e-10);
  }
}

TEST_CASE("dropping the output tuners couples polarization but keeps the spatial gate", "[optics]") {
  BsPhases p;
  p.phi0 = {0.3, -0.4};
  p.tau = {0.2, 0.5};
  p.rho = {-0.7, 0.1};
  auto c = solve_compensation(p);
  REQUIRE(std::abs(c.theta3) > 1e-3);
  c.theta3 = 0.0;
  c.theta4 = 0.0;
  const auto check = verify_spatial_hadamard(p, c);
  CHECK_FALSE(check.ok);
  CHECK(check.polarization_residual > 1e-3);
  CHECK(check.spatial_residual <= 1e-10);

  // Tracing out polarization, spatial |+> still leaves on path 0.
  const ComplexMatrix w = composite_operator(p, c);
  const double h = 1.0 / std::sqrt(2.0);
  for (const auto& [a, b] : {std::pair<Complex, Complex>{1.0, 0.0}, {0.0, 1.0}, {h, Complex{0.0, h}}}) {
    qcore::ComplexVector in(4);
    in << a * h, a * h, b * h, b * h;
    const qcore::ComplexVector out = w * in;
    CHECK(std::norm(out(1)) + std::norm(out(3)) < 1e-12);
  }
}

TEST_CASE("beam-splitter records", "[optics][io]") {
  const auto p = bs_phases_from_json(Json::parse(R"({"R":0.5,"T":0.5,"phi_rho_V":0.25})"));
  CHECK(p.rho.V == 0.25);
  CHECK(p.tau.H == 0.0);
  const auto back = bs_phases_from_json(to_json(p));
  CHECK(back.rho.V == p.rho.V);
  CHECK_THROWS_AS(bs_phases_from_json(Json::parse(R"({"T":0.5})")), ParseError);
  CHECK_THROWS_AS(bs_phases_from_json(Json::parse(R"({"R":0.5,"T":"half"})")), ParseError);
  CHECK_THROWS_AS(bs_phases_from_json(Json::parse(R"({"R":0.9,"T":0.5})")), ValidationError);
  const Json c = to_json(solve_compensation(p));
  CHECK(c.contains("theta4"));
  CHECK(c.contains("delta"));
  CHECK(to_json(verify_spatial_hadamard(p, solve_compensation(p)))["ok"] == true);
}

TEST_CASE("canonical angles", "[optics]") {
  CHECK_THAT(canonical_angle(3.0 * kPi), WithinAbs(kPi, 1e-12));
  CHECK(canonical_angle(-kPi) > 0.0);
  CHECK_THAT(canonical_angle(0.5 + 4.0 * kPi), WithinAbs(0.5, 1e-12));
  CHECK_THROWS_AS(canonical_angle(std::nan("")), ValidationError);
}
