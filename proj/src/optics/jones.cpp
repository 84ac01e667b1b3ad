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

#include "chanpur/optics/jones.hpp"

#include <cmath>
#include <numbers>

#include "chanpur/error.hpp"
#include "chanpur/qcore/pauli.hpp"

namespace chanpur::optics {

namespace {

using qcore::Complex;
const Complex kI{0.0, 1.0};

}  // namespace

double degrees(double deg) { return deg * std::numbers::pi / 180.0; }

JonesMatrix hwp(double theta) {
  const double c = std::cos(2.0 * theta);
  const double s = std::sin(2.0 * theta);
  JonesMatrix m(2, 2);
  m << c, s, s, -c;
  return m;
}

JonesMatrix qwp(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  JonesMatrix m(2, 2);
  m << c * c + kI * s * s, (1.0 - kI) * s * c, (1.0 - kI) * s * c, s * s + kI * c * c;
  return m;
}

JonesMatrix waveplate(const WavePlateSetting& setting) {
  return setting.element == WavePlate::HWP ? hwp(setting.angle) : qwp(setting.angle);
}

JonesMatrix waveplate_chain(std::span<const WavePlateSetting> settings) {
  if (settings.empty()) {
    throw ValidationError("waveplate_chain: empty chain");
  }
  JonesMatrix m = qcore::identity(2);
  for (const WavePlateSetting& s : settings) {
    m = waveplate(s) * m;
  }
  return m;
}

JonesMatrix rotation_from_axis_angle(const std::array<double, 3>& axis, double theta) {
  const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!(std::abs(norm - 1.0) <= 1e-9)) {
    throw ValidationError("rotation axis must be a unit vector");
  }
  using qcore::Pauli;
  const double s = std::sin(theta / 2.0);
  return std::cos(theta / 2.0) * qcore::identity(2) -
         kI * s *
             (axis[0] * qcore::pauli_matrix(Pauli::X) + axis[1] * qcore::pauli_matrix(Pauli::Y) +
              axis[2] * qcore::pauli_matrix(Pauli::Z));
}

double distance_up_to_global_phase(const qcore::ComplexMatrix& a, const qcore::ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("distance_up_to_global_phase: shape mismatch");
  }
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0 || std::abs(a(r, c)) == 0.0) {
    return qcore::max_abs_diff(a, b);
  }
  const Complex ratio = a(r, c) / b(r, c);
  const Complex phase = ratio / std::abs(ratio);
  return qcore::max_abs_diff(a, phase * b);
}

std::vector<PauliSetting> pauli_waveplate_settings() {
  using qcore::Pauli;
  const auto row = [](std::string label, double q1, double h, double q2, JonesMatrix target) {
    return PauliSetting{std::move(label),
                        {{WavePlate::QWP, degrees(q1)}, {WavePlate::HWP, degrees(h)},
                         {WavePlate::QWP, degrees(q2)}},
                        std::move(target)};
  };
  return {
      row("I", 0, 0, 0, qcore::identity(2)),
      row("-iX", 0, 45, 0, -kI * qcore::pauli_matrix(Pauli::X)),
      row("-iY", 0, 45, 90, -kI * qcore::pauli_matrix(Pauli::Y)),
      row("-iZ", 0, 0, 90, -kI * qcore::pauli_matrix(Pauli::Z)),
  };
}

}  // namespace chanpur::optics
