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

#ifndef CHANPUR_OPTICS_JONES_HPP
#define CHANPUR_OPTICS_JONES_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "chanpur/qcore/linalg.hpp"

namespace chanpur::optics {

/// 2 x 2 complex matrix on the (H, V) polarization basis.
using JonesMatrix = qcore::ComplexMatrix;

enum class WavePlate { HWP, QWP };

struct WavePlateSetting {
  WavePlate element = WavePlate::HWP;
  /// Fast-axis angle in radians.
  double angle = 0.0;
};

/// [[cos 2t, sin 2t], [sin 2t, -cos 2t]]. HWP(t)^2 = I.
JonesMatrix hwp(double theta);

/// [[c^2 + i s^2, (1 - i) s c], [(1 - i) s c, s^2 + i c^2]] with c = cos t,
/// s = sin t. With these conventions
///   QWP(pi/4) HWP(t) QWP(pi/4) = diag(exp(-i T), exp(i T)),  T = 2 (t - pi/4).
JonesMatrix qwp(double theta);

JonesMatrix waveplate(const WavePlateSetting& setting);

/// Product of the elements, the first one acting first. Throws
/// ValidationError for an empty chain.
JonesMatrix waveplate_chain(std::span<const WavePlateSetting> settings);

/// cos(t/2) I + sin(t/2) (n_x (-iX) + n_y (-iY) + n_z (-iZ)). Throws
/// ValidationError unless |n| = 1 within 1e-9.
JonesMatrix rotation_from_axis_angle(const std::array<double, 3>& axis, double theta);

/// max |a - e^{i phi} b| with phi fixed by the largest-magnitude entry of b.
double distance_up_to_global_phase(const qcore::ComplexMatrix& a, const qcore::ComplexMatrix& b);

/// One row of the Pauli wave-plate table: QWP, HWP, QWP angles and the
/// operator they realise up to global phase.
struct PauliSetting {
  std::string label;
  std::vector<WavePlateSetting> chain;
  JonesMatrix target;
};

/// Rows for I, -iX, -iY and -iZ.
std::vector<PauliSetting> pauli_waveplate_settings();

double degrees(double deg);

}  // namespace chanpur::optics

#endif  // CHANPUR_OPTICS_JONES_HPP
