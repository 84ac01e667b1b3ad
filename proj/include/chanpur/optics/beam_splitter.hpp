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

#ifndef CHANPUR_OPTICS_BEAM_SPLITTER_HPP
#define CHANPUR_OPTICS_BEAM_SPLITTER_HPP

#include "chanpur/qcore/linalg.hpp"
#include "chanpur/qcore/serialization.hpp"

namespace chanpur::optics {

enum class Polarization { H, V };

struct PolarizedPhase {
  double H = 0.0;
  double V = 0.0;

  double operator[](Polarization p) const noexcept { return p == Polarization::H ? H : V; }
};

/// Beam-splitter parameters. Phases are radians and may differ between the
/// two polarizations.
struct BsPhases {
  double R = 0.5;
  double T = 0.5;
  PolarizedPhase phi0;
  PolarizedPhase tau;
  PolarizedPhase rho;
};

/// Phase-tuner and tilt settings, all in (-pi, pi].
struct Compensation {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  double theta4 = 0.0;
  double delta = 0.0;
};

/// Maps an angle into (-pi, pi].
double canonical_angle(double x);

/// Throws ValidationError unless R, T >= 0 and R + T = 1 within 1e-12.
void validate(const BsPhases& phases);

/// e^{i phi0} [[sqrt(R) e^{i tau}, sqrt(T) e^{i rho}],
///             [-sqrt(T) e^{-i rho}, sqrt(R) e^{-i tau}]]
/// for one polarization. Output path j receives sum_i U(i, j) in_i, i.e.
/// the field amplitudes transform with the transpose.
qcore::ComplexMatrix bs_unitary(const BsPhases& phases, Polarization pol);

/// Pins theta1 = 0 and solves
///   theta1 - theta2 + delta = rho_H + tau_H + pi
///   theta1 - theta2 - delta = -rho_V - tau_V + pi
///   2 theta3 = phi0_H + tau_H - phi0_V - tau_V - 2 theta1
///   2 theta4 = phi0_H + rho_H - phi0_V - rho_V - 2 theta1
/// modulo 2 pi. Throws UnsupportedConfigurationError unless R = T.
Compensation solve_compensation(const BsPhases& phases);

/// Largest violation of the four equations above, modulo 2 pi.
double compensation_residual(const BsPhases& phases, const Compensation& comp);

/// Phase tuners, tilt, beam splitter and output tuners on
/// polarization (x) path, index 2 * pol + path.
qcore::ComplexMatrix composite_operator(const BsPhases& phases, const Compensation& comp);

struct HadamardCheck {
  bool ok = false;
  /// Deviation from (polarization phase map) (x) (path phases) H.
  double residual = 0.0;
  /// Largest probability of leaving on path 1 for a |+> path input, over
  /// H, V, D and R polarizations.
  double spatial_residual = 0.0;
  /// Deviation of the polarization map from a multiple of the identity.
  double polarization_residual = 0.0;
};

HadamardCheck verify_spatial_hadamard(const BsPhases& phases, const Compensation& comp,
                                      double tol = 1e-10);

/// {"R", "T", "phi0_H", "phi0_V", "phi_tau_H", "phi_tau_V", "phi_rho_H",
///  "phi_rho_V"}; phases default to zero.
BsPhases bs_phases_from_json(const Json& j);
Json to_json(const BsPhases& phases);
Json to_json(const Compensation& comp);
Json to_json(const HadamardCheck& check);

}  // namespace chanpur::optics

#endif  // CHANPUR_OPTICS_BEAM_SPLITTER_HPP
