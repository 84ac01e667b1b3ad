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

#include "chanpur/optics/beam_splitter.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "chanpur/error.hpp"

namespace chanpur::optics {

namespace {

using qcore::Complex;
using qcore::ComplexMatrix;

constexpr double kPi = std::numbers::pi;

Complex phase(double x) { return std::polar(1.0, x); }

/// Distance of x from the nearest multiple of 2 pi.
double angle_residual(double x) { return std::abs(canonical_angle(x)); }

double read_real(const Json& j, const char* key, double fallback, bool required) {
  if (!j.contains(key)) {
    if (required) {
      throw ParseError(std::string("beam-splitter record needs \"") + key + "\"");
    }
    return fallback;
  }
  if (!j[key].is_number()) {
    throw ParseError(std::string("\"") + key + "\" must be a number");
  }
  return j[key].get<double>();
}

}  // namespace

double canonical_angle(double x) {
  if (!std::isfinite(x)) {
    throw ValidationError("angle must be finite");
  }
  double y = std::remainder(x, 2.0 * kPi);
  if (y <= -kPi) {
    y += 2.0 * kPi;
  }
  return y;
}

void validate(const BsPhases& p) {
  if (!(p.R >= 0.0 && p.T >= 0.0) || std::abs(p.R + p.T - 1.0) > 1e-12) {
    throw ValidationError("beam splitter needs R, T >= 0 with R + T = 1");
  }
  for (double x : {p.phi0.H, p.phi0.V, p.tau.H, p.tau.V, p.rho.H, p.rho.V}) {
    if (!std::isfinite(x)) {
      throw ValidationError("beam-splitter phases must be finite");
    }
  }
}

ComplexMatrix bs_unitary(const BsPhases& p, Polarization pol) {
  validate(p);
  const double r = std::sqrt(p.R);
  const double t = std::sqrt(p.T);
  const double tau = p.tau[pol];
  const double rho = p.rho[pol];
  ComplexMatrix u(2, 2);
  u << r * phase(tau), t * phase(rho), -t * phase(-rho), r * phase(-tau);
  return phase(p.phi0[pol]) * u;
}

Compensation solve_compensation(const BsPhases& p) {
  validate(p);
  if (std::abs(p.R - p.T) > 1e-12) {
    throw UnsupportedConfigurationError("compensation is solved only for a balanced (R = T) beam splitter");
  }
  Compensation c;
  c.theta1 = 0.0;
  const double diff = 0.5 * (p.rho.H + p.tau.H - p.rho.V - p.tau.V) + kPi;
  c.theta2 = canonical_angle(c.theta1 - diff);
  c.delta = canonical_angle(0.5 * (p.rho.H + p.tau.H + p.rho.V + p.tau.V));
  c.theta3 = canonical_angle(0.5 * (p.phi0.H + p.tau.H - p.phi0.V - p.tau.V) - c.theta1);
  c.theta4 = canonical_angle(0.5 * (p.phi0.H + p.rho.H - p.phi0.V - p.rho.V) - c.theta1);
  return c;
}

double compensation_residual(const BsPhases& p, const Compensation& c) {
  const std::array<double, 4> r{
      angle_residual(c.theta1 - c.theta2 + c.delta - (p.rho.H + p.tau.H + kPi)),
      angle_residual(c.theta1 - c.theta2 - c.delta - (-p.rho.V - p.tau.V + kPi)),
      angle_residual(2.0 * c.theta3 - (p.phi0.H + p.tau.H - p.phi0.V - p.tau.V - 2.0 * c.theta1)),
      angle_residual(2.0 * c.theta4 - (p.phi0.H + p.rho.H - p.phi0.V - p.rho.V - 2.0 * c.theta1)),
  };
  return *std::max_element(r.begin(), r.end());
}

ComplexMatrix composite_operator(const BsPhases& p, const Compensation& c) {
  // Index 2 * pol + path with pol H = 0, V = 1.
  ComplexMatrix before = ComplexMatrix::Zero(4, 4);
  before(0, 0) = phase(-c.theta1);
  before(1, 1) = phase(c.delta - c.theta2);
  before(2, 2) = phase(c.theta1);
  before(3, 3) = phase(c.delta + c.theta2);
  ComplexMatrix bs = ComplexMatrix::Zero(4, 4);
  bs.topLeftCorner(2, 2) = bs_unitary(p, Polarization::H).transpose();
  bs.bottomRightCorner(2, 2) = bs_unitary(p, Polarization::V).transpose();
  ComplexMatrix after = ComplexMatrix::Zero(4, 4);
  after(0, 0) = phase(-c.theta3);
  after(1, 1) = phase(-c.theta4);
  after(2, 2) = phase(c.theta3);
  after(3, 3) = phase(c.theta4);
  return after * bs * before;
}

HadamardCheck verify_spatial_hadamard(const BsPhases& p, const Compensation& c, double tol) {
  const ComplexMatrix w = composite_operator(p, c);
  const double h = 1.0 / std::sqrt(2.0);
  const std::array<std::array<double, 2>, 2> had{{{h, h}, {h, -h}}};
  HadamardCheck check;
  // Polarization is never mixed by any element.
  double residual = std::max(w.topRightCorner(2, 2).cwiseAbs().maxCoeff(),
                             w.bottomLeftCorner(2, 2).cwiseAbs().maxCoeff());
  // Each output row of each polarization block is a phase times a row of H.
  std::array<std::array<Complex, 2>, 2> coeff{};
  for (int pol = 0; pol < 2; ++pol) {
    for (int j = 0; j < 2; ++j) {
      const Complex cj = w(2 * pol + j, 2 * pol) / had[j][0];
      coeff[pol][j] = cj;
      for (int i = 0; i < 2; ++i) {
        residual = std::max(residual, std::abs(w(2 * pol + j, 2 * pol + i) - cj * had[j][i]));
      }
    }
  }
  // Factorization: the V/H phase ratio may not depend on the output path.
  residual = std::max(residual, std::abs(coeff[1][1] * coeff[0][0] - coeff[1][0] * coeff[0][1]));
  check.residual = residual;
  check.polarization_residual =
      std::max(std::abs(coeff[0][0] - coeff[1][0]), std::abs(coeff[0][1] - coeff[1][1]));

  const std::array<std::array<Complex, 2>, 4> pols{{{1.0, 0.0},
                                                    {0.0, 1.0},
                                                    {h, h},
                                                    {Complex{h, 0.0}, Complex{0.0, -h}}}};
  for (const auto& pol : pols) {
    qcore::ComplexVector in(4);
    in << pol[0] * h, pol[0] * h, pol[1] * h, pol[1] * h;
    const qcore::ComplexVector out = w * in;
    const double path1 = std::norm(out(1)) + std::norm(out(3));
    check.spatial_residual = std::max(check.spatial_residual, path1);
  }
  check.ok = check.residual <= tol && check.spatial_residual <= tol;
  return check;
}

BsPhases bs_phases_from_json(const Json& j) {
  if (!j.is_object()) {
    throw ParseError("beam-splitter record must be a JSON object");
  }
  BsPhases p;
  p.R = read_real(j, "R", 0.5, true);
  p.T = read_real(j, "T", 0.5, true);
  p.phi0.H = read_real(j, "phi0_H", 0.0, false);
  p.phi0.V = read_real(j, "phi0_V", 0.0, false);
  p.tau.H = read_real(j, "phi_tau_H", 0.0, false);
  p.tau.V = read_real(j, "phi_tau_V", 0.0, false);
  p.rho.H = read_real(j, "phi_rho_H", 0.0, false);
  p.rho.V = read_real(j, "phi_rho_V", 0.0, false);
  validate(p);
  return p;
}

Json to_json(const BsPhases& p) {
  Json j;
  j["R"] = p.R;
  j["T"] = p.T;
  j["phi0_H"] = p.phi0.H;
  j["phi0_V"] = p.phi0.V;
  j["phi_tau_H"] = p.tau.H;
  j["phi_tau_V"] = p.tau.V;
  j["phi_rho_H"] = p.rho.H;
  j["phi_rho_V"] = p.rho.V;
  return j;
}

Json to_json(const Compensation& c) {
  Json j;
  j["theta1"] = c.theta1;
  j["theta2"] = c.theta2;
  j["theta3"] = c.theta3;
  j["theta4"] = c.theta4;
  j["delta"] = c.delta;
  return j;
}

Json to_json(const HadamardCheck& check) {
  Json j;
  j["ok"] = check.ok;
  j["residual"] = check.residual;
  j["spatial_residual"] = check.spatial_residual;
  j["polarization_residual"] = check.polarization_residual;
  return j;
}

}  // namespace chanpur::optics
