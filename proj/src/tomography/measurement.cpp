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

#include "chanpur/tomography/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "chanpur/error.hpp"

namespace chanpur::tomography {

namespace {

const Complex kI{0.0, 1.0};

ComplexVector eigenvector(Axis axis, int bit) {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexVector v(2);
  switch (axis) {
    case Axis::Z:
      v << (bit == 0 ? 1.0 : 0.0), (bit == 0 ? 0.0 : 1.0);
      break;
    case Axis::X:
      v << r, (bit == 0 ? r : -r);
      break;
    case Axis::Y:
      v << Complex{r, 0.0}, (bit == 0 ? kI * r : -kI * r);
      break;
  }
  return v;
}

}  // namespace

std::string to_string(Preparation p) {
  switch (p) {
    case Preparation::Zero:
      return "0";
    case Preparation::One:
      return "1";
    case Preparation::Plus:
      return "+";
    case Preparation::PlusI:
      return "+i";
  }
  return "?";
}

std::string to_string(Axis a) {
  switch (a) {
    case Axis::X:
      return "X";
    case Axis::Y:
      return "Y";
    case Axis::Z:
      return "Z";
  }
  return "?";
}

Preparation preparation_from_string(std::string_view s) {
  if (s == "0") return Preparation::Zero;
  if (s == "1") return Preparation::One;
  if (s == "+") return Preparation::Plus;
  if (s == "+i") return Preparation::PlusI;
  throw ParseError("unknown preparation \"" + std::string(s) + "\"");
}

Axis axis_from_string(std::string_view s) {
  if (s == "X") return Axis::X;
  if (s == "Y") return Axis::Y;
  if (s == "Z") return Axis::Z;
  throw ParseError("unknown measurement axis \"" + std::string(s) + "\"");
}

ComplexMatrix preparation_state(Preparation p) {
  ComplexVector v(2);
  const double r = 1.0 / std::sqrt(2.0);
  switch (p) {
    case Preparation::Zero:
      v << 1.0, 0.0;
      break;
    case Preparation::One:
      v << 0.0, 1.0;
      break;
    case Preparation::Plus:
      v << r, r;
      break;
    case Preparation::PlusI:
      v << Complex{r, 0.0}, kI * r;
      break;
  }
  return v * v.adjoint();
}

double CountRecord::frequency(std::size_t outcome) const {
  const std::string label = outcome_label(outcome, setting.n_qubits());
  if (exact()) {
    const auto it = probabilities.find(label);
    return it == probabilities.end() ? 0.0 : it->second;
  }
  if (shots == 0) {
    return 0.0;
  }
  const auto it = counts.find(label);
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(shots);
}

std::string outcome_label(std::size_t outcome, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int q = n_qubits; q-- > 0;) {
    s[static_cast<std::size_t>(q)] = static_cast<char>('0' + (outcome & 1U));
    outcome >>= 1U;
  }
  return s;
}

ComplexMatrix outcome_projector(const std::vector<Axis>& basis, std::size_t outcome) {
  if (basis.empty()) {
    throw DimensionError("measurement basis must cover at least one qubit");
  }
  const int n = static_cast<int>(basis.size());
  ComplexVector v = ComplexVector::Ones(1);
  for (int q = 0; q < n; ++q) {
    const int bit = static_cast<int>((outcome >> (n - 1 - q)) & 1U);
    const ComplexVector e = eigenvector(basis[static_cast<std::size_t>(q)], bit);
    ComplexVector next(v.size() * 2);
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      next(2 * k) = v(k) * e(0);
      next(2 * k + 1) = v(k) * e(1);
    }
    v = std::move(next);
  }
  return v * v.adjoint();
}

std::vector<double> born_probabilities(const ComplexMatrix& rho, const std::vector<Axis>& basis) {
  const std::size_t outcomes = std::size_t{1} << basis.size();
  if (static_cast<std::size_t>(rho.rows()) != outcomes || !qcore::is_square(rho)) {
    throw DimensionError("born_probabilities: state does not match the measured qubits");
  }
  std::vector<double> probs(outcomes);
  double total = 0.0;
  for (std::size_t k = 0; k < outcomes; ++k) {
    probs[k] = std::max(0.0, (rho * outcome_projector(basis, k)).trace().real());
    total += probs[k];
  }
  if (!(total > 0.0)) {
    throw ValidationError("born_probabilities: state has no positive outcome weight");
  }
  for (double& p : probs) {
    p /= total;
  }
  return probs;
}

CountRecord sample_counts(const qcore::DensityMatrix& rho, const MeasurementSetting& setting,
                          std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) {
    throw ValidationError("sample_counts: shots must be >= 1");
  }
  const std::vector<double> probs = born_probabilities(rho.matrix(), setting.basis);
  CountRecord record;
  record.setting = setting;
  record.shots = shots;
  const int n = setting.n_qubits();
  if (shots == kExactShots) {
    for (std::size_t k = 0; k < probs.size(); ++k) {
      record.probabilities[outcome_label(k, n)] = probs[k];
    }
    return record;
  }
  // Multinomial draw as a chain of conditional binomials.
  std::mt19937_64 rng(seed);
  std::uint64_t remaining = shots;
  double mass = 1.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    std::uint64_t n_k = 0;
    if (k + 1 == probs.size()) {
      n_k = remaining;
    } else if (remaining > 0 && probs[k] > 0.0) {
      const double q = std::clamp(probs[k] / mass, 0.0, 1.0);
      std::binomial_distribution<std::uint64_t> draw(remaining, q);
      n_k = draw(rng);
    }
    record.counts[outcome_label(k, n)] = n_k;
    remaining -= n_k;
    mass -= probs[k];
    if (mass <= 0.0) {
      mass = 0.0;
    }
  }
  return record;
}

std::vector<MeasurementSetting> process_tomography_frame() {
  std::vector<MeasurementSetting> frame;
  for (Preparation p : {Preparation::Zero, Preparation::One, Preparation::Plus, Preparation::PlusI}) {
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      frame.push_back(MeasurementSetting{p, {a}});
    }
  }
  return frame;
}

std::vector<MeasurementSetting> state_tomography_frame(int n_qubits) {
  if (n_qubits < 1) {
    throw ValidationError("state_tomography_frame: n_qubits must be >= 1");
  }
  std::size_t total = 1;
  for (int q = 0; q < n_qubits; ++q) {
    total *= 3;
  }
  std::vector<MeasurementSetting> frame;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<Axis> basis(static_cast<std::size_t>(n_qubits));
    std::size_t rest = idx;
    for (int q = n_qubits; q-- > 0;) {
      basis[static_cast<std::size_t>(q)] = static_cast<Axis>(rest % 3);
      rest /= 3;
    }
    frame.push_back(MeasurementSetting{std::nullopt, std::move(basis)});
  }
  return frame;
}

Json process_frame_metadata() {
  Json j;
  j["preparations"] = {"0", "1", "+", "+i"};
  j["measurement_axes"] = {"X", "Y", "Z"};
  j["settings"] = 12;
  j["outcome_convention"] = "outcome 0 is the +1 eigenvector; qubit 0 is the leftmost bit";
  return j;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<CountRecord> simulate_process_tomography(const Superoperator& channel,
                                                     std::uint64_t shots_per_setting,
                                                     std::uint64_t seed) {
  if (channel.dim_in() != 2 || channel.dim_out() != 2) {
    throw DimensionError("process tomography frame is single-qubit");
  }
  const auto frame = process_tomography_frame();
  std::vector<CountRecord> records;
  records.reserve(frame.size());
  for (std::size_t k = 0; k < frame.size(); ++k) {
    const ComplexMatrix out = channel.apply(preparation_state(*frame[k].preparation));
    records.push_back(sample_counts(qcore::DensityMatrix::normalized(out), frame[k],
                                    shots_per_setting, derive_seed(seed, k)));
  }
  return records;
}

std::vector<CountRecord> simulate_process_tomography(const qcore::KrausChannel& channel,
                                                     std::uint64_t shots_per_setting,
                                                     std::uint64_t seed) {
  return simulate_process_tomography(Superoperator::from_kraus(channel), shots_per_setting, seed);
}

std::vector<CountRecord> simulate_state_tomography(const qcore::DensityMatrix& rho,
                                                   std::uint64_t shots_per_setting,
                                                   std::uint64_t seed) {
  const auto n = qcore::qubit_count(rho.dim());
  if (!n) {
    throw DimensionError("state tomography needs a qubit register");
  }
  const auto frame = state_tomography_frame(*n);
  std::vector<CountRecord> records;
  records.reserve(frame.size());
  for (std::size_t k = 0; k < frame.size(); ++k) {
    records.push_back(sample_counts(rho, frame[k], shots_per_setting, derive_seed(seed, k)));
  }
  return records;
}

}  // namespace chanpur::tomography
