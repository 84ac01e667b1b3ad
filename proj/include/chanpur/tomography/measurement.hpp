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

#ifndef CHANPUR_TOMOGRAPHY_MEASUREMENT_HPP
#define CHANPUR_TOMOGRAPHY_MEASUREMENT_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chanpur/qcore/linalg.hpp"
#include "chanpur/qcore/state.hpp"
#include "chanpur/qcore/serialization.hpp"
#include "chanpur/tomography/representations.hpp"

namespace chanpur::tomography {

/// Single-qubit input states of the process-tomography frame.
enum class Preparation : std::uint8_t { Zero, One, Plus, PlusI };

/// Pauli measurement axis. Outcome "0" is the +1 eigenvector.
enum class Axis : std::uint8_t { X, Y, Z };

std::string to_string(Preparation p);
std::string to_string(Axis a);
Preparation preparation_from_string(std::string_view s);
Axis axis_from_string(std::string_view s);

/// |0><0|, |1><1|, |+><+| or |+i><+i|.
ComplexMatrix preparation_state(Preparation p);

/// Shot count meaning "use the Born probabilities themselves".
inline constexpr std::uint64_t kExactShots = std::numeric_limits<std::uint64_t>::max();

struct MeasurementSetting {
  /// Set for process tomography; empty for state tomography.
  std::optional<Preparation> preparation;
  /// One axis per measured qubit, qubit 0 first.
  std::vector<Axis> basis;

  int n_qubits() const noexcept { return static_cast<int>(basis.size()); }
  std::size_t outcome_count() const noexcept { return std::size_t{1} << basis.size(); }

  friend bool operator==(const MeasurementSetting&, const MeasurementSetting&) = default;
};

/// Clicks collected for one setting. Outcome keys are bitstrings, qubit 0
/// leftmost. In exact mode `shots == kExactShots`, `counts` is empty and
/// `probabilities` holds the Born distribution.
struct CountRecord {
  MeasurementSetting setting;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::map<std::string, double> probabilities;

  bool exact() const noexcept { return shots == kExactShots; }
  /// Observed relative frequency (or exact probability) of `outcome`.
  double frequency(std::size_t outcome) const;
};

std::string outcome_label(std::size_t outcome, int n_qubits);

/// Projector of `outcome` for a product Pauli measurement.
ComplexMatrix outcome_projector(const std::vector<Axis>& basis, std::size_t outcome);

/// Born distribution, clamped at zero and renormalised.
std::vector<double> born_probabilities(const ComplexMatrix& rho, const std::vector<Axis>& basis);

/// Multinomial sample of `shots` outcomes; deterministic in `seed`.
/// shots == kExactShots records the Born probabilities instead.
CountRecord sample_counts(const qcore::DensityMatrix& rho, const MeasurementSetting& setting,
                          std::uint64_t shots, std::uint64_t seed);

/// 4 preparations x 3 axes = 12 settings, preparation-major.
std::vector<MeasurementSetting> process_tomography_frame();

/// All 3^n product Pauli bases, qubit 0 slowest.
std::vector<MeasurementSetting> state_tomography_frame(int n_qubits);

/// Metadata block describing the process frame, for output documents.
Json process_frame_metadata();

/// One record per frame setting; setting k uses the RNG stream (seed, k).
std::vector<CountRecord> simulate_process_tomography(const Superoperator& channel,
                                                     std::uint64_t shots_per_setting,
                                                     std::uint64_t seed);
std::vector<CountRecord> simulate_process_tomography(const qcore::KrausChannel& channel,
                                                     std::uint64_t shots_per_setting,
                                                     std::uint64_t seed);

std::vector<CountRecord> simulate_state_tomography(const qcore::DensityMatrix& rho,
                                                   std::uint64_t shots_per_setting,
                                                   std::uint64_t seed);

/// Seed of the independent RNG stream number `stream` derived from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace chanpur::tomography

#endif  // CHANPUR_TOMOGRAPHY_MEASUREMENT_HPP
