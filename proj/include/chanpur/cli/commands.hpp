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

#ifndef CHANPUR_CLI_COMMANDS_HPP
#define CHANPUR_CLI_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chanpur/metrics/entanglement.hpp"
#include "chanpur/qcore/pauli.hpp"
#include "chanpur/qcore/serialization.hpp"
#include "chanpur/tomography/measurement.hpp"

namespace chanpur::cli {

enum class Format { Csv, Json };

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  std::optional<Format> format;
  std::optional<double> tol;
};

/// What a command produced: the artifact text (CSV or JSON), human-readable
/// summary lines, the configuration echo for the manifest and any extra
/// files it wrote.
struct CommandOutput {
  std::string artifact;
  std::vector<std::string> summary;
  Json config;
  std::vector<std::string> extra_artifacts;
};

/// Parses "exact" or a positive integer.
std::uint64_t parse_shots(const std::string& text);
std::string shots_to_string(std::uint64_t shots);

/// Channel family of a sweep, parameterised by p: depolarizing(p),
/// bit_flip(p) or phase_flip(p).
qcore::PauliChannel family_channel(const std::string& family, double p);

struct SweepSpec {
  std::string family = "depolarizing";
  double start = 0.2;
  double stop = 0.75;
  /// Number of grid points, both ends included.
  std::size_t steps = 23;
  /// Explicit grid; overrides start/stop/steps when non-empty.
  std::vector<double> points;
  double visibility = 1.0;
  std::uint64_t shots = tomography::kExactShots;
  std::uint64_t seed = 0;
};

/// Validates the spec and returns the grid.
std::vector<double> sweep_points(const SweepSpec& spec);

Json sweep_spec_to_json(const SweepSpec& spec);

struct SweepRow {
  double p = 0.0;
  double f_unpurified = 0.0;
  double f_physical = 0.0;
  /// NaN when the signed combination is undefined.
  double f_virtual = 0.0;
};

/// Average fidelities at one grid point. In finite-shot mode every channel
/// is reconstructed by MLE from counts drawn on streams derived from
/// (seed, index).
SweepRow compute_sweep_row(const SweepSpec& spec, double p, std::size_t index);

struct DistributeRow {
  double p = 0.0;
  double f_unpurified = 0.0;
  double f_purified = 0.0;
  metrics::PptResult ppt_unpurified;
  metrics::PptResult ppt_purified;
};

/// Phi+ with the channel (or its purified plus branch) on the second qubit.
DistributeRow compute_distribute_row(const SweepSpec& spec, double p, std::size_t index);

/// Inverse of the depolarizing average fidelity: the p at which the
/// unpurified single-qubit channel has average fidelity `f`.
double depolarizing_p_for_average_fidelity(double f);

struct PurifyArgs {
  std::string spec1;
  std::string spec2;
  double visibility = 1.0;
  /// "mixed", "zero" or "plus".
  std::string input = "mixed";
};

struct TomoArgs {
  std::optional<std::string> spec;
  std::optional<std::string> records;
  std::optional<std::string> records_out;
  std::uint64_t shots = 100000;
};

CommandOutput cmd_channel(const std::string& spec_path, const GlobalOptions& g);
CommandOutput cmd_purify(const PurifyArgs& args, const GlobalOptions& g);
CommandOutput cmd_sweep(const SweepSpec& spec, const GlobalOptions& g);
CommandOutput cmd_distribute(const SweepSpec& spec, const GlobalOptions& g);
CommandOutput cmd_tomo(const TomoArgs& args, const GlobalOptions& g);
CommandOutput cmd_optics(const std::string& phases_path, const GlobalOptions& g);

}  // namespace chanpur::cli

#endif  // CHANPUR_CLI_COMMANDS_HPP
