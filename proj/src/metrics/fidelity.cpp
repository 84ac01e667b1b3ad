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

#include "chanpur/metrics/fidelity.hpp"

#include <algorithm>
#include <cmath>

#include "chanpur/error.hpp"

namespace chanpur::metrics {

namespace {

bool is_density_matrix(const qcore::ComplexMatrix& m) {
  const qcore::Tolerances tol;
  if (!qcore::is_hermitian(m, tol.hermitian)) {
    return false;
  }
  if (std::abs(m.trace().real() - 1.0) > tol.trace) {
    return false;
  }
  return qcore::hermitian_eigenvalues(m)(0) >= -tol.psd;
}

/// Physicality of a chi matrix: PSD and (for trace-preserving maps) unit trace.
bool is_physical_chi(const tomography::ChiMatrix& chi) {
  if (!qcore::is_hermitian(chi.entries, 1e-10)) {
    return false;
  }
  return qcore::hermitian_eigenvalues(chi.entries)(0) >= -1e-9;
}

void add_range_flags(FidelityReport& report, bool is_virtual, bool physical) {
  if (is_virtual) {
    report.flags.emplace_back(kVirtualFlag);
  }
  if (!physical || report.value < -1e-12 || report.value > 1.0 + 1e-12) {
    if (!report.has_flag(kNonPhysicalFlag)) {
      report.flags.emplace_back(kNonPhysicalFlag);
    }
  }
}

}  // namespace

std::string to_string(FidelityKind kind) {
  switch (kind) {
    case FidelityKind::StateOverlap:
      return "state-overlap";
    case FidelityKind::Process:
      return "process";
    case FidelityKind::Average:
      return "average";
  }
  return "?";
}

bool FidelityReport::has_flag(const std::string& flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

Json to_json(const FidelityReport& report) {
  Json j;
  j["value"] = report.value;
  j["kind"] = to_string(report.kind);
  j["target"] = report.target;
  j["flags"] = report.flags;
  return j;
}

FidelityReport bell_fidelity(const qcore::ComplexMatrix& op) {
  if (op.rows() != 4 || op.cols() != 4) {
    throw DimensionError("bell_fidelity: operator must be 4 x 4");
  }
  // <Phi+|op|Phi+> = (op00 + op03 + op30 + op33) / 2
  const double value = 0.5 * (op(0, 0) + op(0, 3) + op(3, 0) + op(3, 3)).real();
  FidelityReport report{value, FidelityKind::StateOverlap, "Phi+", {}};
  add_range_flags(report, false, is_density_matrix(op));
  return report;
}

FidelityReport bell_fidelity(const qcore::DensityMatrix& rho) { return bell_fidelity(rho.matrix()); }

FidelityReport process_fidelity_to_identity(const tomography::ChiMatrix& chi, bool is_virtual) {
  FidelityReport report{chi.identity_weight(), FidelityKind::Process, "identity channel", {}};
  add_range_flags(report, is_virtual, is_physical_chi(chi));
  return report;
}

double average_from_process_fidelity(double process_fidelity, std::size_t dim) {
  if (dim < 2) {
    throw ValidationError("average fidelity needs dim >= 2");
  }
  const double d = static_cast<double>(dim);
  return (d * process_fidelity + 1.0) / (d + 1.0);
}

FidelityReport average_fidelity(const tomography::ChiMatrix& chi, std::size_t dim,
                                bool is_virtual) {
  FidelityReport report{average_from_process_fidelity(chi.identity_weight(), dim),
                        FidelityKind::Average, "identity channel", {}};
  add_range_flags(report, is_virtual, is_physical_chi(chi));
  return report;
}

}  // namespace chanpur::metrics
