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

#include "chanpur/qcore/channel.hpp"

#include <cmath>
#include <sstream>

#include "chanpur/error.hpp"

namespace chanpur::qcore {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) {
    throw ValidationError("Kraus channel needs at least one operator");
  }
  dim_out_ = static_cast<std::size_t>(ops_.front().rows());
  dim_in_ = static_cast<std::size_t>(ops_.front().cols());
  if (dim_in_ == 0 || dim_out_ == 0) {
    throw DimensionError("Kraus operators must be non-empty");
  }
  for (const auto& k : ops_) {
    if (static_cast<std::size_t>(k.rows()) != dim_out_ ||
        static_cast<std::size_t>(k.cols()) != dim_in_) {
      throw DimensionError("Kraus operators must share one shape");
    }
  }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  return KrausChannel({qcore::identity(dim)});
}

KrausChannel KrausChannel::unitary(const ComplexMatrix& u) { return KrausChannel({u}); }

CptpReport is_cptp(const KrausChannel& ch, double tol) {
  ComplexMatrix sum = ComplexMatrix::Zero(static_cast<Eigen::Index>(ch.dim_in()),
                                          static_cast<Eigen::Index>(ch.dim_in()));
  for (const auto& k : ch.ops()) {
    sum += k.adjoint() * k;
  }
  CptpReport report;
  report.deviation = max_abs(sum - qcore::identity(ch.dim_in()));
  report.ok = report.deviation <= tol;
  std::ostringstream os;
  os << "max |sum K^dag K - I| = " << report.deviation << (report.ok ? " <= " : " > ") << tol;
  report.diagnostic = os.str();
  return report;
}

ComplexMatrix apply_kraus(const KrausChannel& ch, const ComplexMatrix& op) {
  if (static_cast<std::size_t>(op.rows()) != ch.dim_in() ||
      static_cast<std::size_t>(op.cols()) != ch.dim_in()) {
    throw DimensionError("apply_kraus: channel input dimension does not match operator");
  }
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(ch.dim_out()),
                                          static_cast<Eigen::Index>(ch.dim_out()));
  for (const auto& k : ch.ops()) {
    out.noalias() += k * op * k.adjoint();
  }
  return out;
}

DensityMatrix apply_kraus(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix::normalized(apply_kraus(ch, rho.matrix()));
}

KrausChannel compose(const KrausChannel& a, const KrausChannel& b) {
  if (a.dim_in() != b.dim_out()) {
    throw DimensionError("compose: a.dim_in must equal b.dim_out");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(a.size() * b.size());
  for (const auto& ka : a.ops()) {
    for (const auto& kb : b.ops()) {
      ops.emplace_back(ka * kb);
    }
  }
  return KrausChannel(std::move(ops));
}

KrausChannel tensor_product(const KrausChannel& a, const KrausChannel& b) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(a.size() * b.size());
  for (const auto& ka : a.ops()) {
    for (const auto& kb : b.ops()) {
      ops.emplace_back(qcore::tensor_product(ka, kb));
    }
  }
  return KrausChannel(std::move(ops));
}

KrausChannel pauli_channel_to_kraus(const PauliChannel& pc) {
  std::vector<ComplexMatrix> ops;
  const auto probs = pc.probs();
  for (std::size_t a = 0; a < probs.size(); ++a) {
    if (probs[a] > 0.0) {
      ops.emplace_back(std::sqrt(probs[a]) * pauli_basis_element(pc.n_qubits(), a));
    }
  }
  return KrausChannel(std::move(ops));
}

}  // namespace chanpur::qcore
