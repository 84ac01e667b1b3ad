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

#include "chanpur/metrics/entanglement.hpp"

#include <array>

#include "chanpur/error.hpp"

namespace chanpur::metrics {

qcore::ComplexMatrix partial_transpose(const qcore::ComplexMatrix& op,
                                       std::span<const std::size_t> subsystem_dims,
                                       std::size_t transposed) {
  const std::size_t total = qcore::product(subsystem_dims);
  if (!qcore::is_square(op) || static_cast<std::size_t>(op.rows()) != total) {
    throw DimensionError("partial_transpose: subsystem dimensions do not match the operator");
  }
  if (transposed >= subsystem_dims.size()) {
    throw DimensionError("partial_transpose: subsystem index out of range");
  }
  // Stride of the transposed digit in the flattened index.
  std::size_t stride = 1;
  for (std::size_t k = subsystem_dims.size(); k-- > transposed + 1;) {
    stride *= subsystem_dims[k];
  }
  const std::size_t dt = subsystem_dims[transposed];
  qcore::ComplexMatrix out(op.rows(), op.cols());
  for (std::size_t r = 0; r < total; ++r) {
    const std::size_t ra = (r / stride) % dt;
    for (std::size_t c = 0; c < total; ++c) {
      const std::size_t ca = (c / stride) % dt;
      const std::size_t r2 = r + (ca - ra) * stride;
      const std::size_t c2 = c + (ra - ca) * stride;
      out(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2)) =
          op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

qcore::ComplexMatrix partial_transpose(const qcore::DensityMatrix& rho,
                                       std::span<const std::size_t> subsystem_dims,
                                       std::size_t transposed) {
  return partial_transpose(rho.matrix(), subsystem_dims, transposed);
}

std::string to_string(PptVerdict verdict) {
  switch (verdict) {
    case PptVerdict::Separable:
      return "separable";
    case PptVerdict::Entangled:
      return "entangled";
    case PptVerdict::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

PptResult ppt_eigenvalues(const qcore::ComplexMatrix& op) {
  if (op.rows() != 4 || op.cols() != 4) {
    throw DimensionError("ppt_eigenvalues: two-qubit (4 x 4) state required");
  }
  const std::array<std::size_t, 2> dims{2, 2};
  const qcore::RealVector ev = qcore::hermitian_eigenvalues(partial_transpose(op, dims, 1));
  PptResult result;
  result.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  const double min = result.eigenvalues.front();
  if (min < -kPptTolerance) {
    result.verdict = PptVerdict::Entangled;
  } else if (min <= kPptTolerance) {
    result.verdict = PptVerdict::Indeterminate;
  } else {
    result.verdict = PptVerdict::Separable;
  }
  return result;
}

PptResult ppt_eigenvalues(const qcore::DensityMatrix& rho) { return ppt_eigenvalues(rho.matrix()); }

Json to_json(const PptResult& result) {
  Json j;
  j["eigenvalues"] = result.eigenvalues;
  j["verdict"] = to_string(result.verdict);
  return j;
}

}  // namespace chanpur::metrics
