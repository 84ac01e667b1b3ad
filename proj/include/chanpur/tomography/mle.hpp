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

#ifndef CHANPUR_TOMOGRAPHY_MLE_HPP
#define CHANPUR_TOMOGRAPHY_MLE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "chanpur/qcore/state.hpp"
#include "chanpur/tomography/measurement.hpp"
#include "chanpur/tomography/representations.hpp"

namespace chanpur::tomography {

struct MleOptions {
  std::size_t max_iterations = 10000;
  /// Stop once an accepted step raises the log-likelihood by less than this...
  double gain_tolerance = 1e-10;
  /// ...and moves the estimate by less than this in max-norm.
  double step_tolerance = 1e-10;
  /// Dilution halvings tried before a rejected step ends the run.
  int max_dilution_halvings = 40;
  /// When the linear inversion of the frequencies is a valid estimate that
  /// reproduces every frequency, it maximises each record's likelihood term
  /// and is returned without iterating.
  bool use_inversion_shortcut = true;
};

struct StateEstimate {
  qcore::DensityMatrix state;
  /// Mean per-record log-likelihood after each accepted iterate, starting
  /// with the initial estimate. Non-decreasing by construction.
  std::vector<double> log_likelihood;
  std::size_t iterations = 0;
  bool converged = false;
  /// True when the inversion shortcut produced the estimate.
  bool from_inversion = false;
};

struct ProcessEstimate {
  ChiMatrix chi;
  ChoiMatrix choi;
  std::vector<double> log_likelihood;
  std::size_t iterations = 0;
  bool converged = false;
  bool from_inversion = false;
  /// max |tr_out J - I| of the returned estimate.
  double tp_deviation = 0.0;
};

/// Maximum-likelihood density matrix from product-Pauli count records via
/// the R rho R fixed point, with dilution (I + eps R) rho (I + eps R) when a
/// full step would lower the likelihood. Throws UnderdeterminedError when
/// the measured effects do not span the operator space.
StateEstimate mle_state(std::span<const CountRecord> records, const MleOptions& options = {});

/// Maximum-likelihood trace-preserving process on the Choi matrix. Each
/// iterate is projected back onto tr_out J = I. Records must carry
/// preparations.
ProcessEstimate mle_process(std::span<const CountRecord> records, const MleOptions& options = {});

}  // namespace chanpur::tomography

#endif  // CHANPUR_TOMOGRAPHY_MLE_HPP
