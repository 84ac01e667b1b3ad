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

#include "chanpur/tomography/mle.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include "chanpur/error.hpp"

namespace chanpur::tomography {

namespace {

/// One measured effect: E is the operator whose expectation against the
/// estimate is the outcome probability, weight the observed frequency
/// divided by the number of records.
struct Effect {
  ComplexMatrix op;
  double weight;
};

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  // tr(a b) without forming the product.
  return (a.transpose().array() * b.array()).sum().real();
}

double log_likelihood(const std::vector<Effect>& effects, const ComplexMatrix& est) {
  double total = 0.0;
  for (const Effect& e : effects) {
    if (e.weight <= 0.0) {
      continue;
    }
    const double p = real_trace_product(e.op, est);
    if (!(p > 0.0)) {
      return -std::numeric_limits<double>::infinity();
    }
    total += e.weight * std::log(p);
  }
  return total;
}

ComplexMatrix r_operator(const std::vector<Effect>& effects, const ComplexMatrix& est) {
  ComplexMatrix r = ComplexMatrix::Zero(est.rows(), est.cols());
  for (const Effect& e : effects) {
    if (e.weight <= 0.0) {
      continue;
    }
    const double p = real_trace_product(e.op, est);
    if (p > 0.0) {
      r += (e.weight / p) * e.op;
    }
  }
  return r;
}

std::size_t span_dimension(const std::vector<ComplexMatrix>& ops) {
  if (ops.empty()) {
    return 0;
  }
  const Eigen::Index n = ops.front().size();
  ComplexMatrix stacked(n, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t k = 0; k < ops.size(); ++k) {
    stacked.col(static_cast<Eigen::Index>(k)) = qcore::vec(ops[k]);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(stacked);
  const auto& s = svd.singularValues();
  const double cutoff = 1e-10 * std::max(1.0, s.size() > 0 ? s(0) : 0.0);
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > cutoff) {
      ++rank;
    }
  }
  return rank;
}

/// Linear constraint tr(op X) = value on the unknown operator X.
struct Constraint {
  ComplexMatrix op;
  double value;
};

/// Least-squares solution of the constraints, returned only if it satisfies
/// all of them within 1e-10 and is positive semidefinite within 1e-10.
std::optional<ComplexMatrix> feasible_inversion(const std::vector<Constraint>& constraints,
                                                Eigen::Index dim) {
  const Eigen::Index m = static_cast<Eigen::Index>(constraints.size());
  ComplexMatrix a(m, dim * dim);
  ComplexVector b(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    // tr(E X) = sum_ij E(j, i) X(i, j) = vec(E^T) . vec(X)
    a.row(k) = qcore::vec(constraints[static_cast<std::size_t>(k)].op.transpose()).transpose();
    b(k) = constraints[static_cast<std::size_t>(k)].value;
  }
  const ComplexVector x = a.completeOrthogonalDecomposition().solve(b);
  if ((a * x - b).cwiseAbs().maxCoeff() > 1e-10) {
    return std::nullopt;
  }
  ComplexMatrix est = qcore::unvec(x, static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  est = 0.5 * (est + est.adjoint());
  if (qcore::hermitian_eigenvalues(est)(0) < -1e-10) {
    return std::nullopt;
  }
  return est;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

/// Generic ascent loop shared by state and process reconstruction.
/// `update(est, r, eps)` returns the next iterate for dilution parameter
/// eps (eps < 0 requests the undiluted R.est.R step).
template <typename Update>
std::vector<double> ascend(const std::vector<Effect>& effects, ComplexMatrix& est,
                           const MleOptions& options, const Update& update,
                           std::size_t& iterations, bool& converged) {
  std::vector<double> history;
  double current = log_likelihood(effects, est);
  history.push_back(current);
  iterations = 0;
  converged = false;
  while (iterations < options.max_iterations) {
    const ComplexMatrix r = r_operator(effects, est);
    ComplexMatrix next = update(est, r, -1.0);
    double next_ll = log_likelihood(effects, next);
    if (!(next_ll >= current)) {
      bool found = false;
      double eps = 1.0;
      for (int h = 0; h < options.max_dilution_halvings; ++h, eps *= 0.5) {
        next = update(est, r, eps);
        next_ll = log_likelihood(effects, next);
        if (next_ll >= current) {
          found = true;
          break;
        }
      }
      if (!found) {
        // No ascent direction left at double precision.
        converged = true;
        break;
      }
    }
    ++iterations;
    const double gain = next_ll - current;
    const double step = qcore::max_abs_diff(next, est);
    est = std::move(next);
    current = next_ll;
    history.push_back(current);
    if (gain < options.gain_tolerance && step < options.step_tolerance) {
      converged = true;
      break;
    }
  }
  return history;
}

ComplexMatrix dilute(const ComplexMatrix& est, const ComplexMatrix& r, double eps) {
  if (eps < 0.0) {
    return r * est * r;
  }
  const ComplexMatrix g = ComplexMatrix::Identity(r.rows(), r.cols()) + eps * r;
  return g * est * g;
}

}  // namespace

StateEstimate mle_state(std::span<const CountRecord> records, const MleOptions& options) {
  if (records.empty()) {
    throw UnderdeterminedError("mle_state: no count records");
  }
  const int n = records.front().setting.n_qubits();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Effect> effects;
  std::vector<ComplexMatrix> ops;
  std::vector<Constraint> constraints;
  const double per_record = 1.0 / static_cast<double>(records.size());
  for (const CountRecord& rec : records) {
    if (rec.setting.n_qubits() != n) {
      throw DimensionError("mle_state: records measure different numbers of qubits");
    }
    if (rec.setting.preparation) {
      throw ValidationError("mle_state: record carries a preparation; use mle_process");
    }
    for (std::size_t k = 0; k < rec.setting.outcome_count(); ++k) {
      ComplexMatrix op = outcome_projector(rec.setting.basis, k);
      ops.push_back(op);
      constraints.push_back(Constraint{op, rec.frequency(k)});
      effects.push_back(Effect{std::move(op), per_record * rec.frequency(k)});
    }
  }
  if (span_dimension(ops) < dim * dim) {
    throw UnderdeterminedError("mle_state: measured effects do not span the operator space");
  }
  ComplexMatrix est = ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim)) /
                      static_cast<double>(dim);
  const auto update = [](const ComplexMatrix& rho, const ComplexMatrix& r, double eps) {
    ComplexMatrix next = hermitian_part(dilute(rho, r, eps));
    return ComplexMatrix(next / next.trace().real());
  };
  const auto dim_i = static_cast<Eigen::Index>(dim);
  if (options.use_inversion_shortcut) {
    constraints.push_back(Constraint{ComplexMatrix::Identity(dim_i, dim_i), 1.0});
    if (auto inv = feasible_inversion(constraints, dim_i)) {
      std::vector<double> history{log_likelihood(effects, est), log_likelihood(effects, *inv)};
      return StateEstimate{qcore::DensityMatrix::normalized(*inv), std::move(history), 0, true, true};
    }
  }
  std::size_t iterations = 0;
  bool converged = false;
  auto history = ascend(effects, est, options, update, iterations, converged);
  return StateEstimate{qcore::DensityMatrix::normalized(est), std::move(history), iterations,
                       converged, false};
}

ProcessEstimate mle_process(std::span<const CountRecord> records, const MleOptions& options) {
  if (records.empty()) {
    throw UnderdeterminedError("mle_process: no count records");
  }
  const std::size_t d = 2;
  std::vector<Effect> effects;
  std::vector<ComplexMatrix> ops;
  std::vector<Constraint> constraints;
  const double per_record = 1.0 / static_cast<double>(records.size());
  for (const CountRecord& rec : records) {
    if (!rec.setting.preparation) {
      throw ValidationError("mle_process: record has no preparation");
    }
    if (rec.setting.n_qubits() != 1) {
      throw DimensionError("mle_process: only single-qubit frames are supported");
    }
    const ComplexMatrix rho_t = preparation_state(*rec.setting.preparation).transpose();
    for (std::size_t k = 0; k < rec.setting.outcome_count(); ++k) {
      ComplexMatrix op = qcore::tensor_product(outcome_projector(rec.setting.basis, k), rho_t);
      ops.push_back(op);
      constraints.push_back(Constraint{op, rec.frequency(k)});
      effects.push_back(Effect{std::move(op), per_record * rec.frequency(k)});
    }
  }
  // Trace preservation fixes every direction of the form I (x) B.
  std::vector<ComplexMatrix> spanning = ops;
  for (std::size_t a = 0; a < d * d; ++a) {
    spanning.push_back(qcore::tensor_product(qcore::identity(d), qcore::pauli_basis_element(1, a)));
  }
  if (span_dimension(spanning) < d * d * d * d) {
    throw UnderdeterminedError("mle_process: preparations and measurements are not complete");
  }
  const std::array<std::size_t, 2> dims{d, d};
  const std::array<std::size_t, 1> keep_in{1};
  const auto update = [&](const ComplexMatrix& j, const ComplexMatrix& r, double eps) {
    const ComplexMatrix k = hermitian_part(dilute(j, r, eps));
    const ComplexMatrix lambda = qcore::partial_trace(k, dims, keep_in);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(lambda));
    const qcore::RealVector vals = es.eigenvalues();
    qcore::RealVector inv_sqrt(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
      if (!(vals(i) > 0.0)) {
        throw ConvergenceError("mle_process: trace-preservation projection became singular");
      }
      inv_sqrt(i) = 1.0 / std::sqrt(vals(i));
    }
    const ComplexMatrix l = es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
    const ComplexMatrix g = qcore::tensor_product(qcore::identity(d), l);
    return ComplexMatrix(hermitian_part(g * k * g));
  };
  ComplexMatrix est = ComplexMatrix::Identity(static_cast<Eigen::Index>(d * d),
                                              static_cast<Eigen::Index>(d * d)) /
                      static_cast<double>(d);
  std::vector<double> history;
  std::size_t iterations = 0;
  bool converged = false;
  bool from_inversion = false;
  if (options.use_inversion_shortcut) {
    // Trace preservation: tr[(I (x) |b><a|) J] = delta_ab.
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        ComplexMatrix unit = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        unit(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = 1.0;
        constraints.push_back(Constraint{qcore::tensor_product(qcore::identity(d), unit), a == b ? 1.0 : 0.0});
      }
    }
    if (auto inv = feasible_inversion(constraints, static_cast<Eigen::Index>(d * d))) {
      history = {log_likelihood(effects, est), log_likelihood(effects, *inv)};
      est = *inv;
      converged = true;
      from_inversion = true;
    }
  }
  if (!from_inversion) {
    history = ascend(effects, est, options, update, iterations, converged);
  }
  ChoiMatrix choi{d, est};
  ProcessEstimate out;
  out.chi = chi_from_choi(choi);
  out.tp_deviation = diagnose(choi).tp_deviation;
  out.choi = std::move(choi);
  out.log_likelihood = std::move(history);
  out.iterations = iterations;
  out.converged = converged;
  out.from_inversion = from_inversion;
  return out;
}

}  // namespace chanpur::tomography
