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

#include "chanpur/tomography/representations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chanpur/error.hpp"
#include "chanpur/qcore/state.hpp"

namespace chanpur::tomography {

namespace {

using qcore::pauli_basis_element;
using qcore::pauli_basis_size;

int require_qubits(std::size_t dim) {
  const auto n = qcore::qubit_count(dim);
  if (!n) {
    throw DimensionError("process representations need a qubit-power dimension, got " +
                         std::to_string(dim));
  }
  return *n;
}

void require_endomorphism(const Superoperator& s) {
  if (s.dim_in() != s.dim_out()) {
    throw DimensionError("representation needs dim_in == dim_out");
  }
}

ComplexMatrix matrix_unit(std::size_t dim, std::size_t i, std::size_t j) {
  ComplexMatrix e = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return e;
}

// Columns are vec(P_a) for every Pauli string a.
ComplexMatrix pauli_vec_basis(int n_qubits) {
  const std::size_t size = pauli_basis_size(n_qubits);
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
  ComplexMatrix basis(d * d, static_cast<Eigen::Index>(size));
  for (std::size_t a = 0; a < size; ++a) {
    basis.col(static_cast<Eigen::Index>(a)) = qcore::vec(pauli_basis_element(n_qubits, a));
  }
  return basis;
}

}  // namespace

Superoperator::Superoperator(std::size_t dim_in, std::size_t dim_out, ComplexMatrix matrix)
    : dim_in_(dim_in), dim_out_(dim_out), matrix_(std::move(matrix)) {
  if (dim_in == 0 || dim_out == 0 ||
      static_cast<std::size_t>(matrix_.rows()) != dim_out * dim_out ||
      static_cast<std::size_t>(matrix_.cols()) != dim_in * dim_in) {
    throw DimensionError("superoperator matrix must be (d_out^2 x d_in^2)");
  }
}

Superoperator Superoperator::identity(std::size_t dim) {
  return Superoperator(dim, dim, qcore::identity(dim * dim));
}

Superoperator Superoperator::from_kraus(const qcore::KrausChannel& ch) {
  const auto rows = static_cast<Eigen::Index>(ch.dim_out() * ch.dim_out());
  const auto cols = static_cast<Eigen::Index>(ch.dim_in() * ch.dim_in());
  ComplexMatrix m = ComplexMatrix::Zero(rows, cols);
  for (const auto& k : ch.ops()) {
    m += qcore::tensor_product(k, k.conjugate());
  }
  return Superoperator(ch.dim_in(), ch.dim_out(), std::move(m));
}

Superoperator Superoperator::from_action(
    std::size_t dim_in, std::size_t dim_out,
    const std::function<ComplexMatrix(const ComplexMatrix&)>& action) {
  ComplexMatrix m(static_cast<Eigen::Index>(dim_out * dim_out),
                  static_cast<Eigen::Index>(dim_in * dim_in));
  for (std::size_t i = 0; i < dim_in; ++i) {
    for (std::size_t j = 0; j < dim_in; ++j) {
      const ComplexMatrix out = action(matrix_unit(dim_in, i, j));
      if (static_cast<std::size_t>(out.rows()) != dim_out ||
          static_cast<std::size_t>(out.cols()) != dim_out) {
        throw DimensionError("from_action: action returned the wrong shape");
      }
      m.col(static_cast<Eigen::Index>(i * dim_in + j)) = qcore::vec(out);
    }
  }
  return Superoperator(dim_in, dim_out, std::move(m));
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& op) const {
  if (static_cast<std::size_t>(op.rows()) != dim_in_ ||
      static_cast<std::size_t>(op.cols()) != dim_in_) {
    throw DimensionError("Superoperator::apply: dimension mismatch");
  }
  return qcore::unvec(matrix_ * qcore::vec(op), dim_out_, dim_out_);
}

Superoperator Superoperator::after(const Superoperator& first) const {
  if (first.dim_out_ != dim_in_) {
    throw DimensionError("Superoperator::after: dimension mismatch");
  }
  return Superoperator(first.dim_in_, dim_out_, matrix_ * first.matrix_);
}

ComplexMatrix Superoperator::apply_to_subsystem(const ComplexMatrix& op,
                                                std::span<const std::size_t> dims,
                                                std::size_t target) const {
  if (dim_in_ != dim_out_) {
    throw DimensionError("apply_to_subsystem needs dim_in == dim_out");
  }
  if (target >= dims.size() || dims[target] != dim_in_ ||
      qcore::product(dims) != static_cast<std::size_t>(op.rows()) || !qcore::is_square(op)) {
    throw DimensionError("apply_to_subsystem: subsystem layout does not match");
  }
  std::size_t before = 1;
  for (std::size_t s = 0; s < target; ++s) {
    before *= dims[s];
  }
  const std::size_t after_dim = qcore::product(dims) / (before * dim_in_);
  const std::size_t d = dim_in_;
  auto index = [&](std::size_t b, std::size_t t, std::size_t a) {
    return static_cast<Eigen::Index>((b * d + t) * after_dim + a);
  };
  // out[(b,x,a),(b',y,a')] = sum_{i,j} S[(x,y),(i,j)] op[(b,i,a),(b',j,a')]
  ComplexMatrix out = ComplexMatrix::Zero(op.rows(), op.cols());
  for (std::size_t b1 = 0; b1 < before; ++b1) {
    for (std::size_t a1 = 0; a1 < after_dim; ++a1) {
      for (std::size_t b2 = 0; b2 < before; ++b2) {
        for (std::size_t a2 = 0; a2 < after_dim; ++a2) {
          ComplexVector block(static_cast<Eigen::Index>(d * d));
          for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
              block(static_cast<Eigen::Index>(i * d + j)) = op(index(b1, i, a1), index(b2, j, a2));
            }
          }
          const ComplexVector mapped = matrix_ * block;
          for (std::size_t x = 0; x < d; ++x) {
            for (std::size_t y = 0; y < d; ++y) {
              out(index(b1, x, a1), index(b2, y, a2)) = mapped(static_cast<Eigen::Index>(x * d + y));
            }
          }
        }
      }
    }
  }
  return out;
}

Superoperator operator+(const Superoperator& a, const Superoperator& b) {
  if (a.dim_in_ != b.dim_in_ || a.dim_out_ != b.dim_out_) {
    throw DimensionError("superoperator sum: dimension mismatch");
  }
  return Superoperator(a.dim_in_, a.dim_out_, a.matrix_ + b.matrix_);
}

Superoperator operator-(const Superoperator& a, const Superoperator& b) {
  if (a.dim_in_ != b.dim_in_ || a.dim_out_ != b.dim_out_) {
    throw DimensionError("superoperator difference: dimension mismatch");
  }
  return Superoperator(a.dim_in_, a.dim_out_, a.matrix_ - b.matrix_);
}

Superoperator operator*(Complex s, const Superoperator& a) {
  return Superoperator(a.dim_in_, a.dim_out_, s * a.matrix_);
}

std::vector<std::string> ChiMatrix::basis_labels() const {
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < pauli_basis_size(n_qubits); ++a) {
    labels.push_back(qcore::PauliString::from_index(n_qubits, a).str());
  }
  return labels;
}

ChoiMatrix choi_from_superop(const Superoperator& s) {
  require_endomorphism(s);
  const std::size_t d = s.dim_in();
  const auto dd = static_cast<Eigen::Index>(d * d);
  ComplexMatrix j(dd, dd);
  // J[(a,i),(b,k)] = C(|i><k|)[a,b] = S[(a,b),(i,k)]
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t k = 0; k < d; ++k) {
          j(static_cast<Eigen::Index>(a * d + i), static_cast<Eigen::Index>(b * d + k)) =
              s.matrix()(static_cast<Eigen::Index>(a * d + b), static_cast<Eigen::Index>(i * d + k));
        }
      }
    }
  }
  return ChoiMatrix{d, std::move(j)};
}

Superoperator superop_from_choi(const ChoiMatrix& choi) {
  const std::size_t d = choi.dim;
  if (static_cast<std::size_t>(choi.entries.rows()) != d * d || !qcore::is_square(choi.entries)) {
    throw DimensionError("Choi matrix must be d^2 x d^2");
  }
  ComplexMatrix m(static_cast<Eigen::Index>(d * d), static_cast<Eigen::Index>(d * d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t k = 0; k < d; ++k) {
          m(static_cast<Eigen::Index>(a * d + b), static_cast<Eigen::Index>(i * d + k)) =
              choi.entries(static_cast<Eigen::Index>(a * d + i), static_cast<Eigen::Index>(b * d + k));
        }
      }
    }
  }
  return Superoperator(d, d, std::move(m));
}

ChiMatrix chi_from_choi(const ChoiMatrix& choi) {
  const int n = require_qubits(choi.dim);
  const ComplexMatrix basis = pauli_vec_basis(n);
  const double d2 = static_cast<double>(choi.dim * choi.dim);
  return ChiMatrix{n, basis.adjoint() * choi.entries * basis / d2};
}

ChoiMatrix choi_from_chi(const ChiMatrix& chi) {
  const ComplexMatrix basis = pauli_vec_basis(chi.n_qubits);
  if (chi.entries.rows() != basis.cols() || !qcore::is_square(chi.entries)) {
    throw DimensionError("chi matrix must be 4^n x 4^n");
  }
  return ChoiMatrix{std::size_t{1} << chi.n_qubits, basis * chi.entries * basis.adjoint()};
}

ChiMatrix chi_from_superop(const Superoperator& s) { return chi_from_choi(choi_from_superop(s)); }

Superoperator superop_from_chi(const ChiMatrix& chi) { return superop_from_choi(choi_from_chi(chi)); }

PauliTransferMatrix ptm_from_superop(const Superoperator& s) {
  require_endomorphism(s);
  const int n = require_qubits(s.dim_in());
  const ComplexMatrix basis = pauli_vec_basis(n);
  // tr(P_a C(P_b)) = vec(P_a)^dagger S vec(P_b) for Hermitian P_a.
  const ComplexMatrix r = basis.adjoint() * s.matrix() * basis / static_cast<double>(s.dim_in());
  return PauliTransferMatrix{n, r.real()};
}

Superoperator superop_from_ptm(const PauliTransferMatrix& r) {
  const ComplexMatrix basis = pauli_vec_basis(r.n_qubits);
  if (r.entries.rows() != basis.cols() || r.entries.cols() != basis.cols()) {
    throw DimensionError("Pauli transfer matrix must be 4^n x 4^n");
  }
  const std::size_t d = std::size_t{1} << r.n_qubits;
  const ComplexMatrix m =
      basis * r.entries.cast<Complex>() * basis.adjoint() / static_cast<double>(d);
  return Superoperator(d, d, m);
}

ChiMatrix chi_from_channel(const qcore::KrausChannel& ch) {
  require_qubits(ch.dim_in());
  return chi_from_superop(Superoperator::from_kraus(ch));
}

PauliTransferMatrix ptm_from_channel(const qcore::KrausChannel& ch) {
  return ptm_from_superop(Superoperator::from_kraus(ch));
}

ChoiMatrix choi_from_channel(const qcore::KrausChannel& ch) {
  if (ch.dim_in() != ch.dim_out()) {
    throw DimensionError("choi_from_channel needs dim_in == dim_out");
  }
  const std::size_t d = ch.dim_in();
  const auto dd = static_cast<Eigen::Index>(d * d);
  ComplexMatrix j = ComplexMatrix::Zero(dd, dd);
  for (const auto& k : ch.ops()) {
    const ComplexVector v = qcore::vec(k);
    j += v * v.adjoint();
  }
  return ChoiMatrix{d, std::move(j)};
}

ChiMatrix chi_from_pauli_channel(const qcore::PauliChannel& pc) {
  const auto probs = pc.probs();
  ComplexMatrix entries = ComplexMatrix::Zero(static_cast<Eigen::Index>(probs.size()),
                                              static_cast<Eigen::Index>(probs.size()));
  for (std::size_t a = 0; a < probs.size(); ++a) {
    entries(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)) = probs[a];
  }
  return ChiMatrix{pc.n_qubits(), std::move(entries)};
}

qcore::KrausChannel channel_from_choi(const ChoiMatrix& choi, double tol) {
  const std::size_t d = choi.dim;
  if (static_cast<std::size_t>(choi.entries.rows()) != d * d || !qcore::is_square(choi.entries)) {
    throw DimensionError("Choi matrix must be d^2 x d^2");
  }
  const ComplexMatrix h = 0.5 * (choi.entries + choi.entries.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  const auto& evals = solver.eigenvalues();
  const double scale = std::max(1.0, evals.cwiseAbs().maxCoeff());
  std::vector<ComplexMatrix> ops;
  for (Eigen::Index k = evals.size(); k-- > 0;) {
    const double lambda = evals(k);
    if (lambda < -tol * scale) {
      std::ostringstream os;
      os << "Choi matrix has eigenvalue " << lambda << "; the map is not completely positive";
      throw ValidationError(os.str());
    }
    if (lambda > tol * scale) {
      ops.push_back(std::sqrt(lambda) * qcore::unvec(solver.eigenvectors().col(k), d, d));
    }
  }
  if (ops.empty()) {
    ops.push_back(ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
  }
  return qcore::KrausChannel(std::move(ops));
}

ChoiDiagnostics diagnose(const ChoiMatrix& choi) {
  ChoiDiagnostics out;
  out.hermiticity_deviation = qcore::max_abs(choi.entries - choi.entries.adjoint());
  out.min_eigenvalue = qcore::hermitian_eigenvalues(choi.entries).minCoeff();
  const std::size_t dims[] = {choi.dim, choi.dim};
  const std::size_t keep_input[] = {1};
  const ComplexMatrix reduced = qcore::partial_trace(choi.entries, dims, keep_input);
  out.tp_deviation = qcore::max_abs(reduced - qcore::identity(choi.dim));
  return out;
}

std::size_t kraus_rank(const ChoiMatrix& choi, double tol) {
  const qcore::RealVector evals = qcore::hermitian_eigenvalues(choi.entries);
  const double scale = std::max(1.0, evals.cwiseAbs().maxCoeff());
  return static_cast<std::size_t>((evals.array() > tol * scale).count());
}

Json chi_to_json(const ChiMatrix& chi) {
  Json j;
  j["n_qubits"] = chi.n_qubits;
  j["basis"] = chi.basis_labels();
  const Json m = matrix_to_json(chi.entries);
  j["rows"] = m["rows"];
  j["cols"] = m["cols"];
  j["entries"] = m["entries"];
  return j;
}

ChiMatrix chi_from_json(const Json& j) {
  if (!j.contains("n_qubits") || !j.at("n_qubits").is_number_integer()) {
    throw ParseError("chi document needs an integer \"n_qubits\"");
  }
  ChiMatrix chi{j.at("n_qubits").get<int>(), matrix_from_json(j)};
  if (static_cast<std::size_t>(chi.entries.rows()) != pauli_basis_size(chi.n_qubits)) {
    throw ParseError("chi document has the wrong size for its qubit count");
  }
  return chi;
}

Json ptm_to_json(const PauliTransferMatrix& r) {
  Json j;
  j["n_qubits"] = r.n_qubits;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < pauli_basis_size(r.n_qubits); ++a) {
    labels.push_back(qcore::PauliString::from_index(r.n_qubits, a).str());
  }
  j["basis"] = labels;
  Json rows = Json::array();
  for (Eigen::Index a = 0; a < r.entries.rows(); ++a) {
    Json row = Json::array();
    for (Eigen::Index b = 0; b < r.entries.cols(); ++b) {
      row.push_back(r.entries(a, b));
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

}  // namespace chanpur::tomography
