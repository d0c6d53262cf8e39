// Copyright 2026 The ctrlshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctrlshift/linalg.hpp"

#include <cstdlib>
#include <utility>

namespace ctrlshift {

namespace {

constexpr std::size_t kDefaultMaxDim = std::size_t{1} << 20;

void require(bool ok, const std::string& msg) {
  if (!ok) throw ContractViolation(msg);
}

}  // namespace

std::size_t max_total_dim() {
  if (const char* env = std::getenv("CTRLSHIFT_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxDim;
}

RegisterShape::RegisterShape(std::vector<int> site_dims) : dims_(std::move(site_dims)) {
  require(!dims_.empty(), "RegisterShape: site_dims must be nonempty");
  const std::size_t cap = max_total_dim();
  for (int d : dims_) {
    require(d >= 1, "RegisterShape: site dimensions must be positive");
    if (total_ > cap / static_cast<std::size_t>(d)) {
      throw CapacityExceeded("RegisterShape: total dimension exceeds CTRLSHIFT_MAX_DIM");
    }
    total_ *= static_cast<std::size_t>(d);
  }
}

RegisterShape RegisterShape::qubits(int n) {
  require(n >= 1, "RegisterShape::qubits: n must be >= 1");
  return RegisterShape(std::vector<int>(static_cast<std::size_t>(n), 2));
}

RegisterShape RegisterShape::single_site(int dim) { return RegisterShape({dim}); }

RegisterShape RegisterShape::concat(const RegisterShape& other) const {
  std::vector<int> dims = dims_;
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  return RegisterShape(std::move(dims));
}

std::size_t RegisterShape::flat_index(std::span<const int> digits) const {
  require(digits.size() == dims_.size(), "RegisterShape::flat_index: digit count mismatch");
  std::size_t idx = 0;
  for (std::size_t s = 0; s < dims_.size(); ++s) {
    require(digits[s] >= 0 && digits[s] < dims_[s], "RegisterShape::flat_index: digit out of range");
    idx = idx * static_cast<std::size_t>(dims_[s]) + static_cast<std::size_t>(digits[s]);
  }
  return idx;
}

std::vector<int> RegisterShape::digits(std::size_t index) const {
  require(index < total_, "RegisterShape::digits: index out of range");
  std::vector<int> out(dims_.size(), 0);
  for (std::size_t s = dims_.size(); s-- > 0;) {
    out[s] = static_cast<int>(index % static_cast<std::size_t>(dims_[s]));
    index /= static_cast<std::size_t>(dims_[s]);
  }
  return out;
}

StateVector::StateVector(RegisterShape shape, Eigen::VectorXcd amps)
    : shape_(std::move(shape)), amps_(std::move(amps)) {
  require(static_cast<std::size_t>(amps_.size()) == shape_.total_dim(),
          "StateVector: amplitude count does not match shape");
  require(amps_.allFinite(), "StateVector: amplitudes must be finite");
  require(std::abs(amps_.norm() - 1.0) <= kValidationTol,
          "StateVector: norm must be 1 within 1e-10");
}

StateVector StateVector::normalized(RegisterShape shape, Eigen::VectorXcd raw) {
  require(raw.allFinite(), "StateVector::normalized: amplitudes must be finite");
  const double n = raw.norm();
  require(n > 0.0, "StateVector::normalized: zero vector");
  return StateVector(std::move(shape), raw / n);
}

StateVector StateVector::basis_state(const RegisterShape& shape, std::size_t index) {
  require(index < shape.total_dim(), "StateVector::basis_state: index out of range");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(shape.total_dim()));
  amps(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(shape, std::move(amps));
}

StateVector StateVector::basis_state(const RegisterShape& shape, std::span<const int> digits) {
  return basis_state(shape, shape.flat_index(digits));
}

Operator::Operator(RegisterShape shape, Eigen::MatrixXcd entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  const auto d = static_cast<Eigen::Index>(shape_.total_dim());
  require(entries_.rows() == d && entries_.cols() == d,
          "Operator: matrix size does not match shape");
  require(entries_.allFinite(), "Operator: entries must be finite");
  hermitian_ = (entries_ - entries_.adjoint()).norm() <= kValidationTol;
  unitary_ = (entries_.adjoint() * entries_ - Eigen::MatrixXcd::Identity(d, d)).norm() <=
             kValidationTol;
}

Operator Operator::identity(const RegisterShape& shape) {
  const auto d = static_cast<Eigen::Index>(shape.total_dim());
  return Operator(shape, Eigen::MatrixXcd::Identity(d, d));
}

Operator Operator::adjoint() const { return Operator(shape_, entries_.adjoint()); }

Operator operator*(const Operator& a, const Operator& b) {
  if (a.shape_ != b.shape_) throw ContractViolation("Operator product: shape mismatch");
  return Operator(a.shape_, a.entries_ * b.entries_);
}

Operator operator+(const Operator& a, const Operator& b) {
  if (a.shape_ != b.shape_) throw ContractViolation("Operator sum: shape mismatch");
  return Operator(a.shape_, a.entries_ + b.entries_);
}

Operator operator-(const Operator& a, const Operator& b) {
  if (a.shape_ != b.shape_) throw ContractViolation("Operator difference: shape mismatch");
  return Operator(a.shape_, a.entries_ - b.entries_);
}

Operator operator*(Complex scale, const Operator& a) {
  return Operator(a.shape_, scale * a.entries_);
}

Operator tensor(const Operator& a, const Operator& b) {
  const RegisterShape shape = a.shape().concat(b.shape());
  const auto da = static_cast<Eigen::Index>(a.dim());
  const auto db = static_cast<Eigen::Index>(b.dim());
  Eigen::MatrixXcd out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    }
  }
  return Operator(shape, std::move(out));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const RegisterShape shape = a.shape().concat(b.shape());
  const auto da = static_cast<Eigen::Index>(a.dim());
  const auto db = static_cast<Eigen::Index>(b.dim());
  Eigen::VectorXcd out(da * db);
  for (Eigen::Index i = 0; i < da; ++i) out.segment(i * db, db) = a.amps()(i) * b.amps();
  return StateVector(shape, std::move(out));
}

StateVector apply(const Operator& op, const StateVector& s) {
  if (op.shape() != s.shape()) throw ContractViolation("apply: shape mismatch");
  return StateVector(s.shape(), op.matrix() * s.amps());
}

Operator expi_hermitian(const Operator& h, double tau) {
  if (!h.is_hermitian()) throw ContractViolation("expi_hermitian: operator is not hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw ContractViolation("expi_hermitian: eigendecomposition failed");
  }
  const Eigen::VectorXd& evals = solver.eigenvalues();
  const Eigen::MatrixXcd& evecs = solver.eigenvectors();
  Eigen::VectorXcd phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, evals(k) * tau));
  }
  Eigen::MatrixXcd u = evecs * phases.asDiagonal() * evecs.adjoint();
  const auto d = static_cast<Eigen::Index>(h.dim());
  const double defect = (u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)).norm();
  if (defect > kIdentityTol) {
    throw ContractViolation("expi_hermitian: result failed unitarity validation");
  }
  return Operator(h.shape(), std::move(u));
}

Complex overlap(const StateVector& a, const StateVector& b) {
  if (a.shape() != b.shape()) throw ContractViolation("overlap: shape mismatch");
  return a.amps().dot(b.amps());
}

double frob_distance(const Operator& a, const Operator& b) {
  if (a.shape() != b.shape()) throw ContractViolation("frob_distance: shape mismatch");
  return (a.matrix() - b.matrix()).norm();
}

}  // namespace ctrlshift
