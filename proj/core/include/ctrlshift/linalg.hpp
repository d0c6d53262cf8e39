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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ctrlshift {

using Complex = std::complex<double>;

// Tolerance used when tagging operators (unitary/hermitian) and checking
// state normalization.
inline constexpr double kValidationTol = 1e-10;
// Tolerance for exact matrix identities (exponential postconditions etc.).
inline constexpr double kIdentityTol = 1e-12;

// A precondition or value contract was violated (shape mismatch, lost
// normalization, non-hermitian input to a spectral routine, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested register would exceed the configured dimension cap.
class CapacityExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Dimension cap for any register. Reads CTRLSHIFT_MAX_DIM from the
// environment, defaulting to 2^20.
std::size_t max_total_dim();

// Mixed-radix factorization of a Hilbert space into sites. Site 0 is the
// most significant factor of a flat index (big-endian digit order).
class RegisterShape {
 public:
  explicit RegisterShape(std::vector<int> site_dims);

  static RegisterShape qubits(int n);
  static RegisterShape single_site(int dim);

  int num_sites() const { return static_cast<int>(dims_.size()); }
  int site_dim(int site) const { return dims_.at(static_cast<std::size_t>(site)); }
  std::size_t total_dim() const { return total_; }
  const std::vector<int>& site_dims() const { return dims_; }

  // Shape of the tensor product this ⊗ other.
  RegisterShape concat(const RegisterShape& other) const;

  std::size_t flat_index(std::span<const int> digits) const;
  std::vector<int> digits(std::size_t index) const;

  bool operator==(const RegisterShape& other) const { return dims_ == other.dims_; }
  bool operator!=(const RegisterShape& other) const { return !(*this == other); }

 private:
  std::vector<int> dims_;
  std::size_t total_ = 1;
};

// Complex amplitude vector over a RegisterShape. Construction requires unit
// Euclidean norm (within kValidationTol) and finite entries.
class StateVector {
 public:
  StateVector(RegisterShape shape, Eigen::VectorXcd amps);

  // Scales a raw vector to unit norm before constructing.
  static StateVector normalized(RegisterShape shape, Eigen::VectorXcd raw);
  static StateVector basis_state(const RegisterShape& shape, std::size_t index);
  static StateVector basis_state(const RegisterShape& shape, std::span<const int> digits);

  const RegisterShape& shape() const { return shape_; }
  const Eigen::VectorXcd& amps() const { return amps_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }

 private:
  RegisterShape shape_;
  Eigen::VectorXcd amps_;
};

// Dense square matrix over a RegisterShape. Unitary/hermitian tags are
// evaluated once at construction against kValidationTol.
class Operator {
 public:
  Operator(RegisterShape shape, Eigen::MatrixXcd entries);

  static Operator identity(const RegisterShape& shape);

  const RegisterShape& shape() const { return shape_; }
  const Eigen::MatrixXcd& matrix() const { return entries_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  bool is_unitary() const { return unitary_; }
  bool is_hermitian() const { return hermitian_; }

  Operator adjoint() const;

  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(Complex scale, const Operator& a);

 private:
  RegisterShape shape_;
  Eigen::MatrixXcd entries_;
  bool unitary_ = false;
  bool hermitian_ = false;
};

// Kronecker products with the left operand most significant.
Operator tensor(const Operator& a, const Operator& b);
StateVector tensor(const StateVector& a, const StateVector& b);

// Matrix-vector application. No renormalization: a validated unitary
// preserves the norm on its own.
StateVector apply(const Operator& op, const StateVector& s);

// exp(i*h*tau) via the spectral decomposition of hermitian h. The result is
// validated unitary within kIdentityTol. Pass -tau for exp(-i*h*tau).
Operator expi_hermitian(const Operator& h, double tau);

// <a|b> with conjugation on the first argument.
Complex overlap(const StateVector& a, const StateVector& b);

// Frobenius distance ||a - b||_F.
double frob_distance(const Operator& a, const Operator& b);

}  // namespace ctrlshift
