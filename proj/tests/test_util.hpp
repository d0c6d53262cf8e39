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

#include <random>

#include "ctrlshift/gates.hpp"
#include "ctrlshift/linalg.hpp"

namespace ctrlshift::testing {

using Rng = std::mt19937_64;

inline Eigen::VectorXcd random_amps(Rng& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v;
}

inline StateVector random_state(Rng& rng, const RegisterShape& shape) {
  return StateVector::normalized(shape,
                                 random_amps(rng, static_cast<Eigen::Index>(shape.total_dim())));
}

// Haar-ish unitary from the QR factorization of a complex Gaussian matrix.
inline Operator random_unitary(Rng& rng, const RegisterShape& shape) {
  const auto dim = static_cast<Eigen::Index>(shape.total_dim());
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) g.col(c) = random_amps(rng, dim);
  Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
  return Operator(shape, std::move(q));
}

inline GateSet random_gate_set(Rng& rng, const RegisterShape& shape, int m) {
  std::vector<Operator> gates;
  gates.push_back(Operator::identity(shape));
  for (int k = 1; k < m; ++k) gates.push_back(random_unitary(rng, shape));
  return GateSet(std::move(gates));
}

inline PauliString random_string(Rng& rng, int n) {
  std::uniform_int_distribution<int> idx(0, 3);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int& x : v) x = idx(rng);
  return PauliString(std::move(v));
}

inline double phase_aligned_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const Complex ov = a.dot(b);
  const Complex phase = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex(1.0);
  return (a * phase - b).norm();
}

}  // namespace ctrlshift::testing
