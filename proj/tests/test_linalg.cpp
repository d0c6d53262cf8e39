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

#include <cmath>
#include <numbers>

#include "ctrlshift/gates.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace ctrlshift;
using ctrlshift::testing::Rng;

namespace {

const RegisterShape kQubit = RegisterShape::qubits(1);

StateVector ket(int digit) { return StateVector::basis_state(kQubit, static_cast<std::size_t>(digit)); }

}  // namespace

TEST_CASE("register shape indexing is big-endian") {
  const RegisterShape shape({2, 3, 2});
  CHECK(shape.total_dim() == 12);
  const std::vector<int> digits{1, 2, 0};
  CHECK(shape.flat_index(digits) == 1 * 6 + 2 * 2 + 0);
  CHECK(shape.digits(10) == digits);
  CHECK_THROWS_AS(RegisterShape({2, 0}), ContractViolation);
  CHECK_THROWS_AS(RegisterShape({}), ContractViolation);
}

TEST_CASE("register capacity is enforced before allocation") {
  const RegisterShape half(std::vector<int>(10, 2));   // 2^10
  const RegisterShape rest(std::vector<int>(11, 2));   // 2^11
  CHECK_THROWS_AS(half.concat(rest), CapacityExceeded);  // 2^21 > 2^20
  CHECK_NOTHROW(half.concat(half));                      // 2^20 is allowed
}

TEST_CASE("the capacity cap honors CTRLSHIFT_MAX_DIM") {
  CHECK(max_total_dim() == (std::size_t{1} << 20));
  setenv("CTRLSHIFT_MAX_DIM", "8", 1);
  CHECK(max_total_dim() == 8);
  CHECK_THROWS_AS(RegisterShape::qubits(4), CapacityExceeded);
  CHECK_NOTHROW(RegisterShape::qubits(3));
  unsetenv("CTRLSHIFT_MAX_DIM");
  CHECK(max_total_dim() == (std::size_t{1} << 20));
}

TEST_CASE("state vectors must be normalized and finite") {
  Eigen::VectorXcd amps(2);
  amps << 0.5, 0.5;
  CHECK_THROWS_AS(StateVector(kQubit, amps), ContractViolation);
  CHECK_NOTHROW(StateVector::normalized(kQubit, amps));
  amps << std::nan(""), 0.0;
  CHECK_THROWS_AS(StateVector(kQubit, amps), ContractViolation);
}

TEST_CASE("tensor of identities is the identity") {
  const Operator id4 = tensor(pauli(0), pauli(0));
  CHECK(frob_distance(id4, Operator::identity(RegisterShape::qubits(2))) == 0.0);
}

TEST_CASE("tensor of basis states follows big-endian bookkeeping") {
  const StateVector t = tensor(ket(0), ket(1));
  CHECK(t.dim() == 4);
  CHECK(t.amps()(1) == Complex(1.0));
  CHECK(t.amps()(0) == Complex(0.0));
}

TEST_CASE("tensor of diagonal paulis reproduces the hand Kronecker product") {
  const Operator zz = tensor(pauli(3), pauli(3));
  Eigen::Vector4cd diag;
  diag << 1, -1, -1, 1;
  CHECK((zz.matrix() - Eigen::MatrixXcd(diag.asDiagonal())).norm() == 0.0);
}

TEST_CASE("tensor is associative and the dim-1 identity is neutral") {
  // Exact entry equality for exactly-representable entries.
  CHECK((tensor(tensor(pauli(1), pauli(2)), pauli(3)).matrix() -
         tensor(pauli(1), tensor(pauli(2), pauli(3))).matrix())
            .norm() == 0.0);

  Rng rng(7);
  const Operator a = testing::random_unitary(rng, kQubit);
  const Operator b = testing::random_unitary(rng, kQubit);
  const Operator c = testing::random_unitary(rng, kQubit);
  CHECK((tensor(tensor(a, b), c).matrix() - tensor(a, tensor(b, c)).matrix()).norm() <= 1e-15);

  const Operator unit = Operator::identity(RegisterShape::single_site(1));
  CHECK((tensor(unit, a).matrix() - a.matrix()).norm() == 0.0);
}

TEST_CASE("apply matches direct products and preserves norm") {
  CHECK(apply(Operator::identity(kQubit), ket(0)).amps() == ket(0).amps());
  CHECK(apply(pauli(1), ket(0)).amps() == ket(1).amps());

  // c-NOT exchanges the two last basis vectors: |10> -> |11>.
  const Operator cnot = controlled(pauli(1));
  const RegisterShape two = RegisterShape::qubits(2);
  const std::vector<int> one_zero{1, 0};
  const std::vector<int> one_one{1, 1};
  CHECK(apply(cnot, StateVector::basis_state(two, one_zero)).amps() ==
        StateVector::basis_state(two, one_one).amps());

  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    const Operator u = testing::random_unitary(rng, two);
    const StateVector s = testing::random_state(rng, two);
    CHECK(std::abs(apply(u, s).amps().norm() - 1.0) <= 1e-12);
  }

  CHECK_THROWS_AS(apply(cnot, ket(0)), ContractViolation);
}

TEST_CASE("hermitian exponential special values") {
  CHECK(frob_distance(expi_hermitian(pauli(3), 0.0), Operator::identity(kQubit)) == 0.0);

  // exp(i sigma_x pi/2) = i sigma_x.
  const Operator rotated = expi_hermitian(pauli(1), std::numbers::pi / 2.0);
  CHECK(frob_distance(rotated, Complex(0, 1) * pauli(1)) <= 1e-12);

  const double tau = 0.83;
  const Operator diag = expi_hermitian(pauli(3), tau);
  CHECK(std::abs(diag.matrix()(0, 0) - std::exp(Complex(0, tau))) <= 1e-12);
  CHECK(std::abs(diag.matrix()(1, 1) - std::exp(Complex(0, -tau))) <= 1e-12);
  CHECK(std::abs(diag.matrix()(0, 1)) <= 1e-14);

  Eigen::Matrix2cd skew;
  skew << 0, 1, 0, 0;
  CHECK_THROWS_AS(expi_hermitian(Operator(kQubit, skew), 1.0), ContractViolation);
}

TEST_CASE("hermitian exponential is additive in the angle") {
  Rng rng(3);
  const Eigen::MatrixXcd g = testing::random_amps(rng, 16).reshaped(4, 4);
  const Operator h(RegisterShape::qubits(2), g + g.adjoint());
  const Operator lhs = expi_hermitian(h, 0.4) * expi_hermitian(h, 0.9);
  CHECK(frob_distance(lhs, expi_hermitian(h, 1.3)) <= 1e-12);
}

TEST_CASE("overlap conjugates its first argument") {
  Eigen::VectorXcd plus(2);
  plus << std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0;
  const StateVector p(kQubit, plus);
  CHECK(std::abs(overlap(p, p) - Complex(1.0)) <= 1e-14);
  CHECK(overlap(ket(0), ket(1)) == Complex(0.0));
  CHECK(std::abs(overlap(p, ket(0)) - Complex(std::numbers::sqrt2 / 2.0)) <= 1e-14);

  Rng rng(5);
  const StateVector a = testing::random_state(rng, kQubit);
  const StateVector b = testing::random_state(rng, kQubit);
  CHECK(std::abs(overlap(a, b) - std::conj(overlap(b, a))) <= 1e-14);
}

TEST_CASE("frobenius distance entrywise cases") {
  CHECK(frob_distance(Operator::identity(kQubit), Operator::identity(kQubit)) == 0.0);
  CHECK(frob_distance(pauli(1), pauli(3)) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(frob_distance(pauli(0), Complex(-1) * pauli(0)) ==
        doctest::Approx(2.0 * std::numbers::sqrt2).epsilon(1e-14));
}

TEST_CASE("operator tags reflect validation") {
  CHECK(pauli(2).is_unitary());
  CHECK(pauli(2).is_hermitian());
  Eigen::Matrix2cd skew;
  skew << 0, 1, 0, 0;
  const Operator nilpotent(kQubit, skew);
  CHECK(!nilpotent.is_unitary());
  CHECK(!nilpotent.is_hermitian());
}
