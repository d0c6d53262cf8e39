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

#include "ctrlshift/gates.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace ctrlshift {

namespace {

constexpr Complex kI{0.0, 1.0};

void require(bool ok, const std::string& msg) {
  if (!ok) throw ContractViolation(msg);
}

Eigen::Matrix2cd pauli_matrix(int j, SigmaYSign ysign) {
  Eigen::Matrix2cd m;
  switch (j) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      if (ysign == SigmaYSign::PlusI) {
        m << 0, kI, -kI, 0;
      } else {
        m << 0, -kI, kI, 0;
      }
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw ContractViolation("pauli: index must be in 0..3");
  }
  return m;
}

}  // namespace

PauliString::PauliString(std::vector<int> indices) : indices_(std::move(indices)) {
  require(!indices_.empty(), "PauliString: length must be >= 1");
  for (int j : indices_) require(j >= 0 && j <= 3, "PauliString: indices must be in 0..3");
}

PauliString PauliString::single_site(int num_sites, int site, int index) {
  require(num_sites >= 1 && site >= 0 && site < num_sites,
          "PauliString::single_site: site out of range");
  std::vector<int> idx(static_cast<std::size_t>(num_sites), 0);
  idx[static_cast<std::size_t>(site)] = index;
  return PauliString(std::move(idx));
}

PauliString PauliString::two_site(int num_sites, int site_a, int index_a, int site_b,
                                  int index_b) {
  require(num_sites >= 2 && site_a >= 0 && site_a < num_sites && site_b >= 0 &&
              site_b < num_sites && site_a != site_b,
          "PauliString::two_site: sites out of range");
  std::vector<int> idx(static_cast<std::size_t>(num_sites), 0);
  idx[static_cast<std::size_t>(site_a)] = index_a;
  idx[static_cast<std::size_t>(site_b)] = index_b;
  return PauliString(std::move(idx));
}

bool PauliString::commutes_with(const PauliString& other) const {
  require(num_sites() == other.num_sites(), "PauliString::commutes_with: length mismatch");
  int anticommuting_sites = 0;
  for (int s = 0; s < num_sites(); ++s) {
    const int a = index(s);
    const int b = other.index(s);
    if (a != 0 && b != 0 && a != b) ++anticommuting_sites;
  }
  return anticommuting_sites % 2 == 0;
}

Operator pauli(int j, SigmaYSign ysign) {
  return Operator(RegisterShape::qubits(1), pauli_matrix(j, ysign));
}

Operator pauli_string(const PauliString& js, SigmaYSign ysign) {
  Eigen::MatrixXcd m = pauli_matrix(js.index(0), ysign);
  for (int s = 1; s < js.num_sites(); ++s) {
    const Eigen::Matrix2cd next = pauli_matrix(js.index(s), ysign);
    Eigen::MatrixXcd grown(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        grown.block(i * 2, j * 2, 2, 2) = m(i, j) * next;
      }
    }
    m = std::move(grown);
  }
  return Operator(RegisterShape::qubits(js.num_sites()), std::move(m));
}

Operator pauli_exp(const PauliString& js, double phi, SigmaYSign ysign) {
  const Operator h = pauli_string(js, ysign);
  const auto d = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXcd m = std::cos(phi) * Eigen::MatrixXcd::Identity(d, d) +
                       kI * std::sin(phi) * h.matrix();
  return Operator(h.shape(), std::move(m));
}

Operator commutator_exp(const PauliString& j, const PauliString& k, double tau,
                        SigmaYSign ysign) {
  require(j.num_sites() == k.num_sites(), "commutator_exp: string length mismatch");
  if (j.commutes_with(k)) return Operator::identity(RegisterShape::qubits(j.num_sites()));
  const double quarter = std::numbers::pi / 4.0;
  return pauli_exp(j, quarter, ysign) * pauli_exp(k, 2.0 * tau, ysign) *
         pauli_exp(j, -quarter, ysign);
}

std::vector<PauliString> universal_generators(int n) {
  require(n >= 2, "universal_generators: n must be >= 2");
  std::vector<PauliString> out;
  out.reserve(static_cast<std::size_t>(2 * n + 1));
  out.push_back(PauliString::single_site(n, 0, 3));
  out.push_back(PauliString::single_site(n, 1, 3));
  for (int k = 0; k < n; ++k) out.push_back(PauliString::single_site(n, k, 1));
  for (int k = 0; k + 1 < n; ++k) out.push_back(PauliString::two_site(n, k, 3, k + 1, 3));
  return out;
}

GateSet::GateSet(std::vector<Operator> gates) : gates_(std::move(gates)) {
  require(!gates_.empty(), "GateSet: at least one entry required");
  const RegisterShape& shape = gates_.front().shape();
  for (const Operator& g : gates_) {
    require(g.shape() == shape, "GateSet: entries must share one data shape");
    require(g.is_unitary(), "GateSet: every entry must be unitary");
  }
  require(frob_distance(gates_.front(), Operator::identity(shape)) <= kValidationTol,
          "GateSet: entry 0 must be the identity");
}

const Operator& GateSet::gate(int k) const {
  require(k >= 0 && k < size(), "GateSet::gate: index out of range");
  return gates_[static_cast<std::size_t>(k)];
}

Operator controlled(const Operator& u) {
  require(u.dim() == 2, "controlled: gate must be 2x2");
  require(u.is_unitary(), "controlled: gate must be unitary");
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m.block<2, 2>(2, 2) = u.matrix();
  return Operator(RegisterShape::qubits(2), m);
}

Operator conditional(const GateSet& gs) {
  const int m = gs.size();
  const auto d = static_cast<Eigen::Index>(gs.data_shape().total_dim());
  const RegisterShape shape = RegisterShape::single_site(m).concat(gs.data_shape());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m * d, m * d);
  for (int k = 0; k < m; ++k) out.block(k * d, k * d, d, d) = gs.gate(k).matrix();
  return Operator(shape, std::move(out));
}

Operator hadamard() {
  Eigen::Matrix2cd m;
  m << 1, 1, 1, -1;
  return Operator(RegisterShape::qubits(1), (std::sqrt(2.0) / 2.0) * m);
}

Operator control_hamiltonian(ControlHamiltonianKind kind) {
  switch (kind) {
    case ControlHamiltonianKind::X2: {
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
      m(2, 3) = 1.0;
      m(3, 2) = 1.0;
      return Operator(RegisterShape::qubits(2), m);
    }
    case ControlHamiltonianKind::Z2: {
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
      m(2, 2) = 1.0;
      m(3, 3) = -1.0;
      return Operator(RegisterShape::qubits(2), m);
    }
    case ControlHamiltonianKind::D3: {
      Eigen::VectorXcd diag(8);
      diag << 0, 0, 0, 0, 1, -1, -1, 1;
      return Operator(RegisterShape::qubits(3), Eigen::MatrixXcd(diag.asDiagonal()));
    }
    case ControlHamiltonianKind::P3: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
      m(2, 3) = 1.0;
      m(3, 2) = 1.0;
      m(4, 5) = kI;
      m(5, 4) = -kI;
      m(6, 6) = 1.0;
      m(7, 7) = -1.0;
      return Operator(RegisterShape::qubits(3), m);
    }
    case ControlHamiltonianKind::Qutrit32: {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(6, 6);
      m(2, 3) = 1.0;
      m(3, 2) = 1.0;
      m(4, 4) = 1.0;
      m(5, 5) = -1.0;
      return Operator(RegisterShape({3, 2}), m);
    }
    case ControlHamiltonianKind::D3Centered: {
      Eigen::VectorXcd diag(8);
      diag << 0, 0, 1, -1, 0, 0, -1, 1;
      return Operator(RegisterShape::qubits(3), Eigen::MatrixXcd(diag.asDiagonal()));
    }
  }
  throw ContractViolation("control_hamiltonian: unknown kind");
}

Operator qutrit_control_projector_form() {
  const RegisterShape qutrit = RegisterShape::single_site(3);
  Eigen::MatrixXcd p1 = Eigen::MatrixXcd::Zero(3, 3);
  p1(1, 1) = 1.0;
  Eigen::MatrixXcd p2 = Eigen::MatrixXcd::Zero(3, 3);
  p2(2, 2) = 1.0;
  return tensor(Operator(qutrit, p1), pauli(1)) + tensor(Operator(qutrit, p2), pauli(3));
}

std::vector<Operator> decompose_controlled_diag(double tau, bool centered, SigmaYSign ysign) {
  const double quarter = std::numbers::pi / 4.0;
  // With sigma_y = (0, i; -i, 0) the conjugation sends the middle generator to
  // +ZZZ, so its angle is -tau/2; the opposite convention flips the sign.
  const double mid = (ysign == SigmaYSign::PlusI) ? -tau / 2.0 : tau / 2.0;
  std::vector<Operator> factors;
  factors.reserve(4);
  if (centered) {
    factors.push_back(pauli_exp(PauliString({3, 0, 3}), tau / 2.0, ysign));
    factors.push_back(pauli_exp(PauliString({3, 1, 0}), quarter, ysign));
    factors.push_back(pauli_exp(PauliString({0, 2, 3}), mid, ysign));
    factors.push_back(pauli_exp(PauliString({3, 1, 0}), -quarter, ysign));
  } else {
    factors.push_back(pauli_exp(PauliString({0, 3, 3}), tau / 2.0, ysign));
    factors.push_back(pauli_exp(PauliString({1, 3, 0}), quarter, ysign));
    factors.push_back(pauli_exp(PauliString({2, 0, 3}), mid, ysign));
    factors.push_back(pauli_exp(PauliString({1, 3, 0}), -quarter, ysign));
  }
  return factors;
}

Operator indexed_two_qubit_hamiltonian(int k, int total_sites) {
  require(total_sites >= 3, "indexed_two_qubit_hamiltonian: need at least 3 sites");
  require(k >= 0 && 2 * k + 2 < total_sites,
          "indexed_two_qubit_hamiltonian: sites out of range");
  const PauliString outer = PauliString::two_site(total_sites, 2 * k, 3, 2 * k + 2, 3);
  std::vector<int> idx(static_cast<std::size_t>(total_sites), 0);
  idx[static_cast<std::size_t>(2 * k)] = 3;
  idx[static_cast<std::size_t>(2 * k + 1)] = 3;
  idx[static_cast<std::size_t>(2 * k + 2)] = 3;
  const PauliString full(idx);
  return Complex(0.5) * (pauli_string(outer) - pauli_string(full));
}

}  // namespace ctrlshift
