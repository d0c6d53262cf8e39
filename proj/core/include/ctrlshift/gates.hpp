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

#include <vector>

#include "ctrlshift/linalg.hpp"

namespace ctrlshift {

// Sign convention for sigma_y, named by its (0,1) entry. The library default
// is PlusI, i.e. sigma_y = (0, i; -i, 0); MinusI selects the opposite sign.
// Every identity used here holds for either choice, but the middle factor of
// decompose_controlled_diag changes sign with it.
enum class SigmaYSign { PlusI, MinusI };

inline constexpr SigmaYSign kDefaultSigmaY = SigmaYSign::PlusI;

// Multi-index j = (j_1, ..., j_n), j_k in {0,1,2,3}, naming the tensor
// product of single-site Pauli matrices sigma_{j_1} x ... x sigma_{j_n}.
class PauliString {
 public:
  explicit PauliString(std::vector<int> indices);

  // Identity everywhere except the named sites.
  static PauliString single_site(int num_sites, int site, int index);
  static PauliString two_site(int num_sites, int site_a, int index_a, int site_b, int index_b);

  int num_sites() const { return static_cast<int>(indices_.size()); }
  int index(int site) const { return indices_.at(static_cast<std::size_t>(site)); }
  const std::vector<int>& indices() const { return indices_; }

  // Exact (integer) commutation test: two strings either commute or
  // anticommute, depending on the parity of sites with distinct non-identity
  // indices.
  bool commutes_with(const PauliString& other) const;

  bool operator==(const PauliString& other) const { return indices_ == other.indices_; }

 private:
  std::vector<int> indices_;
};

// The four single-qubit Pauli matrices, j in {0,1,2,3}.
Operator pauli(int j, SigmaYSign ysign = kDefaultSigmaY);

// Tensor product of Pauli matrices indexed by the string. Hermitian, unitary,
// squares to the identity.
Operator pauli_string(const PauliString& js, SigmaYSign ysign = kDefaultSigmaY);

// Closed form exp(i*phi*H_j) = cos(phi)*1 + i*sin(phi)*H_j.
Operator pauli_exp(const PauliString& js, double phi, SigmaYSign ysign = kDefaultSigmaY);

// exp(-[H_j, H_k]*tau): the identity when the strings commute, otherwise the
// three-factor product exp(i pi/4 H_j) exp(2 i tau H_k) exp(-i pi/4 H_j).
Operator commutator_exp(const PauliString& j, const PauliString& k, double tau,
                        SigmaYSign ysign = kDefaultSigmaY);

// The 2n+1 generators whose Lie closure spans all traceless hermitian
// matrices on n qubits: sigma_3 on sites 0 and 1, sigma_1 on every site, and
// sigma_3 sigma_3 on every adjacent pair. Requires n >= 2.
std::vector<PauliString> universal_generators(int n);

// Ordered gate set u_0..u_{m-1} over a common data shape. Entry 0 must be the
// identity; every entry must be unitary.
class GateSet {
 public:
  explicit GateSet(std::vector<Operator> gates);

  int size() const { return static_cast<int>(gates_.size()); }
  const Operator& gate(int k) const;
  const std::vector<Operator>& gates() const { return gates_; }
  const RegisterShape& data_shape() const { return gates_.front().shape(); }

 private:
  std::vector<Operator> gates_;
};

// Controlled-u on two qubits: block-diag(1, u), with the first qubit as
// control.
Operator controlled(const Operator& u);

// Conditional dynamics sum_k |k><k| x u_k, an (m*n)x(m*n) block-diagonal
// unitary with the program register as the first (most significant) system.
Operator conditional(const GateSet& gs);

// (sqrt(2)/2) * (1, 1; 1, -1).
Operator hadamard();

// The fixed control Hamiltonians. X2/Z2 act on two qubits, D3/P3/D3Centered
// on three qubits, Qutrit32 on a qutrit-qubit pair.
enum class ControlHamiltonianKind { X2, Z2, D3, P3, Qutrit32, D3Centered };

Operator control_hamiltonian(ControlHamiltonianKind kind);

// The qutrit-controlled Hamiltonian assembled from projectors:
// |1><1| x sigma_x + |2><2| x sigma_z (the |0> branch does not evolve).
// Equals control_hamiltonian(Qutrit32) entrywise.
Operator qutrit_control_projector_form();

// Four two-body exponential factors embedded in three qubits whose ordered
// product (leftmost applied last) equals exp(i*h*tau) for
// h = control_hamiltonian(centered ? D3Centered : D3).
std::vector<Operator> decompose_controlled_diag(double tau, bool centered,
                                                SigmaYSign ysign = kDefaultSigmaY);

// The controlled two-qubit interaction for an alternating data/control array:
// (1/2)(Z_{2k} Z_{2k+2} - Z_{2k} Z_{2k+1} Z_{2k+2}) on 0-based sites,
// embedded in total_sites qubits. Data qubits sit at even 0-based positions,
// controls between them. All instances are diagonal and mutually commute.
Operator indexed_two_qubit_hamiltonian(int k, int total_sites);

}  // namespace ctrlshift
