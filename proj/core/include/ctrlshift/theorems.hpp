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

#include "ctrlshift/gates.hpp"
#include "ctrlshift/linalg.hpp"

namespace ctrlshift {

// Which factor of the composite register holds the program state.
enum class RegisterOrder { DataFirst, ProgramFirst };

// Thrown when a network output that must factor as program x data is
// entangled beyond the stated tolerance. Carries the rank-1 defect.
class ProductStructureViolation : public ContractViolation {
 public:
  ProductStructureViolation(const std::string& msg, double violation)
      : ContractViolation(msg), violation_(violation) {}
  double violation() const { return violation_; }

 private:
  double violation_;
};

struct OrthogonalityReport {
  Complex program_overlap;        // <Pi|Xi>
  std::vector<double> residuals;  // per data sample
  double max_violation = 0.0;
};

// Checks that a programmable network forces distinct induced gates onto
// orthogonal program states: extracts (u_Pi, |Pi'>) and (u_Xi, |Xi'>) from
// the network by rank-1 factorization over data basis inputs, then evaluates
// |<Pi|Xi> - <D|u_Pi^dag u_Xi|D><Pi'|Xi'>| per data sample. Throws
// ProductStructureViolation when an output is entangled beyond 1e-8.
OrthogonalityReport program_orthogonality_check(const Operator& network, RegisterOrder order,
                                                const StateVector& program_a,
                                                const StateVector& program_b,
                                                const std::vector<StateVector>& data_samples);

// For two non-orthogonal data states under one program, the residual program
// states must coincide; returns the phase-aligned distance || |Pi_1'> -
// |Pi_2'> ||. Orthogonal data inputs are rejected (the argument degenerates).
double output_independence_check(const Operator& network, RegisterOrder order,
                                 const StateVector& program, const StateVector& data_a,
                                 const StateVector& data_b);

// The linear, non-unitary matrix-multiplication operator on three dim-n
// registers: |k>|i>|j> -> delta_{jk} |i>|0>|0>.
Operator matrix_mult_operator(int n);

// The scaled variant matched to encode_operator_state's register order and
// normalization, so that map(psi x |U>) = (U psi)|0,0>.
Operator make_programming_map(int n);

struct ProgrammingApplication {
  Eigen::VectorXcd output;  // raw result, unnormalized when A is not unitary
  double norm = 0.0;
};

// Applies the matrix-multiplication operator to psi x |A>, |A> the raw
// (unnormalized) row-major encoding of A's entries.
ProgrammingApplication apply_programming_operator(const StateVector& psi, const Operator& a);

struct OperatorEncoding {
  StateVector state;          // normalized program state
  double raw_norm = 0.0;      // norm before normalization; 1 for unitary input
  bool unitary_input = true;  // false flags a non-unitary (warned) encoding
};

// |U> = (1/sqrt(n)) sum_j |j> (U|j>), the unit-norm program state storing a
// unitary's matrix. Non-unitary inputs are permitted but flagged.
OperatorEncoding encode_operator_state(const Operator& u);

enum class BellOutcome { PhiPlus, PsiPlus, PsiMinus, PhiMinus };

struct BellProjection {
  double probability = 0.0;
  StateVector post_state;
};

// Projects the first two qubits of |psi>|U> onto a Bell state. Every outcome
// has probability 1/4; the PhiPlus branch leaves U|psi> on the third qubit.
BellProjection bell_project(const StateVector& psi, const Operator& u, BellOutcome outcome);

struct ResidueReport {
  Operator residue;                       // R = G - L
  double reconstruction_residual = 0.0;   // max probe deviation of G = L + R
  double programming_nonunitarity = 0.0;  // ||L^dag L - 1||_F
};

// Splits a unitary G against a programming map L as G = L + R and witnesses
// the non-unitarity of L.
ResidueReport residue_decomposition(const Operator& g, const Operator& programming_map);

struct LieClosureReport {
  int generator_count = 0;
  int closure_dimension = 0;  // real dimension of the traceless span
  int depth_reached = 0;      // commutator rounds that added a direction
};

// Iteratively extends the real span of the generators' traceless parts with
// i[A, B] until a fixed point or max_depth rounds. Dimension 4^n - 1 on n
// qubits certifies universality of the set.
LieClosureReport lie_closure_dimension(const std::vector<Operator>& generators, int max_depth);

struct ProductFormulaErrors {
  double sum_error = 0.0;         // ||e^{-iH1 t} e^{-iH2 t} - e^{-i(H1+H2) t}||_F, O(t^2)
  double commutator_error = 0.0;  // ||U1 U2 U1^-1 U2^-1 - e^{-[H1,H2] t^2}||_F, O(t^3)
};

ProductFormulaErrors product_formula_error(const Operator& h1, const Operator& h2, double tau);

// <R| u(phi) |R> for the plane rotation u(phi) and the real unit vector
// (rx, ry); equals cos(phi) for every such vector.
double rebit_expectation(double phi, double rx, double ry);

}  // namespace ctrlshift
