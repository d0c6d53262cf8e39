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
#include "ctrlshift/processor.hpp"

namespace ctrlshift {

// Program lines feeding the control elements of the cylindrical automaton.
// OneQubit lines carry qutrit-valued indices {0,1,2} selecting nothing /
// sigma_x / sigma_z on their data qubit; TwoQubit lines carry {0,1} switching
// the sigma_z sigma_z interaction of their data-qubit pair.
enum class LineKind { OneQubit, TwoQubit };

struct ProgramLine {
  LineKind kind;
  std::vector<int> slots;  // cyclic contents, read at slot 0
};

// The cylinder: 2d-1 program lines of equal even perimeter over d data
// qubits, alternating kinds. Line 2q is the one-qubit line of data qubit q;
// line 2p+1 the two-qubit line between data qubits p and p+1. Nonzero slots
// of one-qubit lines and of two-qubit lines must occupy opposite parities
// (the checkerboard arrangement), so the two control layers never act in the
// same half-step.
class Lattice {
 public:
  Lattice(std::vector<ProgramLine> lines, StateVector data);

  int data_qubits() const { return (static_cast<int>(lines_.size()) + 1) / 2; }
  int perimeter() const { return static_cast<int>(lines_.front().slots.size()); }
  const std::vector<ProgramLine>& lines() const { return lines_; }
  const StateVector& data() const { return data_; }

  Lattice with_lines(std::vector<ProgramLine> lines) const;
  Lattice with_data(StateVector data) const;

 private:
  std::vector<ProgramLine> lines_;
  StateVector data_;
};

// The d^2 x d^2 exchange permutation |k>|l> -> |l>|k>, d in {2, 3}.
Operator swap_gate(int d);

// S1 exchanges slot pairs (0,1),(2,3),...; S2 exchanges (1,2),(3,4),...,
// wrapping (perimeter-1, 0). Applied to every line; data untouched.
enum class ShiftStep { S1, S2 };
Lattice partition_shift(const Lattice& lat, ShiftStep step);

// (k_1, 0, k_2, 0, ..., k_L, 0): the program spread over 2L slots with zeros
// between instructions, so alternating partition shifts carry the
// instructions past the read position one per cycle.
std::vector<int> interleave_zeros(const std::vector<int>& program);

// Applies exp(i*H*dtau) to the data register, H the sum of the local
// Hamiltonians switched on by slot 0 of the layer's lines. The active local
// terms are checked pairwise commuting.
enum class ControlStep { C1, C2 };  // one-qubit layer / two-qubit layer
Lattice control_layer(const Lattice& lat, ControlStep which, double dtau);

// || exp(i sum_h dtau) - prod_h exp(i h dtau) ||_F; vanishes when the local
// Hamiltonians mutually commute.
double global_vs_local_check(const std::vector<Operator>& local_hams, double dtau);

// Global update words. FourStep = C1 S1 C2 S2 (checkerboard form); SixStep =
// C1 C2 S1 C1 C2 S2. Words apply right to left; each word advances the
// program by two slots, so perimeter/2 repetitions restore the lines.
enum class UpdateSequence { FourStep, SixStep };
Lattice evolve(const Lattice& lat, UpdateSequence seq, int repetitions, double dtau);

// One program step driving a single line; value 0 encodes an idle step.
struct LatticeInstruction {
  int line = 0;
  int value = 0;
};

// Builds the checkerboard lattice whose FourStep evolution executes the
// instructions in order: step w of a one-qubit line lands on slot 2w mod 2L,
// step w of a two-qubit line on slot 2L-2w+1 (both cyclic placements of the
// interleaved pattern, matching the drift directions of the two parities).
Lattice make_program_lattice(int data_qubits, const std::vector<LatticeInstruction>& steps,
                             StateVector data);

// The processor-side equivalents of a lattice instruction list: gate k+1 is
// the exponential of step k's control Hamiltonian at dtau on the full data
// register, and the program is simply (1, 2, ..., L).
GateSet lattice_gate_set(int data_qubits, const std::vector<LatticeInstruction>& steps,
                         double dtau);
Program lattice_program(int num_steps);

// Frobenius distance between the final data states of the FourStep lattice
// evolution and the Control-Shift run of the matching program.
double cross_check_processor(const Lattice& lat, const ProcessorConfig& cfg,
                             const Program& prog, double dtau);

}  // namespace ctrlshift
