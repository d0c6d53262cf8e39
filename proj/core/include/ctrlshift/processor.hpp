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

// Finite instruction sequence (k_1, ..., k_L) of gate-set indices, in
// execution order.
class Program {
 public:
  explicit Program(std::vector<int> steps);

  int length() const { return static_cast<int>(steps_.size()); }
  int step(int i) const { return steps_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& steps() const { return steps_; }

 private:
  std::vector<int> steps_;
};

// Gate set plus cycle length L. The program/control bus is modeled as L
// slots of radix m = gate-set size.
class ProcessorConfig {
 public:
  ProcessorConfig(GateSet gate_set, int length);

  const GateSet& gate_set() const { return gate_set_; }
  int length() const { return length_; }
  const RegisterShape& data_shape() const { return gate_set_.data_shape(); }

 private:
  GateSet gate_set_;
  int length_;
};

// Joint configuration of the intermediate buses and the quantum data bus.
// The buses hold only basis states, so they are kept as a classical index
// tuple; slot 0 is the control slot read by the next control step.
class JointState {
 public:
  JointState(std::vector<int> slots, StateVector data);

  const std::vector<int>& slots() const { return slots_; }
  const StateVector& data() const { return data_; }

 private:
  std::vector<int> slots_;
  StateVector data_;
};

// Cyclic shift of the bus tuple: the control index rotates to the back and
// the next instruction becomes the control. Data untouched.
JointState shift(const JointState& js);

// Applies the gate selected by the control slot to the data bus.
JointState control_step(const JointState& js, const ProcessorConfig& cfg);

// Runs the full L-step cycle: returns u_{k_L} ... u_{k_2} u_{k_1} |data>.
// The bus tuple is asserted to return to its initial value.
StateVector run(const Program& prog, const ProcessorConfig& cfg, const StateVector& data);

// The full shift*control unitary on the m^L x data space, with the bus slots
// represented quantum-mechanically. Used to cross-validate run at small L.
Operator conditional_full_operator(const ProcessorConfig& cfg);

// Single-qubit phase-rotation gate set {exp(i 2 pi k / n sigma_z)}, k = 0..n-1.
GateSet u1_gate_set(int n);

struct AngleSearchResult {
  long long steps = 0;     // best repetition count m found
  double error = 0.0;      // circular distance |m*dtau - theta| mod 2pi
  bool found = false;      // true iff error <= eps within max_steps
};

// Smallest m <= max_steps with |m*dtau - theta| <= eps on the circle; when
// none qualifies, reports the best m scanned and its error with found=false.
AngleSearchResult approximate_angle(double theta, double dtau, double eps,
                                    long long max_steps);

}  // namespace ctrlshift
