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

#include <string>

#include "ctrlshift/processor.hpp"
#include "ctrlshift/qca.hpp"

namespace ctrlshift {

// Malformed or inconsistent input text. Distinct from ContractViolation so
// callers can map input errors and internal failures to different exit codes.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Complex numbers encode as [re, im]; vectors as arrays of those; matrices
// as row-major nested arrays; shapes as arrays of site dimensions.
std::string state_amps_to_json(const StateVector& s);
std::string operator_to_json(const Operator& op);

// {"data_shape":[...], "gate_set":[...], "program":[k1,...,kL],
//  "initial_state": optional amplitudes (default |0...0>)}
// Gate-set entries: {"kind":"pauli_exp","axes":[...],"phi":x},
// {"kind":"named","name":"identity|cnot12|dnot|hadamard|swap"}, or
// {"kind":"matrix","rows":[[[re,im],...],...]}.
struct ProgramFileContents {
  ProcessorConfig config;
  Program program;
  StateVector initial_state;
};
ProgramFileContents parse_program_file(const std::string& text);

// {"data_qubits":d, "perimeter":2L, "lines":[{"kind":"one"|"two",
//  "slots":[...]}], "sequence":"U_IV"|"U_VI", "dtau":x, "repetitions":L,
//  "initial_state": optional amplitudes (default |0...0>)}
struct QcaFileContents {
  Lattice lattice;
  UpdateSequence sequence;
  double dtau = 1.0;
  int repetitions = 1;
};
QcaFileContents parse_qca_config(const std::string& text);

}  // namespace ctrlshift
