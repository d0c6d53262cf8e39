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

#include "ctrlshift/json_io.hpp"

#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using namespace ctrlshift;
using ctrlshift::testing::Rng;

TEST_CASE("state amplitudes serialize as [re, im] pairs") {
  const StateVector s = StateVector::basis_state(RegisterShape::qubits(1), std::size_t{1});
  const auto j = nlohmann::json::parse(state_amps_to_json(s));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  CHECK(j[0][0].get<double>() == 0.0);
  CHECK(j[1][0].get<double>() == 1.0);
  CHECK(j[1][1].get<double>() == 0.0);
}

TEST_CASE("operators serialize row-major") {
  const auto j = nlohmann::json::parse(operator_to_json(pauli(2)));
  REQUIRE(j.size() == 2);
  CHECK(j[0][1][1].get<double>() == 1.0);   // entry (0,1) = +i
  CHECK(j[1][0][1].get<double>() == -1.0);  // entry (1,0) = -i
}

TEST_CASE("program files parse into configs, programs, and initial states") {
  const std::string text = R"({
    "data_shape": [2],
    "gate_set": [
      {"kind": "named", "name": "identity"},
      {"kind": "pauli_exp", "axes": [1], "phi": 1.5707963267948966},
      {"kind": "matrix", "rows": [[[1,0],[0,0]],[[0,0],[-1,0]]]}
    ],
    "program": [1, 2, 0]
  })";
  const ProgramFileContents contents = parse_program_file(text);
  CHECK(contents.config.gate_set().size() == 3);
  CHECK(contents.config.length() == 3);
  CHECK(contents.program.steps() == std::vector<int>{1, 2, 0});
  CHECK(contents.initial_state.amps()(0) == Complex(1.0));

  const std::string with_state = R"({
    "data_shape": [2, 2],
    "gate_set": [{"kind": "named", "name": "identity"},
                 {"kind": "named", "name": "cnot12"},
                 {"kind": "named", "name": "swap"},
                 {"kind": "named", "name": "dnot"}],
    "program": [1, 2, 3],
    "initial_state": [[0,0],[0,0],[1,0],[0,0]]
  })";
  const ProgramFileContents two = parse_program_file(with_state);
  CHECK(two.initial_state.amps()(2) == Complex(1.0));
}

TEST_CASE("program files reject malformed content") {
  CHECK_THROWS_AS(parse_program_file("not json"), ParseError);
  CHECK_THROWS_AS(parse_program_file("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_program_file(R"({"data_shape":[2]})"), ParseError);
  // Program index outside the gate set.
  CHECK_THROWS_AS(parse_program_file(R"({
    "data_shape": [2],
    "gate_set": [{"kind": "named", "name": "identity"}],
    "program": [1]
  })"),
                  ParseError);
  // Entry 0 must be the identity.
  CHECK_THROWS_AS(parse_program_file(R"({
    "data_shape": [2],
    "gate_set": [{"kind": "named", "name": "hadamard"}],
    "program": [0]
  })"),
                  ParseError);
  // Non-unitary matrix entry.
  CHECK_THROWS_AS(parse_program_file(R"({
    "data_shape": [2],
    "gate_set": [{"kind": "named", "name": "identity"},
                 {"kind": "matrix", "rows": [[[1,0],[0,0]],[[0,0],[0,0]]]}],
    "program": [1]
  })"),
                  ParseError);
  // Unnormalized initial state.
  CHECK_THROWS_AS(parse_program_file(R"({
    "data_shape": [2],
    "gate_set": [{"kind": "named", "name": "identity"}],
    "program": [0],
    "initial_state": [[0.5,0],[0,0]]
  })"),
                  ParseError);
}

TEST_CASE("qca configs parse into lattices") {
  const std::string text = R"({
    "data_qubits": 2,
    "perimeter": 4,
    "lines": [
      {"kind": "one", "slots": [0, 0, 1, 0]},
      {"kind": "two", "slots": [0, 1, 0, 0]},
      {"kind": "one", "slots": [0, 0, 2, 0]}
    ],
    "sequence": "U_IV",
    "dtau": 0.5,
    "repetitions": 2
  })";
  const QcaFileContents contents = parse_qca_config(text);
  CHECK(contents.lattice.data_qubits() == 2);
  CHECK(contents.lattice.perimeter() == 4);
  CHECK(contents.sequence == UpdateSequence::FourStep);
  CHECK(contents.dtau == 0.5);
  CHECK(contents.repetitions == 2);

  CHECK_THROWS_AS(parse_qca_config(R"({"data_qubits": 2})"), ParseError);
  // Checkerboard violations surface as parse errors.
  CHECK_THROWS_AS(parse_qca_config(R"({
    "data_qubits": 2, "perimeter": 2,
    "lines": [{"kind": "one", "slots": [1, 0]},
              {"kind": "two", "slots": [1, 0]},
              {"kind": "one", "slots": [0, 0]}],
    "sequence": "U_VI", "dtau": 1.0, "repetitions": 1
  })"),
                  ParseError);
}

TEST_CASE("serialization round-trips through the matrix gate kind") {
  Rng rng(51);
  const Operator u = testing::random_unitary(rng, RegisterShape::qubits(1));
  nlohmann::json file;
  file["data_shape"] = {2};
  file["gate_set"] = nlohmann::json::array();
  file["gate_set"].push_back({{"kind", "named"}, {"name", "identity"}});
  file["gate_set"].push_back(
      {{"kind", "matrix"}, {"rows", nlohmann::json::parse(operator_to_json(u))}});
  file["program"] = {1};
  const ProgramFileContents contents = parse_program_file(file.dump());
  CHECK(frob_distance(contents.config.gate_set().gate(1), u) <= 1e-12);
}
