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

#include <utility>

#include "json.hpp"

namespace ctrlshift {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

json complex_to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail("complex values must be [re, im] number pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Eigen::VectorXcd amps_from_json(const json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected) {
    fail("amplitude array has wrong length");
  }
  Eigen::VectorXcd v(static_cast<Eigen::Index>(expected));
  for (std::size_t i = 0; i < expected; ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  }
  return v;
}

RegisterShape shape_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail("shape must be a nonempty array of site dimensions");
  std::vector<int> dims;
  for (const auto& d : j) {
    if (!d.is_number_integer()) fail("shape entries must be integers");
    dims.push_back(d.get<int>());
  }
  return RegisterShape(std::move(dims));
}

Operator named_gate(const std::string& name, const RegisterShape& data_shape) {
  if (name == "identity") return Operator::identity(data_shape);
  if (name == "hadamard") return hadamard();
  if (name == "cnot12") return controlled(pauli(1));
  if (name == "dnot") return controlled(pauli(3));
  if (name == "swap") return swap_gate(2);
  fail("unknown named gate: " + name);
}

Operator gate_from_json(const json& j, const RegisterShape& data_shape) {
  if (!j.is_object() || !j.contains("kind")) fail("gate entries must be objects with a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "named") {
    return named_gate(j.at("name").get<std::string>(), data_shape);
  }
  if (kind == "pauli_exp") {
    const json& axes = j.at("axes");
    if (!axes.is_array() || axes.empty()) fail("pauli_exp axes must be a nonempty array");
    std::vector<int> idx;
    for (const auto& a : axes) idx.push_back(a.get<int>());
    if (!j.contains("phi") || !j.at("phi").is_number()) fail("pauli_exp needs a numeric phi");
    return pauli_exp(PauliString(std::move(idx)), j.at("phi").get<double>());
  }
  if (kind == "matrix") {
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) fail("matrix rows must be a nonempty array");
    const auto dim = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
        fail("matrix rows must be square");
      }
      for (Eigen::Index c = 0; c < dim; ++c) {
        m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
      }
    }
    if (static_cast<std::size_t>(dim) != data_shape.total_dim()) {
      fail("matrix gate size does not match data_shape");
    }
    return Operator(data_shape, std::move(m));
  }
  fail("unknown gate kind: " + kind);
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("input is not valid JSON");
  if (!j.is_object()) fail("top-level JSON value must be an object");
  return j;
}

}  // namespace

std::string state_amps_to_json(const StateVector& s) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < s.amps().size(); ++i) arr.push_back(complex_to_json(s.amps()(i)));
  return arr.dump();
}

std::string operator_to_json(const Operator& op) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < op.matrix().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < op.matrix().cols(); ++c) {
      row.push_back(complex_to_json(op.matrix()(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

ProgramFileContents parse_program_file(const std::string& text) {
  const json j = parse_text(text);
  try {
    if (!j.contains("data_shape")) fail("missing data_shape");
    const RegisterShape data_shape = shape_from_json(j.at("data_shape"));

    if (!j.contains("gate_set") || !j.at("gate_set").is_array() || j.at("gate_set").empty()) {
      fail("gate_set must be a nonempty array");
    }
    std::vector<Operator> gates;
    for (const auto& g : j.at("gate_set")) {
      Operator gate = gate_from_json(g, data_shape);
      if (gate.shape().total_dim() != data_shape.total_dim()) {
        fail("gate dimension does not match data_shape");
      }
      gates.emplace_back(data_shape, gate.matrix());
    }
    GateSet gate_set(std::move(gates));

    if (!j.contains("program") || !j.at("program").is_array() || j.at("program").empty()) {
      fail("program must be a nonempty array of gate indices");
    }
    std::vector<int> steps;
    for (const auto& k : j.at("program")) {
      if (!k.is_number_integer()) fail("program entries must be integers");
      const int v = k.get<int>();
      if (v < 0 || v >= gate_set.size()) fail("program index out of gate-set range");
      steps.push_back(v);
    }
    Program program(std::move(steps));

    StateVector initial =
        j.contains("initial_state")
            ? StateVector(data_shape, amps_from_json(j.at("initial_state"),
                                                     data_shape.total_dim()))
            : StateVector::basis_state(data_shape, 0);

    return ProgramFileContents{ProcessorConfig(std::move(gate_set), program.length()),
                               std::move(program), std::move(initial)};
  } catch (const ContractViolation& e) {
    fail(std::string("invalid program file: ") + e.what());
  } catch (const json::exception& e) {
    fail(std::string("invalid program file: ") + e.what());
  }
}

QcaFileContents parse_qca_config(const std::string& text) {
  const json j = parse_text(text);
  try {
    for (const char* key : {"data_qubits", "perimeter", "lines", "sequence", "dtau",
                            "repetitions"}) {
      if (!j.contains(key)) fail(std::string("missing ") + key);
    }
    const int data_qubits = j.at("data_qubits").get<int>();
    const int perimeter = j.at("perimeter").get<int>();

    const json& jlines = j.at("lines");
    if (!jlines.is_array()) fail("lines must be an array");
    std::vector<ProgramLine> lines;
    for (const auto& jl : jlines) {
      const std::string kind = jl.at("kind").get<std::string>();
      if (kind != "one" && kind != "two") fail("line kind must be \"one\" or \"two\"");
      ProgramLine line{kind == "one" ? LineKind::OneQubit : LineKind::TwoQubit, {}};
      for (const auto& s : jl.at("slots")) {
        if (!s.is_number_integer()) fail("slot values must be integers");
        line.slots.push_back(s.get<int>());
      }
      if (static_cast<int>(line.slots.size()) != perimeter) {
        fail("every line must have perimeter-many slots");
      }
      lines.push_back(std::move(line));
    }

    const RegisterShape data_shape = RegisterShape::qubits(data_qubits);
    StateVector initial =
        j.contains("initial_state")
            ? StateVector(data_shape, amps_from_json(j.at("initial_state"),
                                                     data_shape.total_dim()))
            : StateVector::basis_state(data_shape, 0);

    const std::string seq = j.at("sequence").get<std::string>();
    if (seq != "U_IV" && seq != "U_VI") fail("sequence must be \"U_IV\" or \"U_VI\"");

    QcaFileContents out{Lattice(std::move(lines), std::move(initial)),
                        seq == "U_IV" ? UpdateSequence::FourStep : UpdateSequence::SixStep,
                        j.at("dtau").get<double>(), j.at("repetitions").get<int>()};
    if (out.repetitions < 1) fail("repetitions must be >= 1");
    return out;
  } catch (const ContractViolation& e) {
    fail(std::string("invalid qca config: ") + e.what());
  } catch (const json::exception& e) {
    fail(std::string("invalid qca config: ") + e.what());
  }
}

}  // namespace ctrlshift
