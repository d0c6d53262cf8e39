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

#include "ctrlshift/qca.hpp"

#include <optional>
#include <utility>

namespace ctrlshift {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ContractViolation(msg);
}

int line_radix(LineKind kind) { return kind == LineKind::OneQubit ? 3 : 2; }

// The local data-register Hamiltonian switched on by a nonzero slot value.
PauliString local_term(int data_qubits, int line, int value) {
  if (line % 2 == 0) {
    const int qubit = line / 2;
    return PauliString::single_site(data_qubits, qubit, value == 1 ? 1 : 3);
  }
  const int pair = (line - 1) / 2;
  return PauliString::two_site(data_qubits, pair, 3, pair + 1, 3);
}

}  // namespace

Lattice::Lattice(std::vector<ProgramLine> lines, StateVector data)
    : lines_(std::move(lines)), data_(std::move(data)) {
  require(!lines_.empty() && lines_.size() % 2 == 1,
          "Lattice: need 2d-1 alternating lines for d data qubits");
  const int d = data_qubits();
  require(data_.shape() == RegisterShape::qubits(d),
          "Lattice: data register must hold one qubit per one-qubit line");
  const std::size_t perim = lines_.front().slots.size();
  require(perim >= 2 && perim % 2 == 0, "Lattice: perimeter must be even and >= 2");

  std::optional<int> one_parity, two_parity;
  for (std::size_t ln = 0; ln < lines_.size(); ++ln) {
    const ProgramLine& line = lines_[ln];
    const LineKind expected = (ln % 2 == 0) ? LineKind::OneQubit : LineKind::TwoQubit;
    require(line.kind == expected, "Lattice: line kinds must alternate starting one-qubit");
    require(line.slots.size() == perim, "Lattice: all lines must share one perimeter");
    const int radix = line_radix(line.kind);
    std::optional<int>& parity =
        (line.kind == LineKind::OneQubit) ? one_parity : two_parity;
    for (std::size_t s = 0; s < perim; ++s) {
      const int v = line.slots[s];
      require(v >= 0 && v < radix, "Lattice: slot value out of range for line kind");
      if (v != 0) {
        const int p = static_cast<int>(s % 2);
        require(!parity || *parity == p,
                "Lattice: nonzero indices of one line kind must share a slot parity");
        parity = p;
      }
    }
  }
  require(!one_parity || !two_parity || *one_parity != *two_parity,
          "Lattice: one- and two-qubit nonzero indices must occupy opposite parities");
}

Lattice Lattice::with_lines(std::vector<ProgramLine> lines) const {
  return Lattice(std::move(lines), data_);
}

Lattice Lattice::with_data(StateVector data) const { return Lattice(lines_, std::move(data)); }

Operator swap_gate(int d) {
  require(d == 2 || d == 3, "swap_gate: supported site dimensions are 2 and 3");
  const RegisterShape shape({d, d});
  const auto dim = static_cast<Eigen::Index>(shape.total_dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) m(l * d + k, k * d + l) = 1.0;
  }
  return Operator(shape, std::move(m));
}

Lattice partition_shift(const Lattice& lat, ShiftStep step) {
  const int perim = lat.perimeter();
  std::vector<ProgramLine> lines = lat.lines();
  for (ProgramLine& line : lines) {
    std::vector<int>& s = line.slots;
    if (step == ShiftStep::S1) {
      for (int j = 0; j + 1 < perim; j += 2) std::swap(s[j], s[j + 1]);
    } else {
      for (int j = 1; j + 1 < perim; j += 2) std::swap(s[j], s[j + 1]);
      std::swap(s[static_cast<std::size_t>(perim - 1)], s[0]);
    }
  }
  return lat.with_lines(std::move(lines));
}

std::vector<int> interleave_zeros(const std::vector<int>& program) {
  std::vector<int> out;
  out.reserve(program.size() * 2);
  for (int k : program) {
    out.push_back(k);
    out.push_back(0);
  }
  return out;
}

Lattice control_layer(const Lattice& lat, ControlStep which, double dtau) {
  const int d = lat.data_qubits();
  std::vector<Operator> locals;
  for (std::size_t ln = 0; ln < lat.lines().size(); ++ln) {
    const bool one_qubit_line = (ln % 2 == 0);
    if ((which == ControlStep::C1) != one_qubit_line) continue;
    const int v = lat.lines()[ln].slots.front();
    if (v == 0) continue;
    locals.push_back(pauli_string(local_term(d, static_cast<int>(ln), v)));
  }
  if (locals.empty()) return lat;

  for (std::size_t a = 0; a < locals.size(); ++a) {
    for (std::size_t b = a + 1; b < locals.size(); ++b) {
      const double comm = (locals[a].matrix() * locals[b].matrix() -
                           locals[b].matrix() * locals[a].matrix())
                              .norm();
      require(comm <= kIdentityTol,
              "control_layer: active local Hamiltonians fail to commute");
    }
  }

  Operator h = locals.front();
  for (std::size_t i = 1; i < locals.size(); ++i) h = h + locals[i];
  return lat.with_data(apply(expi_hermitian(h, dtau), lat.data()));
}

double global_vs_local_check(const std::vector<Operator>& local_hams, double dtau) {
  require(!local_hams.empty(), "global_vs_local_check: at least one Hamiltonian required");
  const RegisterShape& shape = local_hams.front().shape();
  for (const Operator& h : local_hams) {
    require(h.shape() == shape, "global_vs_local_check: shape mismatch");
  }
  Operator sum = local_hams.front();
  Operator prod = expi_hermitian(local_hams.front(), dtau);
  for (std::size_t i = 1; i < local_hams.size(); ++i) {
    sum = sum + local_hams[i];
    prod = prod * expi_hermitian(local_hams[i], dtau);
  }
  return frob_distance(expi_hermitian(sum, dtau), prod);
}

Lattice evolve(const Lattice& lat, UpdateSequence seq, int repetitions, double dtau) {
  require(repetitions >= 1, "evolve: repetitions must be >= 1");
  Lattice cur = lat;
  for (int rep = 0; rep < repetitions; ++rep) {
    cur = partition_shift(cur, ShiftStep::S2);
    cur = control_layer(cur, ControlStep::C2, dtau);
    if (seq == UpdateSequence::SixStep) cur = control_layer(cur, ControlStep::C1, dtau);
    cur = partition_shift(cur, ShiftStep::S1);
    if (seq == UpdateSequence::SixStep) cur = control_layer(cur, ControlStep::C2, dtau);
    cur = control_layer(cur, ControlStep::C1, dtau);
  }
  return cur;
}

Lattice make_program_lattice(int data_qubits, const std::vector<LatticeInstruction>& steps,
                             StateVector data) {
  require(data_qubits >= 1, "make_program_lattice: need at least one data qubit");
  require(!steps.empty(), "make_program_lattice: need at least one step");
  const int num_lines = 2 * data_qubits - 1;
  const int length = static_cast<int>(steps.size());
  const int perim = 2 * length;
  std::vector<ProgramLine> lines;
  lines.reserve(static_cast<std::size_t>(num_lines));
  for (int ln = 0; ln < num_lines; ++ln) {
    lines.push_back({ln % 2 == 0 ? LineKind::OneQubit : LineKind::TwoQubit,
                     std::vector<int>(static_cast<std::size_t>(perim), 0)});
  }
  for (int w = 1; w <= length; ++w) {
    const LatticeInstruction& inst = steps[static_cast<std::size_t>(w - 1)];
    if (inst.value == 0) continue;
    require(inst.line >= 0 && inst.line < num_lines,
            "make_program_lattice: line index out of range");
    ProgramLine& line = lines[static_cast<std::size_t>(inst.line)];
    require(inst.value >= 1 && inst.value < line_radix(line.kind),
            "make_program_lattice: instruction value out of range for line kind");
    const int slot = (inst.line % 2 == 0) ? (2 * w) % perim : perim - 2 * w + 1;
    line.slots[static_cast<std::size_t>(slot)] = inst.value;
  }
  return Lattice(std::move(lines), std::move(data));
}

GateSet lattice_gate_set(int data_qubits, const std::vector<LatticeInstruction>& steps,
                         double dtau) {
  require(data_qubits >= 1, "lattice_gate_set: need at least one data qubit");
  const int num_lines = 2 * data_qubits - 1;
  std::vector<Operator> gates;
  gates.reserve(steps.size() + 1);
  gates.push_back(Operator::identity(RegisterShape::qubits(data_qubits)));
  for (const LatticeInstruction& inst : steps) {
    if (inst.value == 0) {
      gates.push_back(gates.front());
      continue;
    }
    require(inst.line >= 0 && inst.line < num_lines, "lattice_gate_set: line out of range");
    const int radix = line_radix(inst.line % 2 == 0 ? LineKind::OneQubit : LineKind::TwoQubit);
    require(inst.value >= 1 && inst.value < radix,
            "lattice_gate_set: instruction value out of range for line kind");
    gates.push_back(pauli_exp(local_term(data_qubits, inst.line, inst.value), dtau));
  }
  return GateSet(std::move(gates));
}

Program lattice_program(int num_steps) {
  require(num_steps >= 1, "lattice_program: need at least one step");
  std::vector<int> steps(static_cast<std::size_t>(num_steps));
  for (int i = 0; i < num_steps; ++i) steps[static_cast<std::size_t>(i)] = i + 1;
  return Program(std::move(steps));
}

double cross_check_processor(const Lattice& lat, const ProcessorConfig& cfg,
                             const Program& prog, double dtau) {
  require(cfg.data_shape() == lat.data().shape(),
          "cross_check_processor: encoding mismatch (data shapes differ)");
  require(prog.length() == cfg.length() && 2 * prog.length() == lat.perimeter(),
          "cross_check_processor: encoding mismatch (program length vs perimeter)");
  for (int k : prog.steps()) {
    require(k < cfg.gate_set().size(),
            "cross_check_processor: encoding mismatch (program index out of range)");
  }
  const StateVector via_lattice =
      evolve(lat, UpdateSequence::FourStep, prog.length(), dtau).data();
  const StateVector via_processor = run(prog, cfg, lat.data());
  return (via_lattice.amps() - via_processor.amps()).norm();
}

}  // namespace ctrlshift
