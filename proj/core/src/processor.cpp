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

#include "ctrlshift/processor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace ctrlshift {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ContractViolation(msg);
}

}  // namespace

Program::Program(std::vector<int> steps) : steps_(std::move(steps)) {
  require(!steps_.empty(), "Program: length must be >= 1");
  for (int k : steps_) require(k >= 0, "Program: indices must be nonnegative");
}

ProcessorConfig::ProcessorConfig(GateSet gate_set, int length)
    : gate_set_(std::move(gate_set)), length_(length) {
  require(length_ >= 1, "ProcessorConfig: length must be >= 1");
}

JointState::JointState(std::vector<int> slots, StateVector data)
    : slots_(std::move(slots)), data_(std::move(data)) {
  require(!slots_.empty(), "JointState: at least one slot required");
  for (int k : slots_) require(k >= 0, "JointState: slot indices must be nonnegative");
}

JointState shift(const JointState& js) {
  std::vector<int> slots = js.slots();
  std::rotate(slots.begin(), slots.begin() + 1, slots.end());
  return JointState(std::move(slots), js.data());
}

JointState control_step(const JointState& js, const ProcessorConfig& cfg) {
  const int k = js.slots().front();
  require(k < cfg.gate_set().size(), "control_step: control index out of range");
  return JointState(js.slots(), apply(cfg.gate_set().gate(k), js.data()));
}

StateVector run(const Program& prog, const ProcessorConfig& cfg, const StateVector& data) {
  require(prog.length() == cfg.length(), "run: program length does not match config");
  require(data.shape() == cfg.data_shape(), "run: data shape does not match gate set");
  for (int k : prog.steps()) {
    require(k < cfg.gate_set().size(), "run: program index out of range");
  }
  JointState js(prog.steps(), data);
  for (int step = 0; step < cfg.length(); ++step) js = shift(control_step(js, cfg));
  require(js.slots() == prog.steps(), "run: bus tuple failed to return to initial state");
  return js.data();
}

Operator conditional_full_operator(const ProcessorConfig& cfg) {
  const int m = cfg.gate_set().size();
  const int slots = cfg.length();
  RegisterShape bus_shape = RegisterShape::single_site(m);
  for (int s = 1; s < slots; ++s) bus_shape = bus_shape.concat(RegisterShape::single_site(m));
  const RegisterShape full_shape = bus_shape.concat(cfg.data_shape());

  // C acts on (control slot, data) = the last bus slot and the data register.
  const Operator cond = conditional(cfg.gate_set());
  Operator control_full =
      slots == 1 ? cond
                 : tensor(Operator::identity(RegisterShape(std::vector<int>(
                              static_cast<std::size_t>(slots - 1), m))),
                          cond);

  // S rotates the bus digit string right by one place, identity on data.
  const std::size_t bus_dim = bus_shape.total_dim();
  Eigen::MatrixXcd perm = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(bus_dim),
                                                 static_cast<Eigen::Index>(bus_dim));
  for (std::size_t idx = 0; idx < bus_dim; ++idx) {
    std::vector<int> digits = bus_shape.digits(idx);
    std::rotate(digits.rbegin(), digits.rbegin() + 1, digits.rend());
    perm(static_cast<Eigen::Index>(bus_shape.flat_index(digits)),
         static_cast<Eigen::Index>(idx)) = 1.0;
  }
  const Operator shift_full = tensor(Operator(bus_shape, std::move(perm)),
                                     Operator::identity(cfg.data_shape()));

  Operator sc = shift_full * control_full;
  return Operator(full_shape, sc.matrix());
}

GateSet u1_gate_set(int n) {
  require(n >= 1, "u1_gate_set: n must be >= 1");
  std::vector<Operator> gates;
  gates.reserve(static_cast<std::size_t>(n));
  const double base = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (int k = 0; k < n; ++k) gates.push_back(pauli_exp(PauliString({3}), base * k));
  return GateSet(std::move(gates));
}

AngleSearchResult approximate_angle(double theta, double dtau, double eps,
                                    long long max_steps) {
  require(eps > 0.0, "approximate_angle: eps must be positive");
  require(dtau > 0.0, "approximate_angle: dtau must be positive");
  require(max_steps >= 0, "approximate_angle: max_steps must be nonnegative");
  AngleSearchResult best;
  best.error = std::numeric_limits<double>::infinity();
  for (long long m = 0; m <= max_steps; ++m) {
    const double err =
        std::abs(std::remainder(static_cast<double>(m) * dtau - theta, 2.0 * std::numbers::pi));
    if (err < best.error) {
      best.steps = m;
      best.error = err;
    }
    if (err <= eps) {
      best.steps = m;
      best.error = err;
      best.found = true;
      break;
    }
  }
  return best;
}

}  // namespace ctrlshift
