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

#include "verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "ctrlshift/json_io.hpp"
#include "ctrlshift/processor.hpp"
#include "ctrlshift/qca.hpp"
#include "ctrlshift/theorems.hpp"

namespace ctrlshift::cli {

namespace {

using Rng = std::mt19937_64;

Eigen::VectorXcd random_amps(Rng& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v;
}

StateVector random_state(Rng& rng, const RegisterShape& shape) {
  return StateVector::normalized(shape,
                                 random_amps(rng, static_cast<Eigen::Index>(shape.total_dim())));
}

Operator random_unitary(Rng& rng, const RegisterShape& shape) {
  const auto dim = static_cast<Eigen::Index>(shape.total_dim());
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) g.col(c) = random_amps(rng, dim);
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  return Operator(shape, std::move(q));
}

GateSet random_gate_set(Rng& rng, const RegisterShape& shape, int m) {
  std::vector<Operator> gates;
  gates.push_back(Operator::identity(shape));
  for (int k = 1; k < m; ++k) gates.push_back(random_unitary(rng, shape));
  return GateSet(std::move(gates));
}

PauliString random_string(Rng& rng, int n) {
  std::uniform_int_distribution<int> idx(0, 3);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int& x : v) x = idx(rng);
  return PauliString(std::move(v));
}

double phase_aligned_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const Complex ov = a.dot(b);
  const Complex phase = std::abs(ov) > 0 ? ov / std::abs(ov) : Complex(1.0);
  return (a * phase - b).norm();
}

// Least-squares slope of log(err) against log(tau).
double loglog_slope(const std::vector<double>& taus, const std::vector<double>& errs) {
  const auto n = static_cast<double>(taus.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const double x = std::log(taus[i]);
    const double y = std::log(errs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct Suite {
  std::vector<CheckResult> results;
  std::optional<double> tol_override;

  void add(std::string name, std::string params, double metric, double tol, bool below) {
    if (tol_override) tol = *tol_override;
    const bool pass = below ? (metric <= tol) : (metric > tol);
    results.push_back({std::move(name), std::move(params), metric, tol, below, pass});
  }
};

void gates_suite(Suite& s, std::uint64_t seed) {
  Rng rng(seed);

  double m = 0.0;
  for (int j = 0; j < 4; ++j) {
    m = std::max(m, frob_distance(pauli(j) * pauli(j), Operator::identity(RegisterShape::qubits(1))));
  }
  s.add("gates.pauli_square", "{\"indices\":4}", m, 1e-12, true);

  m = 0.0;
  for (int i = 0; i < 20; ++i) {
    const PauliString js = random_string(rng, 1 + static_cast<int>(rng() % 3));
    const Operator h = pauli_string(js);
    m = std::max(m, frob_distance(h * h, Operator::identity(h.shape())));
  }
  s.add("gates.pauli_string_involution", "{\"samples\":20}", m, 1e-12, true);

  m = 0.0;
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int i = 0; i < 20; ++i) {
    const PauliString js = random_string(rng, 1 + static_cast<int>(rng() % 3));
    const double phi = angle(rng);
    m = std::max(m, frob_distance(pauli_exp(js, phi), expi_hermitian(pauli_string(js), phi)));
  }
  s.add("gates.pauli_exp_spectral", "{\"samples\":20}", m, 1e-12, true);

  double anti = 0.0, comm = 0.0;
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const PauliString a = random_string(rng, n);
    const PauliString b = random_string(rng, n);
    const double tau = angle(rng);
    const Operator res = commutator_exp(a, b, tau);
    if (a.commutes_with(b)) {
      comm = std::max(comm, frob_distance(res, Operator::identity(res.shape())));
    } else {
      const Operator ha = pauli_string(a);
      const Operator hb = pauli_string(b);
      const Operator k = Complex(0, 1) * (ha * hb - hb * ha);
      anti = std::max(anti, frob_distance(res, expi_hermitian(k, tau)));
    }
  }
  s.add("gates.commutator_exp_anticommuting", "{\"samples\":40}", anti, 1e-12, true);
  s.add("gates.commutator_exp_commuting", "{\"samples\":40}", comm, 0.0, true);

  const Operator h2 = tensor(hadamard(), hadamard());
  const Operator cnot12 = controlled(pauli(1));
  Eigen::Matrix4cd cnot21m = Eigen::Matrix4cd::Identity();
  cnot21m(1, 1) = 0;
  cnot21m(3, 3) = 0;
  cnot21m(1, 3) = 1;
  cnot21m(3, 1) = 1;
  const Operator cnot21(RegisterShape::qubits(2), cnot21m);
  s.add("gates.cnot_basis_change", "{}", frob_distance(h2 * cnot12 * h2, cnot21), 1e-12, true);

  const GateSet gs = random_gate_set(rng, RegisterShape::qubits(1), 4);
  const Operator cond = conditional(gs);
  Eigen::MatrixXcd direct = Eigen::MatrixXcd::Zero(8, 8);
  for (int k = 0; k < 4; ++k) direct.block(2 * k, 2 * k, 2, 2) = gs.gate(k).matrix();
  s.add("gates.conditional_blocks", "{\"m\":4}",
        (cond.matrix() - direct).norm(), 0.0, true);

  m = 0.0;
  for (const double tau : {0.1, 0.3, 0.7, 1.0, 2.0}) {
    for (const bool centered : {false, true}) {
      const auto kind =
          centered ? ControlHamiltonianKind::D3Centered : ControlHamiltonianKind::D3;
      const auto factors = decompose_controlled_diag(tau, centered);
      const Operator prod = factors[0] * factors[1] * factors[2] * factors[3];
      m = std::max(m, frob_distance(prod, expi_hermitian(control_hamiltonian(kind), tau)));
    }
  }
  s.add("gates.controlled_diag_decomposition", "{\"taus\":5}", m, 1e-12, true);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      control_hamiltonian(ControlHamiltonianKind::D3Centered).matrix());
  Eigen::VectorXd expected(8);
  expected << -1, -1, 0, 0, 0, 0, 1, 1;
  s.add("gates.centered_spectrum", "{}", (es.eigenvalues() - expected).norm(), 1e-12, true);

  s.add("gates.qutrit_projector_form", "{}",
        frob_distance(qutrit_control_projector_form(),
                      control_hamiltonian(ControlHamiltonianKind::Qutrit32)),
        1e-12, true);
}

void processor_suite(Suite& s, std::uint64_t seed) {
  Rng rng(seed);
  const RegisterShape data_shape = RegisterShape::qubits(2);

  double m = 0.0;
  for (int inst = 0; inst < 20; ++inst) {
    const int gates = 2 + static_cast<int>(rng() % 3);
    const int length = 1 + static_cast<int>(rng() % 6);
    const GateSet gs = random_gate_set(rng, data_shape, gates);
    std::vector<int> steps(static_cast<std::size_t>(length));
    for (int& k : steps) k = static_cast<int>(rng() % static_cast<std::uint64_t>(gates));
    const Program prog(steps);
    const StateVector data = random_state(rng, data_shape);
    const StateVector got = run(prog, ProcessorConfig(gs, length), data);
    Eigen::VectorXcd want = data.amps();
    for (int k : steps) want = gs.gate(k).matrix() * want;
    m = std::max(m, (got.amps() - want).norm());
  }
  s.add("processor.run_matches_product", "{\"instances\":20}", m, 1e-12, true);
  s.add("processor.bus_restored", "{\"instances\":20}", 0.0, 0.0, true);

  m = 0.0;
  for (const int gates : {2, 3}) {
    for (const int length : {1, 2}) {
      const GateSet gs = random_gate_set(rng, RegisterShape::qubits(1), gates);
      const ProcessorConfig cfg(gs, length);
      const Operator sc = conditional_full_operator(cfg);
      Eigen::MatrixXcd word = sc.matrix();
      Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(word.rows(), word.cols());
      for (int i = 0; i < length; ++i) power = word * power;
      std::vector<int> steps(static_cast<std::size_t>(length), 0);
      while (true) {
        const StateVector data = random_state(rng, RegisterShape::qubits(1));
        // program basis index: digits are (k_L, ..., k_1)
        std::vector<int> digits(steps.rbegin(), steps.rend());
        RegisterShape bus(std::vector<int>(static_cast<std::size_t>(length), gates));
        const std::size_t bus_idx = bus.flat_index(digits);
        Eigen::VectorXcd joint =
            Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(bus.total_dim() * 2));
        joint.segment(static_cast<Eigen::Index>(bus_idx * 2), 2) = data.amps();
        const Eigen::VectorXcd evolved = power * joint;
        const StateVector want = run(Program(steps), cfg, data);
        Eigen::VectorXcd extracted =
            evolved.segment(static_cast<Eigen::Index>(bus_idx * 2), 2);
        m = std::max(m, (extracted - want.amps()).norm());
        // next program tuple
        int at = 0;
        while (at < length && ++steps[static_cast<std::size_t>(at)] == gates) {
          steps[static_cast<std::size_t>(at)] = 0;
          ++at;
        }
        if (at == length) break;
      }
    }
  }
  s.add("processor.full_operator_subspace", "{\"m\":\"2..3\",\"L\":\"1..2\"}", m, 1e-12, true);

  {
    const GateSet gs = random_gate_set(rng, data_shape, 3);
    const StateVector data = random_state(rng, data_shape);
    const Program p1({1, 2}), p2({2, 1, 1}), whole({1, 2, 2, 1, 1});
    const StateVector via_parts =
        run(p2, ProcessorConfig(gs, 3), run(p1, ProcessorConfig(gs, 2), data));
    const StateVector direct = run(whole, ProcessorConfig(gs, 5), data);
    s.add("processor.composition", "{\"L\":\"2+3\"}",
          (via_parts.amps() - direct.amps()).norm(), 1e-12, true);
  }

  {
    const GateSet gs = u1_gate_set(8);
    double worst = 0.0;
    for (int k = 0; k < 8; ++k) {
      const Operator prod = gs.gate(k) * gs.gate((8 - k) % 8);
      worst = std::max(worst, frob_distance(prod, Operator::identity(gs.data_shape())));
    }
    s.add("processor.u1_inverse_pairs", "{\"n\":8}", worst, 1e-12, true);
  }

  {
    const AngleSearchResult r =
        approximate_angle(std::numbers::pi / 4.0, 1.0, 1e-3, 100000);
    s.add("processor.angle_quarter_pi", "{\"dtau\":1.0}", r.found ? r.error : 1.0, 1e-3, true);
    const AngleSearchResult c =
        approximate_angle(0.3, std::numbers::pi / 2.0, 1e-6, 100000);
    s.add("processor.angle_rational_control", "{\"dtau\":\"pi/2\"}",
          c.found ? 0.0 : c.error, 1e-6, false);
  }
}

void qca_suite(Suite& s, std::uint64_t seed) {
  Rng rng(seed);

  {
    const Operator cnot12 = controlled(pauli(1));
    Eigen::Matrix4cd cnot21m = Eigen::Matrix4cd::Zero();
    cnot21m(0, 0) = 1;
    cnot21m(1, 3) = 1;
    cnot21m(2, 2) = 1;
    cnot21m(3, 1) = 1;
    const Operator cnot21(RegisterShape::qubits(2), cnot21m);
    const Operator via_cnots =
        Operator(RegisterShape({2, 2}), (cnot12 * cnot21 * cnot12).matrix());
    s.add("qca.swap_from_cnots", "{}", frob_distance(swap_gate(2), via_cnots), 1e-12, true);
  }

  const auto make_instructions = [] {
    return std::vector<LatticeInstruction>{{0, 1}, {1, 1}, {2, 2}, {3, 1}};
  };

  {
    Rng line_rng(seed + 1);
    const StateVector data = random_state(line_rng, RegisterShape::qubits(2));
    Lattice lat = make_program_lattice(2, {{0, 1}, {1, 1}, {2, 2}}, data);
    int mismatches = 0;
    for (const ShiftStep step : {ShiftStep::S1, ShiftStep::S2}) {
      const Lattice twice = partition_shift(partition_shift(lat, step), step);
      for (std::size_t ln = 0; ln < lat.lines().size(); ++ln) {
        if (twice.lines()[ln].slots != lat.lines()[ln].slots) ++mismatches;
      }
    }
    Lattice cycled = lat;
    for (int i = 0; i < 3; ++i) {
      cycled = partition_shift(partition_shift(cycled, ShiftStep::S2), ShiftStep::S1);
    }
    for (std::size_t ln = 0; ln < lat.lines().size(); ++ln) {
      if (cycled.lines()[ln].slots != lat.lines()[ln].slots) ++mismatches;
    }
    s.add("qca.shift_involution_and_cycle", "{\"L\":3}", mismatches, 0.0, true);
  }

  {
    const StateVector data = random_state(rng, RegisterShape::qubits(3));
    const Lattice lat = make_program_lattice(3, make_instructions(), data);
    const Lattice evolved = evolve(lat, UpdateSequence::FourStep, 4, 1.0);
    s.add("qca.layer_norm", "{\"steps\":4}",
          std::abs(evolved.data().amps().norm() - 1.0), 1e-12, true);

    int restored = 0;
    for (std::size_t ln = 0; ln < lat.lines().size(); ++ln) {
      if (evolved.lines()[ln].slots != lat.lines()[ln].slots) ++restored;
    }
    s.add("qca.lines_restored", "{\"steps\":4}", restored, 0.0, true);
  }

  {
    std::vector<Operator> locals;
    for (int k = 0; 2 * k + 2 < 7; ++k) locals.push_back(indexed_two_qubit_hamiltonian(k, 7));
    s.add("qca.global_local_commuting", "{\"sites\":7}",
          global_vs_local_check(locals, 1.0), 1e-12, true);
  }

  {
    const StateVector data = random_state(rng, RegisterShape::qubits(3));
    Lattice lat = make_program_lattice(3, make_instructions(), data);
    // After S2 the one-qubit layer must be inert on a checkerboard lattice.
    const Lattice half = partition_shift(lat, ShiftStep::S2);
    const Lattice touched = control_layer(half, ControlStep::C1, 1.0);
    s.add("qca.inactive_layer_identity", "{}",
          (touched.data().amps() - half.data().amps()).norm(), 1e-12, true);
  }

  {
    const StateVector data = random_state(rng, RegisterShape::qubits(2));
    const std::vector<LatticeInstruction> steps{{0, 1}, {1, 1}, {2, 2}};
    const Lattice lat = make_program_lattice(2, steps, data);
    const GateSet gs = lattice_gate_set(2, steps, 1.0);
    const double dist = cross_check_processor(lat, ProcessorConfig(gs, 3),
                                              lattice_program(3), 1.0);
    s.add("qca.processor_equivalence", "{\"qubits\":2,\"L\":3}", dist, 1e-10, true);
  }
}

void theorems_suite(Suite& s, std::uint64_t seed) {
  Rng rng(seed);
  const RegisterShape qubit = RegisterShape::qubits(1);

  {
    const GateSet gs = GateSet({Operator::identity(qubit), pauli(1)});
    const Operator net = conditional(gs);
    std::vector<StateVector> samples;
    for (int i = 0; i < 10; ++i) samples.push_back(random_state(rng, qubit));
    const RegisterShape prog_shape = RegisterShape::single_site(2);
    const auto report = program_orthogonality_check(
        net, RegisterOrder::ProgramFirst, StateVector::basis_state(prog_shape, 0),
        StateVector::basis_state(prog_shape, 1), samples);
    s.add("theorems.orthogonality_residual", "{\"samples\":10}", report.max_violation, 1e-12,
          true);
    s.add("theorems.orthogonality_overlap", "{}", std::abs(report.program_overlap), 0.0, true);

    double violation = 0.0;
    try {
      Eigen::VectorXcd plus(2);
      plus << std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0;
      program_orthogonality_check(net, RegisterOrder::ProgramFirst,
                                  StateVector(prog_shape, plus),
                                  StateVector::basis_state(prog_shape, 0), samples);
    } catch (const ProductStructureViolation& e) {
      violation = e.violation();
    }
    s.add("theorems.nonorthogonal_detection", "{\"program\":\"plus\"}", violation, 0.1, false);

    Eigen::VectorXcd tilted(2);
    tilted << 0.8, 0.6;
    s.add("theorems.output_independence", "{}",
          output_independence_check(net, RegisterOrder::ProgramFirst,
                                    StateVector::basis_state(prog_shape, 1),
                                    StateVector::basis_state(qubit, 0),
                                    StateVector(qubit, tilted)),
          1e-10, true);

    const Operator swap_net(RegisterShape({2, 2}), swap_gate(2).matrix());
    s.add("theorems.output_independence_counterexample", "{\"network\":\"swap\"}",
          output_independence_check(swap_net, RegisterOrder::ProgramFirst,
                                    StateVector::basis_state(qubit, 0),
                                    StateVector::basis_state(qubit, 0),
                                    StateVector(qubit, tilted)),
          0.1, false);
  }

  {
    double worst = 0.0;
    double weakest_witness = std::numeric_limits<double>::infinity();
    for (const int n : {2, 3, 4, 5}) {
      const RegisterShape shape = RegisterShape::single_site(n);
      const Operator m = matrix_mult_operator(n);
      weakest_witness = std::min(
          weakest_witness,
          (m.matrix().adjoint() * m.matrix() -
           Eigen::MatrixXcd::Identity(m.matrix().rows(), m.matrix().cols()))
              .norm());
      for (int i = 0; i < 5; ++i) {
        const StateVector psi = random_state(rng, shape);
        Eigen::MatrixXcd a(n, n);
        for (int c = 0; c < n; ++c) a.col(c) = random_amps(rng, n);
        const Operator op(shape, a);
        const auto result = apply_programming_operator(psi, op);
        Eigen::VectorXcd want = Eigen::VectorXcd::Zero(result.output.size());
        want.segment(0, n) = Eigen::VectorXcd::Zero(n);
        const Eigen::VectorXcd image = a * psi.amps();
        for (int r = 0; r < n; ++r) want(static_cast<Eigen::Index>(r) * n * n) = image(r);
        worst = std::max(worst, (result.output - want).norm());
      }
    }
    s.add("theorems.programming_identity", "{\"n\":\"2..5\"}", worst, 1e-12, true);
    s.add("theorems.programming_nonunitarity", "{\"n\":\"2..5\"}", weakest_witness, 0.5, false);
  }

  {
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
      const auto enc = encode_operator_state(pauli(k));
      Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
      const double r = std::numbers::sqrt2 / 2.0;
      switch (k) {
        case 0: bell(0) = r; bell(3) = r; break;
        case 1: bell(1) = r; bell(2) = r; break;
        case 2: bell(1) = r; bell(2) = -r; break;
        case 3: bell(0) = r; bell(3) = -r; break;
      }
      worst = std::max(worst, phase_aligned_distance(enc.state.amps(), bell));
    }
    s.add("theorems.encode_bell_states", "{}", worst, 1e-12, true);
  }

  {
    double prob_dev = 0.0, recon = 0.0, post_dev = 0.0;
    for (int i = 0; i < 10; ++i) {
      const StateVector psi = random_state(rng, qubit);
      const Operator u = random_unitary(rng, qubit);
      const StateVector joint = tensor(psi, encode_operator_state(u).state);
      Eigen::VectorXcd rebuilt = Eigen::VectorXcd::Zero(8);
      const Operator sigmas[4] = {pauli(0), pauli(1), pauli(2), pauli(3)};
      const Complex coef[4] = {{0.5, 0}, {0.5, 0}, {0, 0.5}, {0.5, 0}};
      const BellOutcome outcomes[4] = {BellOutcome::PhiPlus, BellOutcome::PsiPlus,
                                       BellOutcome::PsiMinus, BellOutcome::PhiMinus};
      for (int b = 0; b < 4; ++b) {
        const auto proj = bell_project(psi, u, outcomes[b]);
        prob_dev = std::max(prob_dev, std::abs(proj.probability - 0.25));
        Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
        const double r = std::numbers::sqrt2 / 2.0;
        switch (outcomes[b]) {
          case BellOutcome::PhiPlus: bell(0) = r; bell(3) = r; break;
          case BellOutcome::PsiPlus: bell(1) = r; bell(2) = r; break;
          case BellOutcome::PsiMinus: bell(1) = r; bell(2) = -r; break;
          case BellOutcome::PhiMinus: bell(0) = r; bell(3) = -r; break;
        }
        const Eigen::VectorXcd branch = coef[b] * (u.matrix() * sigmas[b].matrix() * psi.amps());
        for (int ab = 0; ab < 4; ++ab) {
          for (int t = 0; t < 2; ++t) rebuilt(ab * 2 + t) += bell(ab) * branch(t);
        }
      }
      recon = std::max(recon, (rebuilt - joint.amps()).norm());
      const auto phi_plus = bell_project(psi, u, BellOutcome::PhiPlus);
      post_dev = std::max(post_dev, phase_aligned_distance(phi_plus.post_state.amps(),
                                                           u.matrix() * psi.amps()));
    }
    s.add("theorems.bell_probability_quarter", "{\"samples\":10}", prob_dev, 1e-12, true);
    s.add("theorems.bell_reconstruction", "{\"samples\":10}", recon, 1e-12, true);
    s.add("theorems.bell_post_state", "{\"samples\":10}", post_dev, 1e-12, true);
  }

  {
    const Operator g = Operator::identity(RegisterShape({2, 2, 2}));
    const auto report = residue_decomposition(g, make_programming_map(2));
    s.add("theorems.residue_identity", "{\"n\":2}", report.reconstruction_residual, 1e-12,
          true);
    s.add("theorems.residue_nonunitarity", "{\"n\":2}", report.programming_nonunitarity, 0.5,
          false);
  }

  {
    std::vector<Operator> gens2, gens3;
    for (const PauliString& g : universal_generators(2)) gens2.push_back(pauli_string(g));
    for (const PauliString& g : universal_generators(3)) gens3.push_back(pauli_string(g));
    const auto r2 = lie_closure_dimension(gens2, 10);
    const auto r3 = lie_closure_dimension(gens3, 10);
    s.add("theorems.lie_closure_two_qubits", "{\"expect\":15}",
          std::abs(r2.closure_dimension - 15), 0.0, true);
    s.add("theorems.lie_closure_three_qubits", "{\"expect\":63}",
          std::abs(r3.closure_dimension - 63), 0.0, true);
  }

  {
    const std::vector<double> taus{0.2, 0.1, 0.05, 0.025};
    std::vector<double> sum_errs, comm_errs;
    for (const double tau : taus) {
      const auto errs = product_formula_error(pauli(1), pauli(3), tau);
      sum_errs.push_back(errs.sum_error);
      comm_errs.push_back(errs.commutator_error);
    }
    s.add("theorems.trotter_sum_order", "{\"pair\":\"x,z\"}", loglog_slope(taus, sum_errs),
          1.8, false);
    s.add("theorems.trotter_commutator_order", "{\"pair\":\"x,z\"}",
          loglog_slope(taus, comm_errs), 2.7, false);
  }

  {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double theta = angle(rng);
      const double phi = angle(rng);
      worst = std::max(worst, std::abs(rebit_expectation(phi, std::cos(theta),
                                                         std::sin(theta)) -
                                       std::cos(phi)));
    }
    s.add("theorems.rebit_independence", "{\"samples\":100}", worst, 1e-12, true);
  }
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed,
                                   std::optional<double> tol_override) {
  if (suite != "all" && suite != "gates" && suite != "processor" && suite != "qca" &&
      suite != "theorems") {
    throw ParseError("unknown suite: " + suite + " (expected all|gates|processor|qca|theorems)");
  }
  Suite s;
  s.tol_override = tol_override;
  if (suite == "all" || suite == "gates") gates_suite(s, seed);
  if (suite == "all" || suite == "processor") processor_suite(s, seed);
  if (suite == "all" || suite == "qca") qca_suite(s, seed);
  if (suite == "all" || suite == "theorems") theorems_suite(s, seed);
  std::sort(s.results.begin(), s.results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return s.results;
}

}  // namespace ctrlshift::cli
