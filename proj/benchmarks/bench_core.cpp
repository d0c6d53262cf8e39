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

#include <benchmark/benchmark.h>

#include <random>

#include "ctrlshift/processor.hpp"
#include "ctrlshift/qca.hpp"

namespace {

using namespace ctrlshift;

Eigen::VectorXcd random_amps(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v;
}

Operator random_hermitian(std::mt19937_64& rng, int qubits) {
  const RegisterShape shape = RegisterShape::qubits(qubits);
  const auto dim = static_cast<Eigen::Index>(shape.total_dim());
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) g.col(c) = random_amps(rng, dim);
  return Operator(shape, g + g.adjoint());
}

void BM_TensorProduct(benchmark::State& state) {
  const auto qubits = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const Operator h = random_hermitian(rng, qubits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tensor(h, pauli(3)));
  }
}
BENCHMARK(BM_TensorProduct)->Arg(2)->Arg(4)->Arg(6);

void BM_SpectralExponential(benchmark::State& state) {
  const auto qubits = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const Operator h = random_hermitian(rng, qubits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expi_hermitian(h, 0.7));
  }
}
BENCHMARK(BM_SpectralExponential)->Arg(2)->Arg(4)->Arg(6);

void BM_PauliExpClosedForm(benchmark::State& state) {
  const auto sites = static_cast<int>(state.range(0));
  std::vector<int> idx(static_cast<std::size_t>(sites), 0);
  idx[0] = 1;
  idx[static_cast<std::size_t>(sites - 1)] = 3;
  const PauliString js(idx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pauli_exp(js, 0.7));
  }
}
BENCHMARK(BM_PauliExpClosedForm)->Arg(2)->Arg(4)->Arg(6);

void BM_ProcessorRun(benchmark::State& state) {
  const auto length = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const RegisterShape data_shape = RegisterShape::qubits(2);
  std::vector<Operator> gates{Operator::identity(data_shape)};
  for (int k = 1; k < 4; ++k) {
    Eigen::MatrixXcd g(4, 4);
    for (Eigen::Index c = 0; c < 4; ++c) g.col(c) = random_amps(rng, 4);
    gates.push_back(Operator(data_shape,
                             Eigen::MatrixXcd(Eigen::HouseholderQR<Eigen::MatrixXcd>(g)
                                                  .householderQ())));
  }
  const GateSet gs(gates);
  std::vector<int> steps(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) steps[static_cast<std::size_t>(i)] = i % 4;
  const Program prog(steps);
  const ProcessorConfig cfg(gs, length);
  const StateVector data = StateVector::basis_state(data_shape, std::size_t{0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(prog, cfg, data));
  }
}
BENCHMARK(BM_ProcessorRun)->Arg(4)->Arg(16)->Arg(64);

void BM_LatticeWord(benchmark::State& state) {
  const auto data_qubits = static_cast<int>(state.range(0));
  std::vector<LatticeInstruction> steps;
  for (int w = 0; w < 4; ++w) steps.push_back({(w % data_qubits) * 2, w % 2 == 0 ? 1 : 2});
  const Lattice lat = make_program_lattice(
      data_qubits, steps,
      StateVector::basis_state(RegisterShape::qubits(data_qubits), std::size_t{0}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(lat, UpdateSequence::FourStep, 4, 1.0));
  }
}
BENCHMARK(BM_LatticeWord)->Arg(2)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
