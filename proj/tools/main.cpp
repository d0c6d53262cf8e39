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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "ctrlshift/json_io.hpp"
#include "ctrlshift/linalg.hpp"

int main(int argc, char** argv) {
  using namespace ctrlshift;
  using namespace ctrlshift::cli;

  CLI::App app{"Simulator for deterministic programmable quantum networks: the three-bus "
               "Control-Shift processor, its cellular-automaton realization, and the "
               "structural checks behind them."};
  app.require_subcommand(1);

  std::string input_path, output_path;
  auto* run_cmd = app.add_subcommand("run", "Execute a program file on the processor");
  run_cmd->add_option("file", input_path, "Program JSON file")->required();
  run_cmd->add_option("--out", output_path, "Write the result here instead of stdout");

  std::string qca_path, qca_out;
  auto* qca_cmd = app.add_subcommand("qca", "Evolve a cellular-automaton configuration");
  qca_cmd->add_option("config", qca_path, "QCA config JSON file")->required();
  qca_cmd->add_option("--out", qca_out, "Write the result here instead of stdout");

  std::string suite = "all";
  std::uint64_t seed = 0;
  double tol_value = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification checks");
  verify_cmd->add_option("--suite", suite, "all|gates|processor|qca|theorems");
  verify_cmd->add_option("--seed", seed, "Seed for randomized checks (default 0)");
  auto* tol_opt = verify_cmd->add_option("--tol", tol_value, "Override every check tolerance");

  double theta = 0.0, dtau = 1.0, eps = 1e-3;
  long long max_steps = 1000000;
  auto* approx_cmd = app.add_subcommand("approx", "Search m with m*dtau close to theta mod 2pi");
  approx_cmd->add_option("--theta", theta, "Target angle")->required();
  approx_cmd->add_option("--dtau", dtau, "Step angle (default 1.0)");
  approx_cmd->add_option("--eps", eps, "Target precision (default 1e-3)");
  approx_cmd->add_option("--max-steps", max_steps, "Scan bound (default 10^6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(input_path, output_path, std::cout, std::cerr);
    if (qca_cmd->parsed()) return cmd_qca(qca_path, qca_out, std::cout, std::cerr);
    if (verify_cmd->parsed()) {
      std::optional<double> tol;
      if (tol_opt->count() > 0) tol = tol_value;
      return cmd_verify(suite, seed, tol, std::cout, std::cerr);
    }
    if (approx_cmd->parsed()) {
      return cmd_approx(theta, dtau, eps, max_steps, std::cout, std::cerr);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CapacityExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
