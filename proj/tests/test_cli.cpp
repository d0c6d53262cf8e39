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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "ctrlshift/json_io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace ctrlshift::cli;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

constexpr const char* kTwoGateProgram = R"({
  "data_shape": [2],
  "gate_set": [
    {"kind": "named", "name": "identity"},
    {"kind": "matrix", "rows": [[[0,0],[1,0]],[[1,0],[0,0]]]},
    {"kind": "matrix", "rows": [[[1,0],[0,0]],[[0,0],[-1,0]]]}
  ],
  "program": [1, 2]
})";

}  // namespace

TEST_CASE("run executes a program file and reports the final amplitudes") {
  const fs::path input = write_temp("ctrlshift_run_in.json", kTwoGateProgram);
  std::ostringstream out, err;
  const int code = cmd_run(input.string(), "", out, err);
  CHECK(code == kExitOk);

  const auto result = nlohmann::json::parse(out.str());
  CHECK(result.at("program_restored").get<bool>());
  // sigma_z sigma_x |0> = -|1>.
  const auto amps = result.at("final_state");
  CHECK(amps[0][0].get<double>() == 0.0);
  CHECK(amps[0][1].get<double>() == 0.0);
  CHECK(amps[1][0].get<double>() == -1.0);
  CHECK(amps[1][1].get<double>() == 0.0);
}

TEST_CASE("run with an all-identity program returns the initial state") {
  const fs::path input = write_temp("ctrlshift_run_idle.json", R"({
    "data_shape": [2],
    "gate_set": [{"kind": "named", "name": "identity"}],
    "program": [0, 0, 0]
  })");
  std::ostringstream out, err;
  CHECK(cmd_run(input.string(), "", out, err) == kExitOk);
  const auto result = nlohmann::json::parse(out.str());
  CHECK(result.at("final_state")[0][0].get<double>() == 1.0);
}

TEST_CASE("run writes to a file when asked") {
  const fs::path input = write_temp("ctrlshift_run_in2.json", kTwoGateProgram);
  const fs::path output = fs::temp_directory_path() / "ctrlshift_run_out.json";
  std::ostringstream out, err;
  CHECK(cmd_run(input.string(), output.string(), out, err) == kExitOk);
  std::ifstream in(output);
  REQUIRE(in.good());
  nlohmann::json parsed;
  in >> parsed;
  CHECK(parsed.contains("final_state"));
}

TEST_CASE("run maps missing and malformed files to input errors") {
  std::ostringstream out, err;
  CHECK_THROWS_AS(cmd_run("/nonexistent/ctrlshift.json", "", out, err), ctrlshift::ParseError);

  const fs::path bad = write_temp("ctrlshift_bad.json", "{broken");
  CHECK_THROWS_AS(cmd_run(bad.string(), "", out, err), ctrlshift::ParseError);
}

TEST_CASE("qca command evolves a configuration") {
  const fs::path config = write_temp("ctrlshift_qca.json", R"({
    "data_qubits": 2,
    "perimeter": 4,
    "lines": [
      {"kind": "one", "slots": [0, 0, 1, 0]},
      {"kind": "two", "slots": [0, 0, 0, 1]},
      {"kind": "one", "slots": [0, 0, 0, 0]}
    ],
    "sequence": "U_IV",
    "dtau": 1.0,
    "repetitions": 2
  })");
  std::ostringstream out, err;
  CHECK(cmd_qca(config.string(), "", out, err) == kExitOk);
  const auto result = nlohmann::json::parse(out.str());
  CHECK(result.at("lines_restored").get<bool>());
  REQUIRE(result.at("final_state").size() == 4);

  // Zero program: identity output.
  const fs::path idle = write_temp("ctrlshift_qca_idle.json", R"({
    "data_qubits": 1,
    "perimeter": 2,
    "lines": [{"kind": "one", "slots": [0, 0]}],
    "sequence": "U_VI",
    "dtau": 1.0,
    "repetitions": 1
  })");
  std::ostringstream out2, err2;
  CHECK(cmd_qca(idle.string(), "", out2, err2) == kExitOk);
  const auto idle_result = nlohmann::json::parse(out2.str());
  CHECK(idle_result.at("final_state")[0][0].get<double>() == 1.0);
}

TEST_CASE("approx reports found and not-found searches") {
  std::ostringstream out, err;
  CHECK(cmd_approx(1.0, 1.0, 1e-3, 100, out, err) == kExitOk);
  const auto hit = nlohmann::json::parse(out.str());
  CHECK(hit.at("m").get<long long>() == 1);
  CHECK(hit.at("found").get<bool>());
  CHECK(hit.at("error").get<double>() <= 1e-9);

  std::ostringstream out2, err2;
  CHECK(cmd_approx(0.3, 1.5707963267948966, 1e-6, 100000, out2, err2) == kExitOk);
  const auto miss = nlohmann::json::parse(out2.str());
  CHECK(!miss.at("found").get<bool>());
  CHECK(miss.at("error").get<double>() > 1e-6);

  std::ostringstream out3, err3;
  CHECK(cmd_approx(1.0, -1.0, 1e-3, 100, out3, err3) == kExitInputError);
}

TEST_CASE("verify emits sorted passing records and is byte-deterministic") {
  std::ostringstream first, second, err;
  CHECK(cmd_verify("theorems", 0, std::nullopt, first, err) == kExitOk);
  CHECK(cmd_verify("theorems", 0, std::nullopt, second, err) == kExitOk);
  CHECK(first.str() == second.str());

  int records = 0;
  std::string prev_name;
  std::istringstream lines(first.str());
  std::string line;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("check"));
    CHECK(j.contains("params"));
    CHECK(j.contains("metric"));
    CHECK(j.contains("tol"));
    CHECK(j.at("pass").get<bool>());
    const std::string name = j.at("check").get<std::string>();
    CHECK(prev_name < name);
    prev_name = name;
    ++records;
  }
  CHECK(records >= 10);

  std::ostringstream out, err2;
  CHECK(cmd_verify("nonsense", 0, std::nullopt, out, err2) == kExitInputError);
}

TEST_CASE("verify suites cover each module and pass end to end") {
  for (const std::string suite : {"gates", "processor", "qca", "all"}) {
    std::ostringstream out, err;
    CHECK(cmd_verify(suite, 1234, std::nullopt, out, err) == kExitOk);
  }
  // An absurdly tight override forces failures and exit code 1.
  std::ostringstream out, err;
  CHECK(cmd_verify("gates", 0, 1e-30, out, err) == kExitFailure);
}

#ifdef CTRLSHIFT_CLI_BINARY
TEST_CASE("the installed binary maps argv to the documented exit codes") {
  const std::string binary = CTRLSHIFT_CLI_BINARY;
  const auto shell = [&](const std::string& args) {
    return std::system((binary + " " + args + " > /dev/null 2>&1").c_str());
  };
  CHECK(WEXITSTATUS(shell("approx --theta 1.0 --dtau 1.0")) == kExitOk);
  CHECK(WEXITSTATUS(shell("run /nonexistent.json")) == kExitInputError);
  CHECK(WEXITSTATUS(shell("bogus-subcommand")) == kExitInputError);

  const fs::path input = write_temp("ctrlshift_cli_smoke.json", kTwoGateProgram);
  CHECK(WEXITSTATUS(shell("run " + input.string())) == kExitOk);
}
#endif
