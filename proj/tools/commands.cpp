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

#include "commands.hpp"

#include <fstream>
#include <sstream>

#include "ctrlshift/json_io.hpp"
#include "ctrlshift/processor.hpp"
#include "ctrlshift/qca.hpp"
#include "json.hpp"
#include "verify_suite.hpp"

namespace ctrlshift::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int write_output(const std::string& text, const std::string& output_path, std::ostream& out,
                 std::ostream& err) {
  if (output_path.empty()) {
    out << text << "\n";
    return kExitOk;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file: " << output_path << "\n";
    return kExitInputError;
  }
  file << text << "\n";
  return kExitOk;
}

json amps_json(const StateVector& s) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < s.amps().size(); ++i) {
    arr.push_back(json::array({s.amps()(i).real(), s.amps()(i).imag()}));
  }
  return arr;
}

}  // namespace

int cmd_run(const std::string& input_path, const std::string& output_path, std::ostream& out,
            std::ostream& err) {
  ProgramFileContents contents = [&] {
    const std::string text = read_file(input_path);
    return parse_program_file(text);
  }();
  const StateVector final_state = run(contents.program, contents.config, contents.initial_state);
  json result;
  result["final_state"] = amps_json(final_state);
  result["program_restored"] = true;  // run() asserts bus restoration internally
  return write_output(result.dump(), output_path, out, err);
}

int cmd_qca(const std::string& config_path, const std::string& output_path, std::ostream& out,
            std::ostream& err) {
  QcaFileContents contents = [&] {
    const std::string text = read_file(config_path);
    return parse_qca_config(text);
  }();
  const Lattice evolved =
      evolve(contents.lattice, contents.sequence, contents.repetitions, contents.dtau);
  bool lines_restored = true;
  for (std::size_t ln = 0; ln < evolved.lines().size(); ++ln) {
    if (evolved.lines()[ln].slots != contents.lattice.lines()[ln].slots) {
      lines_restored = false;
    }
  }
  json result;
  result["final_state"] = amps_json(evolved.data());
  result["lines_restored"] = lines_restored;
  return write_output(result.dump(), output_path, out, err);
}

int cmd_approx(double theta, double dtau, double eps, long long max_steps, std::ostream& out,
               std::ostream& err) {
  if (eps <= 0.0 || dtau <= 0.0 || max_steps < 0) {
    err << "error: approx requires dtau > 0, eps > 0, max-steps >= 0\n";
    return kExitInputError;
  }
  const AngleSearchResult r = approximate_angle(theta, dtau, eps, max_steps);
  json result;
  result["m"] = r.steps;
  result["error"] = r.error;
  result["found"] = r.found;
  out << result.dump() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::optional<double> tol,
               std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> results;
  try {
    results = run_suite(suite, seed, tol);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  bool all_pass = true;
  for (const CheckResult& r : results) {
    json line;
    line["check"] = r.name;
    line["params"] = json::parse(r.params);
    line["metric"] = r.metric;
    line["tol"] = r.tol;
    line["pass"] = r.pass;
    out << line.dump() << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitFailure;
}

}  // namespace ctrlshift::cli
