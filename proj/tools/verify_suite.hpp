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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ctrlshift::cli {

// One verification record. `below` checks pass when metric <= tol, the
// witness checks (`below` false) when metric > tol.
struct CheckResult {
  std::string name;
  std::string params;  // JSON fragment describing the instance
  double metric = 0.0;
  double tol = 0.0;
  bool below = true;
  bool pass = false;
};

// Runs one of {all, gates, processor, qca, theorems}; results are sorted by
// check name. A tol override replaces every check's tolerance.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed,
                                   std::optional<double> tol_override);

}  // namespace ctrlshift::cli
