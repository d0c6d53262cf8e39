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
#include <ostream>
#include <string>

namespace ctrlshift::cli {

// Exit codes shared by every subcommand: 0 success, 1 verification or
// contract failure, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;

int cmd_run(const std::string& input_path, const std::string& output_path, std::ostream& out,
            std::ostream& err);

int cmd_qca(const std::string& config_path, const std::string& output_path, std::ostream& out,
            std::ostream& err);

int cmd_approx(double theta, double dtau, double eps, long long max_steps, std::ostream& out,
               std::ostream& err);

int cmd_verify(const std::string& suite, std::uint64_t seed, std::optional<double> tol,
               std::ostream& out, std::ostream& err);

}  // namespace ctrlshift::cli
