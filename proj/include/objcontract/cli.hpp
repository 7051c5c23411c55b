// Copyright 2026 The objcontract Authors
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

// Command-line front end. `run_cli` takes the arguments without the program
// name and never calls std::exit, so it can be driven from tests.
//
// Exit codes: 0 success, 1 verification failure, 2 cap or capability
// refusal, 64 usage error.

#include <ostream>
#include <string>
#include <vector>

namespace objcontract::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitRefused = 2;
inline constexpr int kExitUsage = 64;

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace objcontract::cli
