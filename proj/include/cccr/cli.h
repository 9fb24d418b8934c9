// Copyright 2026 The cccr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CCCR_CLI_H_
#define CCCR_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace cccr {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitGraph = 2;
inline constexpr int kExitNotConverged = 3;

// Runs the `cccr` command line on args (without the program name).
// Subcommands: solve, cop-number, capture-time, simulate, gen, serve.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace cccr

#endif  // CCCR_CLI_H_
