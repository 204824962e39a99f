// Copyright 2026 The Edgeblock Authors.
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

// Command-line front end. Subcommands: stats, weights, simulate, block,
// evaluate and hardness.

#ifndef EDGEBLOCK_TOOLS_CLI_H_
#define EDGEBLOCK_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace edgeblock::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "1..20", "1,5,10" (integer percentages, optional '%' suffix) or
// "0.01,0.05" (fractions). Throws std::invalid_argument.
std::vector<double> parse_budget_list(const std::string& spec);

}  // namespace edgeblock::cli

#endif  // EDGEBLOCK_TOOLS_CLI_H_
