// Copyright 2026 The reesse1plus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REESSE_TOOLS_CLI_HPP_
#define REESSE_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace reesse::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitReject = 1,     // verify: signature rejected
  kExitUsage = 2,
  kExitMalformed = 3,  // unreadable or malformed input file
  kExitFailure = 4,    // algorithm failure (no decode, search exhausted, ...)
};

// Runs one command; `args` excludes the program name. Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reesse::cli

#endif  // REESSE_TOOLS_CLI_HPP_
