// Copyright 2026 The sigraph Authors
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

#ifndef SIGRAPH_CLI_H_
#define SIGRAPH_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace sigraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitPartial = 2;

// Default enumeration budget in seconds when --budget is absent.
inline constexpr char kBudgetEnvVar[] = "SIGRAPH_BUDGET_SECS";

// args excludes the program name. Errors go to `err` as
// {"error": {"code", "message"}}.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

int Run(int argc, char** argv);

}  // namespace sigraph::cli

#endif  // SIGRAPH_CLI_H_
