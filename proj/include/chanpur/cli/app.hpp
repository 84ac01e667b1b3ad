// Copyright 2026 The chanpur Authors
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

#ifndef CHANPUR_CLI_APP_HPP
#define CHANPUR_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chanpur::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitConvergence = 4,
  kExitUsage = 64,
};

/// Runs the command line `args` (args[0] is the program name). Artifacts go
/// to --out or to `out`; summaries, manifests without --out and
/// diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chanpur::cli

#endif  // CHANPUR_CLI_APP_HPP
