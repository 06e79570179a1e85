/*
   Copyright 2026 The mockradial Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef MOCKRADIAL_TOOLS_CLI_HPP
#define MOCKRADIAL_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mockradial::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsage = 2, kUnsupported = 3 };

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mockradial::cli

#endif  // MOCKRADIAL_TOOLS_CLI_HPP
