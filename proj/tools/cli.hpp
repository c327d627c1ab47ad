/*
 * Copyright 2026 The rankopt Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RANKOPT_TOOLS_CLI_HPP_
#define RANKOPT_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace rankopt::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitOracleMismatch = 2;

// Runs the rankopt command line. `args` excludes the program name. Reports
// go to `out` as JSON, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace rankopt::tools

#endif  // RANKOPT_TOOLS_CLI_HPP_
