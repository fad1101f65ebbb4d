// Copyright 2026 The alarmgame Authors.
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

#ifndef ALARMGAME_CLI_H_
#define ALARMGAME_CLI_H_

#include <chrono>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace alarmgame {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitTimeout = 3;  // budget ran out, incumbent written

// "60s", "500ms", "2m", "1h" or a bare number of seconds. Throws
// Error(kInvalidArgument).
std::chrono::milliseconds ParseDuration(std::string_view text);

// Runs one subcommand. `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);
int RunCli(int argc, char** argv);

}  // namespace alarmgame

#endif  // ALARMGAME_CLI_H_
