// Copyright 2026 The Currikit Authors.
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

#ifndef CURRIKIT_CLI_H_
#define CURRIKIT_CLI_H_

#include <ostream>
#include <span>
#include <string>

namespace currikit {

// Exit statuses of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // pipeline error, reported with its stage
inline constexpr int kExitUsage = 2;    // unknown subcommand or flag

// Entry point of the `currikit` tool. `args` excludes the program name.
// Errors are written to `err` as one line: "error: <stage>: <message>".
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace currikit

#endif  // CURRIKIT_CLI_H_
