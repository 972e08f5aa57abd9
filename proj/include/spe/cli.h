// Copyright 2026 The spegame Authors.
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

#ifndef SPE_CLI_H_
#define SPE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace spe {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOracleCap = 3;
inline constexpr int kExitInternal = 4;

// Overrides the default oracle cap when --oracle-cap is not given.
inline constexpr const char* kOracleCapEnv = "SPEGAME_ORACLE_CAP";

// Runs one invocation; args[0] is the program name. A game path of "-"
// reads from `in`.
int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace spe

#endif  // SPE_CLI_H_
