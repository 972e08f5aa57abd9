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

#ifndef SPE_ERRORS_H_
#define SPE_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace spe {

enum class ErrorCode {
  kDuplicateLabel,
  kEmptyChildren,
  kBadPayoffArity,
  kBadTurnIndex,
  kBadPlayerCount,
  kNoSuchNode,
  kInvalidStrategy,
  kOracleCapExceeded,
  kNotTwoPlayer,
  kNotZeroSumShape,
  kBadParameters,
  kSyntaxError,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class GameError : public std::runtime_error {
 public:
  GameError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Syntax errors in game and strategy files, positioned at 1-based line and
// column.
class ParseError : public GameError {
 public:
  ParseError(int line, int column, const std::string& reason)
      : GameError(ErrorCode::kSyntaxError, "line " + std::to_string(line) + ", column " +
                                               std::to_string(column) + ": " + reason),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace spe

#endif  // SPE_ERRORS_H_
