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

#include "spe/errors.h"

namespace spe {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateLabel:
      return "DuplicateLabel";
    case ErrorCode::kEmptyChildren:
      return "EmptyChildren";
    case ErrorCode::kBadPayoffArity:
      return "BadPayoffArity";
    case ErrorCode::kBadTurnIndex:
      return "BadTurnIndex";
    case ErrorCode::kBadPlayerCount:
      return "BadPlayerCount";
    case ErrorCode::kNoSuchNode:
      return "NoSuchNode";
    case ErrorCode::kInvalidStrategy:
      return "InvalidStrategy";
    case ErrorCode::kOracleCapExceeded:
      return "OracleCapExceeded";
    case ErrorCode::kNotTwoPlayer:
      return "NotTwoPlayer";
    case ErrorCode::kNotZeroSumShape:
      return "NotZeroSumShape";
    case ErrorCode::kBadParameters:
      return "BadParameters";
    case ErrorCode::kSyntaxError:
      return "SyntaxError";
    case ErrorCode::kInternal:
      return "Internal";
  }
  return "Unknown";
}

}  // namespace spe
