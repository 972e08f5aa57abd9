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

#ifndef SPE_GAME_IO_H_
#define SPE_GAME_IO_H_

#include <string>
#include <string_view>

#include "spe/game_tree.h"

// Game files are JSON documents:
//
//   {
//     "players": 2,
//     "root": {
//       "player": 1,
//       "children": [
//         {
//           "label": "A",
//           "node": {
//             "payoffs": [1, "-1/2"]
//           }
//         }
//       ]
//     }
//   }
//
// Players are 1-based. A payoff is a JSON number (integer or finite decimal,
// read exactly) or a string holding an integer, "p/q" or a decimal. Labels
// are non-empty and may not contain '/', '=' or line breaks, nor start or
// end with whitespace.
//
// Strategy files list one "node-path = child-label" line per decision node
// in preorder, the root's path being empty. Blank lines and lines starting
// with '#' are ignored.
namespace spe {

// Throws ParseError for malformed JSON (with line and column), GameError
// with kSyntaxError for schema violations (with the JSON path), and the
// validation error code for ill-formed trees.
GameTree ParseGame(std::string_view text);

// Canonical form: two-space indentation, keys in the order shown above,
// payoffs in lowest terms with non-integers quoted, trailing newline.
// ParseGame followed by SerializeGame reproduces a canonical file exactly.
std::string SerializeGame(const GameTree& tree);

JointStrategy ParseStrategy(const GameTree& tree, std::string_view text);
std::string SerializeStrategy(const GameTree& tree, const JointStrategy& s);

bool IsLegalLabel(std::string_view label);

}  // namespace spe

#endif  // SPE_GAME_IO_H_
