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

#ifndef SPE_SPE_SOLVER_H_
#define SPE_SPE_SOLVER_H_

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "spe/game_tree.h"

// Subgame perfect equilibria computed compositionally over subgames: the SPE
// of a game are exactly a root choice plus an SPE of every child subgame,
// where the root choice is optimal for the mover given those child SPE.
namespace spe {

// Distinct SPE outcomes, sorted lexicographically.
using OutcomeSet = std::vector<PayoffVector>;

struct SpeSet {
  BigInt count;
  std::vector<JointStrategy> sample;  // canonical order, at most `cap` long
  bool truncated = false;             // count > sample.size()
};

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

// For each subgame, o is an SPE outcome iff it is an SPE outcome of some
// child w and p_i(o) >= min p_i over the SPE outcomes of every other child.
OutcomeSet SpeOutcomes(const GameTree& tree);

// Number of SPE realizing each outcome, at the root.
std::map<PayoffVector, BigInt> SpeOutcomeCounts(const GameTree& tree);

BigInt SpeCount(const GameTree& tree);

// SPE in lexicographic order of their preorder choice sequence, up to cap.
SpeSet SpeEnumerate(const GameTree& tree, std::uint64_t cap = kUnlimited);

bool HasUniqueSpe(const GameTree& tree);

}  // namespace spe

#endif  // SPE_SPE_SOLVER_H_
