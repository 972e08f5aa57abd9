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

#ifndef SPE_GENERATORS_H_
#define SPE_GENERATORS_H_

#include <cstdint>

#include "spe/game_tree.h"

// Example game families and seeded random games.
//
// The ultimatum family replaces the interval of claims [0, total] by the
// grid {0, total/m, ..., total}; on any grid the responder is indifferent at
// the full claim, so the grid game has two SPE where the continuum game has
// one. The bargaining family keeps first moves 2..K of the game whose first
// move ranges over all naturals. G(i, alpha) is built for natural alpha only.
namespace spe {

// Player 1 claims x in {k * total / grid_max}; player 2 accepts (x, total-x)
// or rejects (0, 0). Claims are labeled by k, responses "A" and "R".
GameTree GenUltimatum(int grid_max, const Rational& total);

// Player 1 picks k in 2..K. G(2): player 2 accepts (50,50) or rejects (0,0).
// G(k), k > 2: player 2 asks for a better offer "B", after which player 1's
// only move "k-1" leads to G(k-1), or rejects "R" for (0,0).
GameTree GenBargaining(int max_k);

// G(i, 2) is the ultimatum game over total 100 with player i proposing;
// G(i, alpha) gives player i the choice among the roots of G(-i, beta),
// 2 <= beta < alpha, labeled by beta in increasing order. `player` is 1 or 2.
GameTree GenGAlpha(int player, int alpha, int grid_max);

enum class RandomShape { kAny, kGeneric, kZeroSum3Outcome, kZeroSum2Outcome };

struct RandomGameSpec {
  int players = 2;
  int max_depth = 4;
  int max_branching = 3;
  // Chance that a non-root node above max_depth becomes a leaf.
  double leaf_probability = 0.3;
  std::int64_t min_payoff = -5;
  std::int64_t max_payoff = 5;
  RandomShape shape = RandomShape::kAny;
  std::uint64_t seed = 0;
};

// Deterministic in the spec, including the seed, on every platform.
// kGeneric widens the payoff range when it has fewer values than leaves.
GameTree GenRandom(const RandomGameSpec& spec);

}  // namespace spe

#endif  // SPE_GENERATORS_H_
