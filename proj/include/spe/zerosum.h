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

#ifndef SPE_ZEROSUM_H_
#define SPE_ZEROSUM_H_

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "spe/equilibria.h"
#include "spe/game_tree.h"

// Two-player zero-sum games with two outcomes (win or lose) or three
// (chess-like, with a draw). Outcomes are given by player 1's payoff on an
// OutcomeScale; player 2 always receives the negation. The standard scale is
// 1 > 0 > -1, but any strictly ordered triple gives the same answers.
namespace spe {

struct OutcomeScale {
  Rational win = 1;
  Rational draw = 0;
  Rational lose = -1;

  // Payoff of `player` (0 or 1) when that player wins / draws.
  Rational WinFor(int player) const { return player == 0 ? win : Rational(-lose); }
  Rational DrawFor(int player) const { return player == 0 ? draw : Rational(-draw); }
};

enum class ZeroSumShape { kNone, kWinOrLose, kChessLike };
enum class NodeClass { kWin1, kWin2, kDraw };

std::string_view NodeClassName(NodeClass c);

// Throw NotTwoPlayer unless the tree has exactly two players.
bool CheckWinOrLose(const GameTree& tree, const OutcomeScale& scale = {});
bool CheckChessLike(const GameTree& tree, const OutcomeScale& scale = {});
// kWinOrLose takes precedence: every win-or-lose game is also chess-like.
ZeroSumShape DetectShape(const GameTree& tree, const OutcomeScale& scale = {});

// Bottom-up: a node is WIN_i if its mover i has a WIN_i child, DRAW if not
// but some child is DRAW, and a win for the opponent otherwise. Throws
// NotZeroSumShape for other games.
std::vector<NodeClass> ClassifyNodes(const GameTree& tree, const OutcomeScale& scale = {});

// A strategy of one player: a choice at each of their nodes, kNoChoice
// elsewhere.
struct PlayerStrategy {
  int player = 0;
  std::vector<int> choices;

  auto operator<=>(const PlayerStrategy&) const = default;
};

// Number of strategies of `player` guaranteeing them at least `threshold`
// against every strategy of the others. The count is a product over nodes:
// at a node of the player one child must guarantee the threshold and the
// other subtrees are unconstrained; at an opponent node every child must.
BigInt GuaranteeCount(const GameTree& tree, int player, const Rational& threshold);

// The first `cap` such strategies in lexicographic order.
std::vector<PlayerStrategy> GuaranteeSample(const GameTree& tree, int player,
                                            const Rational& threshold, std::uint64_t cap);

// Exhaustive check over all opponent strategies. Throws OracleCapExceeded.
bool GuaranteesByExhaustion(const GameTree& tree, const PlayerStrategy& strategy,
                            const Rational& threshold, const OracleConfig& config = {});

// Visits every strategy of `player` in lexicographic order until `visit`
// returns false. Throws OracleCapExceeded.
void ForEachPlayerStrategy(const GameTree& tree, int player,
                           const std::function<bool(const PlayerStrategy&)>& visit,
                           const OracleConfig& config = {});

// Replaces every draw leaf by a win for `winner`. With winner = player 2
// the resulting game's win_2 is draw_2 of the original, and symmetrically.
GameTree RelabelDraws(const GameTree& tree, int winner, const OutcomeScale& scale = {});

struct StrategyClass {
  BigInt count = 0;
  std::vector<PlayerStrategy> sample;
  // Every sample checked against all opponent strategies; false when that
  // search would exceed the oracle cap.
  bool verified = false;
};

struct StrategyClassSets {
  ZeroSumShape shape = ZeroSumShape::kNone;
  std::array<StrategyClass, 2> win;
  std::array<StrategyClass, 2> draw;  // equal to win without draw leaves
};

// Draw sets come from the relabeled games: draw_1 is win_1 of the game where
// draws become wins for player 1, draw_2 likewise for player 2.
StrategyClassSets ComputeStrategyClassSets(const GameTree& tree, std::uint64_t sample_cap = 8,
                                           const OutcomeScale& scale = {},
                                           const OracleConfig& config = {});

enum class NeForm { kWinnerTimesAll, kDrawTimesDraw };

struct NeDescription {
  NeForm form;
  int winner = -1;  // set for kWinnerTimesAll
  BigInt count;
};

// NE = win_i x S_{-i} when player i can force a win, else draw_1 x draw_2.
NeDescription NeSetZeroSum(const GameTree& tree, const OutcomeScale& scale = {});

// At every decision node w: if w is a forced win for i, s_i^w must win in
// G^w; if w is a draw, both s_1^w and s_2^w must guarantee a draw.
bool SpeCheckZeroSum(const GameTree& tree, const JointStrategy& s, const OutcomeScale& scale = {});

}  // namespace spe

#endif  // SPE_ZEROSUM_H_
