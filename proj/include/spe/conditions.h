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

#ifndef SPE_CONDITIONS_H_
#define SPE_CONDITIONS_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "spe/equilibria.h"
#include "spe/game_tree.h"

// Structural conditions on payoffs that force a unique SPE or payoff
// equivalent SPE.
//
// Conditions quantified over pairs of joint strategies reduce to pairs of
// leaves, because strategies are total and every leaf is the outcome of some
// joint strategy. Conditions quantified over one player's strategies against
// a fixed opponent profile reduce to leaf pairs that diverge at a node of
// that player: only there can both leaves be reached against the same
// opponent profile.
namespace spe {

enum class Condition {
  kNoRelevantTies,
  kGeneric,
  kRochet,
  kStrictlyCompetitive,
  kTdi,
  kZeroSum,
};

std::string_view ConditionName(Condition condition);

// Two leaves (first < second in preorder) violating a condition. `player` is
// the player whose comparison fails, -1 when not specific to one player;
// `node` is the node the condition was evaluated at, -1 when global.
struct ConditionWitness {
  NodeIndex first;
  NodeIndex second;
  int player = -1;
  NodeIndex node = -1;
};

struct ConditionReport {
  Condition condition;
  bool holds;
  std::optional<ConditionWitness> witness;  // present iff !holds
};

// At every decision node u with mover i, p_i is injective on the leaves of
// the subtree at u.
ConditionReport CheckNoRelevantTies(const GameTree& tree);
// Every p_i is injective on all leaves.
ConditionReport CheckGeneric(const GameTree& tree);
// p_i(z) = p_i(z') implies p(z) = p(z'), for every player and leaf pair.
ConditionReport CheckRochet(const GameTree& tree);
// Two players only: p_1(z) >= p_1(z') iff p_2(z) <= p_2(z').
ConditionReport CheckStrictlyCompetitive(const GameTree& tree);
// Two players only: p_1 + p_2 = 0 at every leaf.
ConditionReport CheckZeroSum(const GameTree& tree);

// Transference of decisionmaker indifference via divergence nodes. When the
// game has at most `exhaustive_budget` joint strategies the verdict is also
// recomputed by enumerating every (player, opponent profile, strategy pair)
// and a disagreement raises an internal error.
ConditionReport CheckTdi(const GameTree& tree, std::uint64_t exhaustive_budget = 100'000);
// The enumeration alone. Throws OracleCapExceeded above the cap.
bool CheckTdiExhaustive(const GameTree& tree, const OracleConfig& config = {});

// All SPE yield the same outcome.
bool CheckSpePayoffEquivalence(const GameTree& tree);

}  // namespace spe

#endif  // SPE_CONDITIONS_H_
