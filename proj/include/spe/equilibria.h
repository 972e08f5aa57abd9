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

#ifndef SPE_EQUILIBRIA_H_
#define SPE_EQUILIBRIA_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "spe/game_tree.h"

// Definitional equilibrium checks. A best response is decided by trying every
// play the deviator can induce against the others' fixed choices; strategies
// agreeing on the induced play are not tried twice. The joint-strategy
// enumerations at the bottom are exponential and gated by a cap.
namespace spe {

inline constexpr std::uint64_t kDefaultOracleCap = 1'000'000;

struct OracleConfig {
  // Largest set any single exhaustive search may enumerate.
  std::uint64_t cap = kDefaultOracleCap;
};

// A strategy of `player` that does strictly better against s_{-player}.
struct Improvement {
  int player;
  NodeIndex leaf_before;
  NodeIndex leaf_after;
  JointStrategy deviation;
};

// Node u, its mover, the chosen child x and a child y with
// p_mover(leaf(s^y)) > p_mover(leaf(s^x)).
struct DeviationWitness {
  NodeIndex node;
  int mover;
  int chosen_child;
  int deviating_child;
  Rational payoff_at_choice;
  Rational payoff_at_deviation;
};

// Best-response search restricted to the subgame at `within`; the returned
// deviation is a full joint strategy of the whole tree that differs from s
// only at nodes of `player` inside that subgame.
std::optional<Improvement> FindImprovement(const GameTree& tree, const JointStrategy& s, int player,
                                           NodeIndex within = 0, const OracleConfig& config = {});

bool IsBestResponse(const GameTree& tree, const JointStrategy& s, int player,
                    const OracleConfig& config = {});

std::optional<Improvement> FindNashViolation(const GameTree& tree, const JointStrategy& s,
                                             NodeIndex within = 0, const OracleConfig& config = {});
bool IsNash(const GameTree& tree, const JointStrategy& s, const OracleConfig& config = {});

// s^w is a Nash equilibrium of G^w for every node w.
bool IsSpeByDefinition(const GameTree& tree, const JointStrategy& s,
                       const OracleConfig& config = {});

// Single bottom-up pass; first violation in preorder, children in order.
std::optional<DeviationWitness> OneDeviationCheck(const GameTree& tree, const JointStrategy& s);

// Visits every joint strategy in lexicographic order until `visit` returns
// false. Throws OracleCapExceeded when |S| exceeds the cap.
void ForEachJointStrategy(const GameTree& tree,
                          const std::function<bool(const JointStrategy&)>& visit,
                          const OracleConfig& config = {});

// {s : IsSpeByDefinition(s)}, in lexicographic order.
std::vector<JointStrategy> BruteForceSpeSet(const GameTree& tree, const OracleConfig& config = {});

// {s : IsNash(s)}, in lexicographic order. Computes each player's best
// attainable payoff per opponent profile once rather than per joint strategy.
std::vector<JointStrategy> BruteForceNashSet(const GameTree& tree, const OracleConfig& config = {});

}  // namespace spe

#endif  // SPE_EQUILIBRIA_H_
