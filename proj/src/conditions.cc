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

#include "spe/conditions.h"

#include <algorithm>
#include <map>
#include <set>

#include "internal.h"
#include "spe/spe_solver.h"

namespace spe {
namespace {

using LeafPair = std::pair<NodeIndex, NodeIndex>;

ConditionReport Holds(Condition c) { return ConditionReport{c, true, std::nullopt}; }

ConditionReport Fails(Condition c, ConditionWitness witness) {
  return ConditionReport{c, false, witness};
}

void RequireTwoPlayers(const GameTree& tree) {
  if (tree.num_players() != 2) {
    throw GameError(ErrorCode::kNotTwoPlayer,
                    "game has " + std::to_string(tree.num_players()) + " players");
  }
}

bool SameOutcome(const GameTree& tree, NodeIndex a, NodeIndex b) {
  for (int i = 0; i < tree.num_players(); ++i) {
    if (tree.PayoffRank(i, a) != tree.PayoffRank(i, b)) return false;
  }
  return true;
}

// Lexicographically least pair z < z' of leaves in [begin, end) with equal
// p_player.
std::optional<LeafPair> LeastTie(const GameTree& tree, int player, NodeIndex begin, NodeIndex end) {
  std::map<int, std::pair<NodeIndex, NodeIndex>> first_two;
  for (NodeIndex z = begin; z < end; ++z) {
    if (!tree.IsLeaf(z)) continue;
    auto [it, inserted] = first_two.try_emplace(tree.PayoffRank(player, z), z, -1);
    if (!inserted && it->second.second < 0) it->second.second = z;
  }
  std::optional<LeafPair> least;
  for (const auto& [rank, pair] : first_two) {
    if (pair.second >= 0 && (!least || pair < *least)) least = pair;
  }
  return least;
}

bool Earlier(const ConditionWitness& a, const ConditionWitness& b) {
  return std::tie(a.first, a.second, a.player) < std::tie(b.first, b.second, b.player);
}

// Index of the child of u whose subtree contains z.
int ChildContaining(const GameTree& tree, NodeIndex u, NodeIndex z) {
  const auto children = tree.Children(u);
  for (int c = 0; c < static_cast<int>(children.size()); ++c) {
    if (tree.InSubtree(children[c].node, z)) return c;
  }
  return -1;
}

// Leaves z < z' under different children of u with equal p_mover and
// different outcomes, least first.
std::optional<LeafPair> LeastDivergentIndifference(const GameTree& tree, NodeIndex u) {
  const int mover = tree.Turn(u);
  struct Group {
    NodeIndex representative;
    int child;
    bool many_outcomes = false;
    bool many_children = false;
  };
  std::map<int, Group> groups;
  bool violated = false;
  for (NodeIndex z = u; z < tree.SubtreeEnd(u) && !violated; ++z) {
    if (!tree.IsLeaf(z)) continue;
    const int child = ChildContaining(tree, u, z);
    auto [it, inserted] = groups.try_emplace(tree.PayoffRank(mover, z), Group{z, child});
    if (inserted) continue;
    Group& g = it->second;
    g.many_outcomes = g.many_outcomes || !SameOutcome(tree, g.representative, z);
    g.many_children = g.many_children || g.child != child;
    violated = g.many_outcomes && g.many_children;
  }
  if (!violated) return std::nullopt;
  // Only reached on failure; quadratic in the subtree's leaves.
  for (NodeIndex a = u; a < tree.SubtreeEnd(u); ++a) {
    if (!tree.IsLeaf(a)) continue;
    const int child_a = ChildContaining(tree, u, a);
    for (NodeIndex b = a + 1; b < tree.SubtreeEnd(u); ++b) {
      if (tree.IsLeaf(b) && tree.PayoffRank(mover, a) == tree.PayoffRank(mover, b) &&
          !SameOutcome(tree, a, b) && ChildContaining(tree, u, b) != child_a) {
        return LeafPair{a, b};
      }
    }
  }
  return std::nullopt;
}

bool CompetitivePair(const GameTree& tree, NodeIndex a, NodeIndex b) {
  const int a1 = tree.PayoffRank(0, a), b1 = tree.PayoffRank(0, b);
  const int a2 = tree.PayoffRank(1, a), b2 = tree.PayoffRank(1, b);
  return ((a1 >= b1) == (a2 <= b2)) && ((b1 >= a1) == (b2 <= a2));
}

}  // namespace

std::string_view ConditionName(Condition condition) {
  switch (condition) {
    case Condition::kNoRelevantTies:
      return "NO_RELEVANT_TIES";
    case Condition::kGeneric:
      return "GENERIC";
    case Condition::kRochet:
      return "ROCHET";
    case Condition::kStrictlyCompetitive:
      return "STRICTLY_COMPETITIVE";
    case Condition::kTdi:
      return "TDI";
    case Condition::kZeroSum:
      return "ZERO_SUM";
  }
  return "?";
}

ConditionReport CheckNoRelevantTies(const GameTree& tree) {
  for (NodeIndex u : tree.InternalNodes()) {
    const int mover = tree.Turn(u);
    // A passing ancestor with the same mover already covers this subtree.
    bool covered = false;
    for (NodeIndex a = tree.Parent(u); a >= 0 && !covered; a = tree.Parent(a)) {
      covered = tree.Turn(a) == mover;
    }
    if (covered) continue;
    if (auto tie = LeastTie(tree, mover, u, tree.SubtreeEnd(u))) {
      return Fails(Condition::kNoRelevantTies, ConditionWitness{tie->first, tie->second, mover, u});
    }
  }
  return Holds(Condition::kNoRelevantTies);
}

ConditionReport CheckGeneric(const GameTree& tree) {
  std::optional<ConditionWitness> least;
  for (int i = 0; i < tree.num_players(); ++i) {
    if (auto tie = LeastTie(tree, i, tree.root(), tree.num_nodes())) {
      ConditionWitness w{tie->first, tie->second, i, -1};
      if (!least || Earlier(w, *least)) least = w;
    }
  }
  return least ? Fails(Condition::kGeneric, *least) : Holds(Condition::kGeneric);
}

ConditionReport CheckRochet(const GameTree& tree) {
  std::optional<ConditionWitness> least;
  for (int i = 0; i < tree.num_players(); ++i) {
    // Per p_i level: its first leaf and the first leaf with another outcome.
    // If the first leaf agrees with all later ones the level is uniform.
    std::map<int, std::pair<NodeIndex, NodeIndex>> levels;
    for (NodeIndex z : tree.Leaves()) {
      auto [it, inserted] = levels.try_emplace(tree.PayoffRank(i, z), z, -1);
      if (!inserted && it->second.second < 0 && !SameOutcome(tree, it->second.first, z)) {
        it->second.second = z;
      }
    }
    for (const auto& [rank, pair] : levels) {
      if (pair.second < 0) continue;
      ConditionWitness w{pair.first, pair.second, i, -1};
      if (!least || Earlier(w, *least)) least = w;
    }
  }
  return least ? Fails(Condition::kRochet, *least) : Holds(Condition::kRochet);
}

ConditionReport CheckStrictlyCompetitive(const GameTree& tree) {
  RequireTwoPlayers(tree);
  // Holds iff p_2 is a strictly decreasing function of p_1 on the leaves.
  std::map<int, int> p2_at;
  bool holds = true;
  for (NodeIndex z : tree.Leaves()) {
    auto [it, inserted] = p2_at.try_emplace(tree.PayoffRank(0, z), tree.PayoffRank(1, z));
    holds = holds && it->second == tree.PayoffRank(1, z);
  }
  for (auto it = p2_at.begin(); holds && it != p2_at.end(); ++it) {
    auto next = std::next(it);
    holds = next == p2_at.end() || next->second < it->second;
  }
  if (holds) return Holds(Condition::kStrictlyCompetitive);
  const auto& leaves = tree.Leaves();
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    for (std::size_t b = a + 1; b < leaves.size(); ++b) {
      if (!CompetitivePair(tree, leaves[a], leaves[b])) {
        return Fails(Condition::kStrictlyCompetitive,
                     ConditionWitness{leaves[a], leaves[b], -1, -1});
      }
    }
  }
  throw GameError(ErrorCode::kInternal, "strict competitiveness verdicts disagree");
}

ConditionReport CheckZeroSum(const GameTree& tree) {
  RequireTwoPlayers(tree);
  for (NodeIndex z : tree.Leaves()) {
    const PayoffVector& p = tree.Payoffs(z);
    if (p[0] + p[1] != 0) return Fails(Condition::kZeroSum, ConditionWitness{z, z, -1, -1});
  }
  return Holds(Condition::kZeroSum);
}

ConditionReport CheckTdi(const GameTree& tree, std::uint64_t exhaustive_budget) {
  ConditionReport report = Holds(Condition::kTdi);
  for (NodeIndex u : tree.InternalNodes()) {
    if (auto pair = LeastDivergentIndifference(tree, u)) {
      report = Fails(Condition::kTdi, ConditionWitness{pair->first, pair->second, tree.Turn(u), u});
      break;
    }
  }
  if (JointStrategyCount(tree) <= exhaustive_budget &&
      CheckTdiExhaustive(tree, OracleConfig{exhaustive_budget}) != report.holds) {
    throw GameError(ErrorCode::kInternal, "TDI verdicts disagree");
  }
  return report;
}

bool CheckTdiExhaustive(const GameTree& tree, const OracleConfig& config) {
  if (JointStrategyCount(tree) > config.cap) {
    throw GameError(ErrorCode::kOracleCapExceeded,
                    "joint strategy set has " + JointStrategyCount(tree).str() + " elements");
  }
  for (int i = 0; i < tree.num_players(); ++i) {
    std::vector<NodeIndex> owned;
    std::vector<NodeIndex> others;
    for (NodeIndex u : tree.InternalNodes()) (tree.Turn(u) == i ? owned : others).push_back(u);
    JointStrategy s = FirstChildStrategy(tree);
    do {
      // Leaves player i can reach against this opponent profile, by p_i.
      std::map<int, NodeIndex> reached;
      for (NodeIndex u : owned) s.SetChoice(u, 0);
      do {
        const NodeIndex z = LeafFrom(tree, s, tree.root());
        auto [it, inserted] = reached.try_emplace(tree.PayoffRank(i, z), z);
        if (!inserted && !SameOutcome(tree, it->second, z)) return false;
      } while (internal::AdvanceOdometer(tree, owned, s));
    } while (internal::AdvanceOdometer(tree, others, s));
  }
  return true;
}

bool CheckSpePayoffEquivalence(const GameTree& tree) { return SpeOutcomes(tree).size() == 1; }

}  // namespace spe
