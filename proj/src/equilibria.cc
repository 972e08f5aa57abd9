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

#include "spe/equilibria.h"

#include "internal.h"

namespace spe {
namespace {

std::vector<NodeIndex> OwnedNodes(const GameTree& tree, int player, NodeIndex within) {
  std::vector<NodeIndex> owned;
  for (NodeIndex u = within; u < tree.SubtreeEnd(within); ++u) {
    if (!tree.IsLeaf(u) && tree.Turn(u) == player) owned.push_back(u);
  }
  return owned;
}

void RequireWithinCap(const BigInt& count, const OracleConfig& config, const char* what) {
  if (count > config.cap) {
    throw GameError(ErrorCode::kOracleCapExceeded, std::string(what) + " has " + count.str() +
                                                       " elements, cap is " +
                                                       std::to_string(config.cap));
  }
}

// Leaves player can reach from `within` by changing only their own choices.
// Strategies that differ off the induced play are interchangeable here, so
// these leaves stand for all of the player's strategies.
std::vector<NodeIndex> ReachableLeaves(const GameTree& tree, const JointStrategy& s, int player,
                                       NodeIndex within) {
  std::vector<NodeIndex> leaves;
  std::vector<NodeIndex> stack = {within};
  while (!stack.empty()) {
    const NodeIndex u = stack.back();
    stack.pop_back();
    if (tree.IsLeaf(u)) {
      leaves.push_back(u);
      continue;
    }
    const auto children = tree.Children(u);
    if (tree.Turn(u) != player) {
      stack.push_back(children[s.Choice(u)].node);
      continue;
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(it->node);
  }
  return leaves;
}

std::optional<Improvement> FindImprovementUnchecked(const GameTree& tree, const JointStrategy& s,
                                                    int player, NodeIndex within,
                                                    const OracleConfig& config) {
  if (tree.IsLeaf(within)) return std::nullopt;
  const std::vector<NodeIndex> leaves = ReachableLeaves(tree, s, player, within);
  RequireWithinCap(leaves.size(), config, "induced play set");

  const NodeIndex before = LeafFrom(tree, s, within);
  const int current = tree.PayoffRank(player, before);
  for (NodeIndex after : leaves) {
    if (tree.PayoffRank(player, after) <= current) continue;
    JointStrategy t = s;
    for (NodeIndex v = after; v != within; v = tree.Parent(v)) {
      const NodeIndex parent = tree.Parent(v);
      const auto children = tree.Children(parent);
      for (int k = 0; k < static_cast<int>(children.size()); ++k) {
        if (children[k].node == v) t.SetChoice(parent, k);
      }
    }
    return Improvement{player, before, after, t};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Improvement> FindImprovement(const GameTree& tree, const JointStrategy& s, int player,
                                           NodeIndex within, const OracleConfig& config) {
  CheckStrategy(tree, s);
  return FindImprovementUnchecked(tree, s, player, within, config);
}

bool IsBestResponse(const GameTree& tree, const JointStrategy& s, int player,
                    const OracleConfig& config) {
  return !FindImprovement(tree, s, player, tree.root(), config).has_value();
}

std::optional<Improvement> FindNashViolation(const GameTree& tree, const JointStrategy& s,
                                             NodeIndex within, const OracleConfig& config) {
  CheckStrategy(tree, s);
  for (int i = 0; i < tree.num_players(); ++i) {
    if (auto found = FindImprovementUnchecked(tree, s, i, within, config)) return found;
  }
  return std::nullopt;
}

bool IsNash(const GameTree& tree, const JointStrategy& s, const OracleConfig& config) {
  return !FindNashViolation(tree, s, tree.root(), config).has_value();
}

bool IsSpeByDefinition(const GameTree& tree, const JointStrategy& s, const OracleConfig& config) {
  CheckStrategy(tree, s);
  // Deepest subgames first: most non-equilibria fail in a small subgame.
  const auto& internal_nodes = tree.InternalNodes();
  for (auto it = internal_nodes.rbegin(); it != internal_nodes.rend(); ++it) {
    for (int i = 0; i < tree.num_players(); ++i) {
      if (FindImprovementUnchecked(tree, s, i, *it, config)) return false;
    }
  }
  return true;
}

std::optional<DeviationWitness> OneDeviationCheck(const GameTree& tree, const JointStrategy& s) {
  CheckStrategy(tree, s);
  // leaf(s^w) for every w, bottom-up over the preorder arena.
  std::vector<NodeIndex> leaf_of(tree.num_nodes());
  for (NodeIndex u = tree.num_nodes() - 1; u >= 0; --u) {
    leaf_of[u] = tree.IsLeaf(u) ? u : leaf_of[tree.Children(u)[s.Choice(u)].node];
  }
  for (NodeIndex u : tree.InternalNodes()) {
    const int mover = tree.Turn(u);
    const auto children = tree.Children(u);
    const int chosen = s.Choice(u);
    const Rational& at_choice = tree.Payoffs(leaf_of[children[chosen].node])[mover];
    for (int y = 0; y < static_cast<int>(children.size()); ++y) {
      const Rational& at_y = tree.Payoffs(leaf_of[children[y].node])[mover];
      if (at_y > at_choice) {
        return DeviationWitness{u, mover, chosen, y, at_choice, at_y};
      }
    }
  }
  return std::nullopt;
}

void ForEachJointStrategy(const GameTree& tree,
                          const std::function<bool(const JointStrategy&)>& visit,
                          const OracleConfig& config) {
  RequireWithinCap(JointStrategyCount(tree), config, "joint strategy set");
  JointStrategy s = FirstChildStrategy(tree);
  do {
    if (!visit(s)) return;
  } while (internal::AdvanceOdometer(tree, tree.InternalNodes(), s));
}

std::vector<JointStrategy> BruteForceSpeSet(const GameTree& tree, const OracleConfig& config) {
  std::vector<JointStrategy> result;
  ForEachJointStrategy(
      tree,
      [&](const JointStrategy& s) {
        if (IsSpeByDefinition(tree, s, config)) result.push_back(s);
        return true;
      },
      config);
  return result;
}

std::vector<JointStrategy> BruteForceNashSet(const GameTree& tree, const OracleConfig& config) {
  RequireWithinCap(JointStrategyCount(tree), config, "joint strategy set");
  const int n = tree.num_players();
  // For each player, the nodes of the others and the best rank the player
  // can reach against each of their joint choices (mixed-radix code).
  std::vector<std::vector<NodeIndex>> others(n);
  std::vector<std::vector<int>> best(n);
  for (int i = 0; i < n; ++i) {
    const std::vector<NodeIndex> owned = OwnedNodes(tree, i, tree.root());
    for (NodeIndex u : tree.InternalNodes()) {
      if (tree.Turn(u) != i) others[i].push_back(u);
    }
    JointStrategy t = FirstChildStrategy(tree);
    do {
      for (NodeIndex u : owned) t.SetChoice(u, 0);
      int reach = -1;
      do {
        reach = std::max(reach, tree.PayoffRank(i, LeafFrom(tree, t, tree.root())));
      } while (internal::AdvanceOdometer(tree, owned, t));
      best[i].push_back(reach);
    } while (internal::AdvanceOdometer(tree, others[i], t));
  }

  std::vector<JointStrategy> result;
  JointStrategy s = FirstChildStrategy(tree);
  do {
    const NodeIndex leaf = LeafFrom(tree, s, tree.root());
    bool stable = true;
    for (int i = 0; i < n && stable; ++i) {
      std::size_t code = 0;
      for (NodeIndex u : others[i]) {
        code = code * tree.Children(u).size() + static_cast<std::size_t>(s.Choice(u));
      }
      stable = tree.PayoffRank(i, leaf) == best[i][code];
    }
    if (stable) result.push_back(s);
  } while (internal::AdvanceOdometer(tree, tree.InternalNodes(), s));
  return result;
}

}  // namespace spe
