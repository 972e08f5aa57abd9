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

#include "spe/game_tree.h"

#include <algorithm>
#include <set>

namespace spe {

NodeSpec NodeSpec::Leaf(PayoffVector payoffs) {
  NodeSpec spec;
  spec.is_leaf = true;
  spec.payoffs = std::move(payoffs);
  return spec;
}

NodeSpec NodeSpec::Decision(int player, std::vector<std::pair<std::string, NodeSpec>> children) {
  NodeSpec spec;
  spec.is_leaf = false;
  spec.player = player;
  spec.children = std::move(children);
  return spec;
}

GameTree::GameTree(int num_players, const NodeSpec& root) : num_players_(num_players) {
  Flatten(root, -1, 0, "");
  for (NodeIndex u = 0; u < num_nodes(); ++u) {
    (nodes_[u].is_leaf ? leaves_ : internal_).push_back(u);
    by_path_.emplace(nodes_[u].path, u);
  }
  ComputeRanks();
}

NodeIndex GameTree::Flatten(const NodeSpec& spec, NodeIndex parent, int depth, std::string path) {
  const NodeIndex index = num_nodes();
  nodes_.push_back(Node{spec.is_leaf,
                        spec.is_leaf ? 0 : spec.player,
                        {},
                        spec.payoffs,
                        parent,
                        index + 1,
                        depth,
                        path});
  if (!spec.is_leaf) {
    std::vector<Child> children;
    children.reserve(spec.children.size());
    for (const auto& [label, child] : spec.children) {
      std::string child_path = path.empty() ? label : path + "/" + label;
      NodeIndex c = Flatten(child, index, depth + 1, std::move(child_path));
      children.push_back(Child{label, c});
    }
    nodes_[index].children = std::move(children);
  }
  nodes_[index].subtree_end = num_nodes();
  return index;
}

void GameTree::ComputeRanks() {
  if (num_players_ < 1) return;
  for (NodeIndex z : leaves_) {
    if (nodes_[z].payoffs.size() != num_players_) return;
  }
  ranks_.assign(static_cast<std::size_t>(num_players_) * nodes_.size(), -1);
  for (int i = 0; i < num_players_; ++i) {
    std::vector<Rational> values;
    values.reserve(leaves_.size());
    for (NodeIndex z : leaves_) values.push_back(nodes_[z].payoffs[i]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (NodeIndex z : leaves_) {
      auto it = std::lower_bound(values.begin(), values.end(), nodes_[z].payoffs[i]);
      ranks_[static_cast<std::size_t>(i) * nodes_.size() + z] =
          static_cast<int>(it - values.begin());
    }
  }
}

std::optional<NodeIndex> GameTree::Find(std::string_view path) const {
  auto it = by_path_.find(std::string(path));
  if (it == by_path_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> GameTree::ChildPosition(NodeIndex u, std::string_view label) const {
  const auto& children = nodes_[u].children;
  for (std::size_t k = 0; k < children.size(); ++k) {
    if (children[k].label == label) return static_cast<int>(k);
  }
  return std::nullopt;
}

NodeSpec GameTree::ToSpec(NodeIndex u) const {
  const Node& node = nodes_[u];
  if (node.is_leaf) return NodeSpec::Leaf(node.payoffs);
  std::vector<std::pair<std::string, NodeSpec>> children;
  children.reserve(node.children.size());
  for (const Child& c : node.children) children.emplace_back(c.label, ToSpec(c.node));
  return NodeSpec::Decision(node.player, std::move(children));
}

std::optional<ValidationIssue> Validate(const GameTree& tree) {
  const int n = tree.num_players();
  if (n < 1) {
    return ValidationIssue{ErrorCode::kBadPlayerCount, 0, "",
                           "player count must be at least 1, got " + std::to_string(n)};
  }
  for (NodeIndex u = 0; u < tree.num_nodes(); ++u) {
    const std::string where = "node '" + tree.Path(u) + "'";
    if (tree.IsLeaf(u)) {
      if (tree.Payoffs(u).size() != n) {
        return ValidationIssue{ErrorCode::kBadPayoffArity, u, tree.Path(u),
                               where + " has " + std::to_string(tree.Payoffs(u).size()) +
                                   " payoffs, expected " + std::to_string(n)};
      }
      continue;
    }
    if (tree.Turn(u) < 0 || tree.Turn(u) >= n) {
      return ValidationIssue{ErrorCode::kBadTurnIndex, u, tree.Path(u),
                             where + " is owned by player " + std::to_string(tree.Turn(u) + 1) +
                                 " of " + std::to_string(n)};
    }
    if (tree.Children(u).empty()) {
      return ValidationIssue{ErrorCode::kEmptyChildren, u, tree.Path(u),
                             where + " is a decision node without children"};
    }
    std::set<std::string_view> seen;
    for (const auto& child : tree.Children(u)) {
      if (!seen.insert(child.label).second) {
        return ValidationIssue{ErrorCode::kDuplicateLabel, u, tree.Path(u),
                               where + " has two children labeled '" + child.label + "'"};
      }
    }
  }
  return std::nullopt;
}

void ValidateOrThrow(const GameTree& tree) {
  if (auto issue = Validate(tree)) throw GameError(issue->code, issue->message);
}

void CheckStrategy(const GameTree& tree, const JointStrategy& s) {
  if (s.size() != tree.num_nodes()) {
    throw GameError(ErrorCode::kInvalidStrategy, "strategy covers " + std::to_string(s.size()) +
                                                     " nodes, tree has " +
                                                     std::to_string(tree.num_nodes()));
  }
  for (NodeIndex u = 0; u < tree.num_nodes(); ++u) {
    const int c = s.Choice(u);
    if (tree.IsLeaf(u)) {
      if (c != kNoChoice) {
        throw GameError(ErrorCode::kInvalidStrategy, "choice at leaf '" + tree.Path(u) + "'");
      }
    } else if (c < 0 || c >= static_cast<int>(tree.Children(u).size())) {
      throw GameError(ErrorCode::kInvalidStrategy,
                      "no legal choice at node '" + tree.Path(u) + "'");
    }
  }
}

JointStrategy FirstChildStrategy(const GameTree& tree) {
  std::vector<int> choices(tree.num_nodes(), kNoChoice);
  for (NodeIndex u : tree.InternalNodes()) choices[u] = 0;
  return JointStrategy(std::move(choices));
}

Play PlayOf(const GameTree& tree, const JointStrategy& s) {
  CheckStrategy(tree, s);
  Play play;
  NodeIndex u = tree.root();
  play.path.push_back(u);
  while (!tree.IsLeaf(u)) {
    u = tree.Children(u)[s.Choice(u)].node;
    play.path.push_back(u);
  }
  play.leaf = u;
  play.outcome = tree.Payoffs(u);
  return play;
}

GameTree Subgame(const GameTree& tree, NodeIndex w) {
  if (w < 0 || w >= tree.num_nodes()) {
    throw GameError(ErrorCode::kNoSuchNode, "node index " + std::to_string(w));
  }
  return GameTree(tree.num_players(), tree.ToSpec(w));
}

GameTree Subgame(const GameTree& tree, std::string_view path) {
  auto w = tree.Find(path);
  if (!w) throw GameError(ErrorCode::kNoSuchNode, "no node '" + std::string(path) + "'");
  return Subgame(tree, *w);
}

JointStrategy Restrict(const GameTree& tree, const JointStrategy& s, NodeIndex w) {
  return JointStrategy(
      std::vector<int>(s.choices().begin() + w, s.choices().begin() + tree.SubtreeEnd(w)));
}

int Rank(const GameTree& tree) {
  // Preorder arena: children come after parents, so a reverse sweep is
  // bottom-up.
  std::vector<int> rank(tree.num_nodes(), 0);
  for (NodeIndex u = tree.num_nodes() - 1; u >= 0; --u) {
    for (const auto& child : tree.Children(u)) {
      rank[u] = std::max(rank[u], rank[child.node] + 1);
    }
  }
  return rank[tree.root()];
}

BigInt JointStrategyCount(const GameTree& tree) {
  BigInt count = 1;
  for (NodeIndex u : tree.InternalNodes()) count *= tree.Children(u).size();
  return count;
}

BigInt StrategyCount(const GameTree& tree, int player, NodeIndex within) {
  BigInt count = 1;
  for (NodeIndex u = within; u < tree.SubtreeEnd(within); ++u) {
    if (!tree.IsLeaf(u) && tree.Turn(u) == player) count *= tree.Children(u).size();
  }
  return count;
}

}  // namespace spe
