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

#ifndef SPE_GAME_TREE_H_
#define SPE_GAME_TREE_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spe/errors.h"
#include "spe/rational.h"

// Finite extensive games with perfect information.
//
// Trees are finite by construction. Continuum examples (a claim drawn from
// a real interval, or infinitely many first moves) are represented by their
// finite grids and truncations; results on those objects are statements about
// the discretized game only.
namespace spe {

using NodeIndex = int;
inline constexpr int kNoChoice = -1;

// Tree description before flattening. Parsers and generators build these.
struct NodeSpec {
  bool is_leaf = true;
  int player = 0;  // 0-based mover, ignored at leaves
  std::vector<std::pair<std::string, NodeSpec>> children;
  PayoffVector payoffs;

  static NodeSpec Leaf(PayoffVector payoffs);
  static NodeSpec Decision(int player, std::vector<std::pair<std::string, NodeSpec>> children);
};

// Immutable game tree stored as a preorder arena. The subtree of node u
// occupies the index range [u, SubtreeEnd(u)), so a subgame is a slice.
class GameTree {
 public:
  struct Child {
    std::string label;
    NodeIndex node;
  };

  // Flattens without validating; see Validate().
  GameTree(int num_players, const NodeSpec& root);

  int num_players() const { return num_players_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  NodeIndex root() const { return 0; }

  bool IsLeaf(NodeIndex u) const { return nodes_[u].is_leaf; }
  // 0-based; meaningless at leaves.
  int Turn(NodeIndex u) const { return nodes_[u].player; }
  std::span<const Child> Children(NodeIndex u) const { return nodes_[u].children; }
  const PayoffVector& Payoffs(NodeIndex u) const { return nodes_[u].payoffs; }
  NodeIndex Parent(NodeIndex u) const { return nodes_[u].parent; }
  NodeIndex SubtreeEnd(NodeIndex u) const { return nodes_[u].subtree_end; }
  bool InSubtree(NodeIndex ancestor, NodeIndex u) const {
    return u >= ancestor && u < SubtreeEnd(ancestor);
  }
  int Depth(NodeIndex u) const { return nodes_[u].depth; }

  // Labels from the root joined by "/"; the root is "".
  const std::string& Path(NodeIndex u) const { return nodes_[u].path; }
  std::optional<NodeIndex> Find(std::string_view path) const;
  // Position of `label` among the children of u.
  std::optional<int> ChildPosition(NodeIndex u, std::string_view label) const;

  const std::vector<NodeIndex>& Leaves() const { return leaves_; }
  const std::vector<NodeIndex>& InternalNodes() const { return internal_; }

  // Dense rank of p_player(leaf) among all leaf payoffs of that player.
  // Equal payoffs share a rank; larger payoff, larger rank. Only defined
  // when every leaf has exactly num_players() payoffs.
  int PayoffRank(int player, NodeIndex leaf) const {
    return ranks_[static_cast<std::size_t>(player) * nodes_.size() + leaf];
  }

  NodeSpec ToSpec(NodeIndex u) const;

 private:
  struct Node {
    bool is_leaf;
    int player;
    std::vector<Child> children;
    PayoffVector payoffs;
    NodeIndex parent;
    NodeIndex subtree_end;
    int depth;
    std::string path;
  };

  NodeIndex Flatten(const NodeSpec& spec, NodeIndex parent, int depth, std::string path);
  void ComputeRanks();

  int num_players_;
  std::vector<Node> nodes_;
  std::vector<NodeIndex> leaves_;
  std::vector<NodeIndex> internal_;
  std::unordered_map<std::string, NodeIndex> by_path_;
  std::vector<int> ranks_;
};

struct ValidationIssue {
  ErrorCode code;
  NodeIndex node;
  std::string path;
  std::string message;
};

// First violation in preorder, or nullopt for a well-formed tree.
std::optional<ValidationIssue> Validate(const GameTree& tree);
// Throws GameError carrying the issue's code.
void ValidateOrThrow(const GameTree& tree);

// The choice of a child at every internal node, indexed by NodeIndex and
// stored as a child position. Leaves hold kNoChoice. Ordering is
// lexicographic over internal nodes in preorder.
class JointStrategy {
 public:
  JointStrategy() = default;
  explicit JointStrategy(std::vector<int> choices) : choices_(std::move(choices)) {}

  int Choice(NodeIndex u) const { return choices_[u]; }
  void SetChoice(NodeIndex u, int position) { choices_[u] = position; }
  const std::vector<int>& choices() const { return choices_; }
  int size() const { return static_cast<int>(choices_.size()); }

  auto operator<=>(const JointStrategy&) const = default;

 private:
  std::vector<int> choices_;
};

// Throws InvalidStrategy unless s assigns a legal child to exactly the
// internal nodes of tree.
void CheckStrategy(const GameTree& tree, const JointStrategy& s);

// Every internal node picks its first child.
JointStrategy FirstChildStrategy(const GameTree& tree);

struct Play {
  std::vector<NodeIndex> path;
  NodeIndex leaf;
  PayoffVector outcome;
};

Play PlayOf(const GameTree& tree, const JointStrategy& s);

// Leaf reached from `from` when everyone follows s. No validation.
inline NodeIndex LeafFrom(const GameTree& tree, const JointStrategy& s, NodeIndex from) {
  NodeIndex u = from;
  while (!tree.IsLeaf(u)) u = tree.Children(u)[s.Choice(u)].node;
  return u;
}

GameTree Subgame(const GameTree& tree, NodeIndex w);
GameTree Subgame(const GameTree& tree, std::string_view path);
// s^w: the restriction of s to the subgame rooted at w.
JointStrategy Restrict(const GameTree& tree, const JointStrategy& s, NodeIndex w);

int Rank(const GameTree& tree);

// |S_1 x ... x S_n|: product of child counts over internal nodes.
BigInt JointStrategyCount(const GameTree& tree);
// |S_i|, optionally restricted to the subtree rooted at `within`.
BigInt StrategyCount(const GameTree& tree, int player, NodeIndex within = 0);

}  // namespace spe

#endif  // SPE_GAME_TREE_H_
