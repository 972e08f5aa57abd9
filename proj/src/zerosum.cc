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

#include "spe/zerosum.h"

#include <functional>

#include "internal.h"

namespace spe {
namespace {

void RequireTwoPlayers(const GameTree& tree) {
  if (tree.num_players() != 2) {
    throw GameError(ErrorCode::kNotTwoPlayer,
                    "game has " + std::to_string(tree.num_players()) + " players");
  }
}

bool LeavesWithin(const GameTree& tree, const OutcomeScale& scale, bool allow_draw) {
  RequireTwoPlayers(tree);
  for (NodeIndex z : tree.Leaves()) {
    const PayoffVector& p = tree.Payoffs(z);
    if (p[1] != -p[0]) return false;
    if (p[0] == scale.win || p[0] == scale.lose) continue;
    if (allow_draw && p[0] == scale.draw) continue;
    return false;
  }
  return true;
}

ZeroSumShape RequireShape(const GameTree& tree, const OutcomeScale& scale) {
  const ZeroSumShape shape = DetectShape(tree, scale);
  if (shape == ZeroSumShape::kNone) {
    throw GameError(ErrorCode::kNotZeroSumShape,
                    "leaves are not all win, lose or draw outcomes of a zero-sum game");
  }
  return shape;
}

// W(u): strategies of `player` on T^u guaranteeing the threshold in G^u.
std::vector<BigInt> GuaranteeTable(const GameTree& tree, int player, const Rational& threshold) {
  std::vector<BigInt> good(tree.num_nodes());
  std::vector<BigInt> free(tree.num_nodes());
  for (NodeIndex u = tree.num_nodes() - 1; u >= 0; --u) {
    if (tree.IsLeaf(u)) {
      good[u] = tree.Payoffs(u)[player] >= threshold ? 1 : 0;
      free[u] = 1;
      continue;
    }
    const auto children = tree.Children(u);
    BigInt all_free = 1;
    for (const auto& child : children) all_free *= free[child.node];
    if (tree.Turn(u) == player) {
      free[u] = all_free * children.size();
      good[u] = 0;
      for (const auto& child : children)
        good[u] += good[child.node] * (all_free / free[child.node]);
    } else {
      free[u] = all_free;
      good[u] = 1;
      for (const auto& child : children) good[u] *= good[child.node];
    }
  }
  return good;
}

class GuaranteeEnumerator {
 public:
  using Continuation = std::function<bool()>;

  GuaranteeEnumerator(const GameTree& tree, int player, const Rational& threshold)
      : tree_(tree), player_(player), good_(GuaranteeTable(tree, player, threshold)) {
    strategy_.player = player;
    strategy_.choices.assign(tree.num_nodes(), kNoChoice);
    for (NodeIndex u : tree.InternalNodes()) {
      if (tree.Turn(u) == player) strategy_.choices[u] = 0;
    }
  }

  void Run(const std::function<bool(const PlayerStrategy&)>& visit) {
    if (good_[tree_.root()] == 0) return;
    Good(tree_.root(), [&] { return visit(strategy_); });
  }

 private:
  bool Good(NodeIndex u, const Continuation& next) {
    if (tree_.IsLeaf(u)) return next();
    const auto children = tree_.Children(u);
    if (tree_.Turn(u) != player_) return Product(children, -1, 0, next);
    for (int j = 0; j < static_cast<int>(children.size()); ++j) {
      if (good_[children[j].node] == 0) continue;
      strategy_.choices[u] = j;
      if (!Product(children, j, 0, next)) return false;
    }
    return true;
  }

  // Children in order; the `required` child (or all, when -1) must
  // guarantee, the others range over every assignment.
  bool Product(std::span<const GameTree::Child> children, int required, int m,
               const Continuation& next) {
    if (m == static_cast<int>(children.size())) return next();
    auto rest = [&] { return Product(children, required, m + 1, next); };
    if (required < 0 || required == m) return Good(children[m].node, rest);
    return Free(children[m].node, rest);
  }

  bool Free(NodeIndex u, const Continuation& next) {
    std::vector<NodeIndex> owned;
    for (NodeIndex v = u; v < tree_.SubtreeEnd(u); ++v) {
      if (!tree_.IsLeaf(v) && tree_.Turn(v) == player_) owned.push_back(v);
    }
    for (NodeIndex v : owned) strategy_.choices[v] = 0;
    for (;;) {
      if (!next()) return false;
      auto it = owned.rbegin();
      for (; it != owned.rend(); ++it) {
        if (++strategy_.choices[*it] < static_cast<int>(tree_.Children(*it).size())) break;
        strategy_.choices[*it] = 0;
      }
      if (it == owned.rend()) return true;
    }
  }

  const GameTree& tree_;
  int player_;
  std::vector<BigInt> good_;
  PlayerStrategy strategy_;
};

// Whether the fixed strategy of `player` guarantees the threshold from each
// node on.
std::vector<char> GuaranteedFrom(const GameTree& tree, const JointStrategy& s, int player,
                                 const Rational& threshold) {
  std::vector<char> ok(tree.num_nodes(), 0);
  for (NodeIndex u = tree.num_nodes() - 1; u >= 0; --u) {
    if (tree.IsLeaf(u)) {
      ok[u] = tree.Payoffs(u)[player] >= threshold;
    } else if (tree.Turn(u) == player) {
      ok[u] = ok[tree.Children(u)[s.Choice(u)].node];
    } else {
      ok[u] = 1;
      for (const auto& child : tree.Children(u)) ok[u] = ok[u] && ok[child.node];
    }
  }
  return ok;
}

StrategyClass MakeClass(const GameTree& counted_on, const GameTree& original, int player,
                        const Rational& counted_threshold, const Rational& original_threshold,
                        std::uint64_t sample_cap, const OracleConfig& config) {
  StrategyClass result;
  result.count = GuaranteeCount(counted_on, player, counted_threshold);
  result.sample = GuaranteeSample(counted_on, player, counted_threshold, sample_cap);
  result.verified = StrategyCount(original, 1 - player) <= config.cap;
  if (result.verified) {
    for (const PlayerStrategy& strategy : result.sample) {
      if (!GuaranteesByExhaustion(original, strategy, original_threshold, config)) {
        throw GameError(ErrorCode::kInternal, "sampled strategy fails exhaustive check");
      }
    }
  }
  return result;
}

}  // namespace

std::string_view NodeClassName(NodeClass c) {
  switch (c) {
    case NodeClass::kWin1:
      return "WIN_1";
    case NodeClass::kWin2:
      return "WIN_2";
    case NodeClass::kDraw:
      return "DRAW";
  }
  return "?";
}

bool CheckWinOrLose(const GameTree& tree, const OutcomeScale& scale) {
  return LeavesWithin(tree, scale, false);
}

bool CheckChessLike(const GameTree& tree, const OutcomeScale& scale) {
  return LeavesWithin(tree, scale, true);
}

ZeroSumShape DetectShape(const GameTree& tree, const OutcomeScale& scale) {
  if (CheckWinOrLose(tree, scale)) return ZeroSumShape::kWinOrLose;
  if (CheckChessLike(tree, scale)) return ZeroSumShape::kChessLike;
  return ZeroSumShape::kNone;
}

std::vector<NodeClass> ClassifyNodes(const GameTree& tree, const OutcomeScale& scale) {
  RequireShape(tree, scale);
  std::vector<NodeClass> cls(tree.num_nodes());
  for (NodeIndex u = tree.num_nodes() - 1; u >= 0; --u) {
    if (tree.IsLeaf(u)) {
      const Rational& p1 = tree.Payoffs(u)[0];
      cls[u] = p1 == scale.win    ? NodeClass::kWin1
               : p1 == scale.lose ? NodeClass::kWin2
                                  : NodeClass::kDraw;
      continue;
    }
    const NodeClass mine = tree.Turn(u) == 0 ? NodeClass::kWin1 : NodeClass::kWin2;
    const NodeClass theirs = tree.Turn(u) == 0 ? NodeClass::kWin2 : NodeClass::kWin1;
    bool any_win = false;
    bool any_draw = false;
    for (const auto& child : tree.Children(u)) {
      any_win = any_win || cls[child.node] == mine;
      any_draw = any_draw || cls[child.node] == NodeClass::kDraw;
    }
    cls[u] = any_win ? mine : any_draw ? NodeClass::kDraw : theirs;
  }
  return cls;
}

BigInt GuaranteeCount(const GameTree& tree, int player, const Rational& threshold) {
  return GuaranteeTable(tree, player, threshold)[tree.root()];
}

std::vector<PlayerStrategy> GuaranteeSample(const GameTree& tree, int player,
                                            const Rational& threshold, std::uint64_t cap) {
  std::vector<PlayerStrategy> sample;
  if (cap == 0) return sample;
  GuaranteeEnumerator enumerator(tree, player, threshold);
  enumerator.Run([&](const PlayerStrategy& strategy) {
    sample.push_back(strategy);
    return sample.size() < cap;
  });
  return sample;
}

bool GuaranteesByExhaustion(const GameTree& tree, const PlayerStrategy& strategy,
                            const Rational& threshold, const OracleConfig& config) {
  BigInt opponents = 1;
  std::vector<NodeIndex> others;
  JointStrategy s(strategy.choices);
  for (NodeIndex u : tree.InternalNodes()) {
    if (tree.Turn(u) != strategy.player) {
      others.push_back(u);
      opponents *= tree.Children(u).size();
      s.SetChoice(u, 0);
    }
  }
  if (opponents > config.cap) {
    throw GameError(ErrorCode::kOracleCapExceeded,
                    "opponent strategy set has " + opponents.str() + " elements");
  }
  CheckStrategy(tree, s);
  do {
    if (tree.Payoffs(LeafFrom(tree, s, tree.root()))[strategy.player] < threshold) return false;
  } while (internal::AdvanceOdometer(tree, others, s));
  return true;
}

void ForEachPlayerStrategy(const GameTree& tree, int player,
                           const std::function<bool(const PlayerStrategy&)>& visit,
                           const OracleConfig& config) {
  const BigInt count = StrategyCount(tree, player);
  if (count > config.cap) {
    throw GameError(ErrorCode::kOracleCapExceeded, "strategy set has " + count.str() + " elements");
  }
  std::vector<NodeIndex> owned;
  for (NodeIndex u : tree.InternalNodes()) {
    if (tree.Turn(u) == player) owned.push_back(u);
  }
  JointStrategy s = FirstChildStrategy(tree);
  PlayerStrategy mine{player, std::vector<int>(tree.num_nodes(), kNoChoice)};
  do {
    for (NodeIndex u : owned) mine.choices[u] = s.Choice(u);
    if (!visit(mine)) return;
  } while (internal::AdvanceOdometer(tree, owned, s));
}

GameTree RelabelDraws(const GameTree& tree, int winner, const OutcomeScale& scale) {
  std::function<void(NodeSpec&)> relabel = [&](NodeSpec& spec) {
    if (spec.is_leaf) {
      if (spec.payoffs.size() == 2 && spec.payoffs[0] == scale.draw) {
        const Rational p1 = winner == 0 ? scale.win : scale.lose;
        spec.payoffs = PayoffVector{p1, Rational(-p1)};
      }
      return;
    }
    for (auto& [label, child] : spec.children) relabel(child);
  };
  NodeSpec root = tree.ToSpec(tree.root());
  relabel(root);
  return GameTree(tree.num_players(), root);
}

StrategyClassSets ComputeStrategyClassSets(const GameTree& tree, std::uint64_t sample_cap,
                                           const OutcomeScale& scale, const OracleConfig& config) {
  StrategyClassSets sets;
  sets.shape = RequireShape(tree, scale);
  for (int i = 0; i < 2; ++i) {
    sets.win[i] = MakeClass(tree, tree, i, scale.WinFor(i), scale.WinFor(i), sample_cap, config);
  }
  for (int i = 0; i < 2; ++i) {
    const GameTree relabeled = RelabelDraws(tree, i, scale);
    sets.draw[i] =
        MakeClass(relabeled, tree, i, scale.WinFor(i), scale.DrawFor(i), sample_cap, config);
  }
  return sets;
}

NeDescription NeSetZeroSum(const GameTree& tree, const OutcomeScale& scale) {
  const ZeroSumShape shape = RequireShape(tree, scale);
  for (int i = 0; i < 2; ++i) {
    BigInt wins = GuaranteeCount(tree, i, scale.WinFor(i));
    if (wins != 0) {
      return NeDescription{NeForm::kWinnerTimesAll, i, wins * StrategyCount(tree, 1 - i)};
    }
  }
  if (shape == ZeroSumShape::kWinOrLose) {
    throw GameError(ErrorCode::kInternal, "win-or-lose game without a winner");
  }
  BigInt draws = 1;
  for (int i = 0; i < 2; ++i) {
    draws *= GuaranteeCount(RelabelDraws(tree, i, scale), i, scale.WinFor(i));
  }
  return NeDescription{NeForm::kDrawTimesDraw, -1, draws};
}

bool SpeCheckZeroSum(const GameTree& tree, const JointStrategy& s, const OutcomeScale& scale) {
  const std::vector<NodeClass> cls = ClassifyNodes(tree, scale);
  CheckStrategy(tree, s);
  std::array<std::vector<char>, 2> wins;
  std::array<std::vector<char>, 2> draws;
  for (int i = 0; i < 2; ++i) {
    wins[i] = GuaranteedFrom(tree, s, i, scale.WinFor(i));
    draws[i] = GuaranteedFrom(tree, s, i, scale.DrawFor(i));
  }
  for (NodeIndex w : tree.InternalNodes()) {
    switch (cls[w]) {
      case NodeClass::kWin1:
        if (!wins[0][w]) return false;
        break;
      case NodeClass::kWin2:
        if (!wins[1][w]) return false;
        break;
      case NodeClass::kDraw:
        if (!draws[0][w] || !draws[1][w]) return false;
        break;
    }
  }
  return true;
}

}  // namespace spe
