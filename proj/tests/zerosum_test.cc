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

#include "doctest.h"
#include "spe/generators.h"
#include "spe/spe_solver.h"
#include "test_util.h"

namespace spe {
namespace {

using testing::D;
using testing::L;
using testing::Tree;

// All strategies of `player` that keep their payoff at least `threshold`
// against every joint strategy, by filtering the full joint strategy set.
std::size_t NaiveGuaranteeCount(const GameTree& tree, int player, const Rational& threshold) {
  const std::vector<JointStrategy> all = testing::AllJointStrategies(tree);
  std::set<std::vector<int>> good;
  std::set<std::vector<int>> bad;
  for (const JointStrategy& s : all) {
    std::vector<int> mine;
    for (NodeIndex u : tree.InternalNodes()) {
      if (tree.Turn(u) == player) mine.push_back(s.Choice(u));
    }
    const bool ok = tree.Payoffs(testing::Follow(tree, s, 0))[player] >= threshold;
    (ok ? good : bad).insert(mine);
  }
  std::size_t count = 0;
  for (const auto& mine : good) count += !bad.contains(mine);
  return count;
}

TEST_CASE("shape detection") {
  CHECK(CheckWinOrLose(GameTree(2, L({1, -1}))));
  CHECK_FALSE(CheckWinOrLose(GameTree(2, L({0, 0}))));
  CHECK(CheckChessLike(GameTree(2, L({0, 0}))));
  CHECK_FALSE(CheckWinOrLose(GameTree(2, L({2, -2}))));
  CHECK_FALSE(CheckChessLike(GameTree(2, L({2, -2}))));
  CHECK(DetectShape(GameTree(2, L({1, -1}))) == ZeroSumShape::kWinOrLose);
  CHECK(DetectShape(GameTree(2, L({1, 1}))) == ZeroSumShape::kNone);
  try {
    CheckChessLike(GameTree(3, L({0, 0, 0})));
    FAIL("expected NotTwoPlayer");
  } catch (const GameError& e) {
    CHECK(e.code() == ErrorCode::kNotTwoPlayer);
  }
}

TEST_CASE("node classes") {
  const GameTree pick = Tree(2, D(1, {{"w", L({1, -1})}, {"l", L({-1, 1})}}));
  CHECK(ClassifyNodes(pick)[0] == NodeClass::kWin1);
  const GameTree draw = testing::LoadFixture("draw_choice.json");
  CHECK(ClassifyNodes(draw)[0] == NodeClass::kDraw);
  const GameTree trapped = Tree(2, D(1, {{"x", D(2, {{"a", L({1, -1})}, {"b", L({1, -1})}})}}));
  CHECK(ClassifyNodes(trapped)[0] == NodeClass::kWin1);
  try {
    ClassifyNodes(GenUltimatum(2, 2));
    FAIL("expected NotZeroSumShape");
  } catch (const GameError& e) {
    CHECK(e.code() == ErrorCode::kNotZeroSumShape);
  }
}

TEST_CASE("classes are invariant under order-preserving relabeling") {
  const OutcomeScale shifted{7, Rational(1, 2), -3};
  for (const GameTree& tree : testing::SmallRandomGames(30, RandomShape::kZeroSum3Outcome, 10)) {
    std::function<NodeSpec(const NodeSpec&)> relabel = [&](const NodeSpec& spec) {
      if (spec.is_leaf) {
        const Rational& p = spec.payoffs[0];
        const Rational q = p == 1 ? shifted.win : p == 0 ? shifted.draw : shifted.lose;
        return NodeSpec::Leaf(PayoffVector{q, -q});
      }
      NodeSpec copy = spec;
      for (auto& [label, child] : copy.children) child = relabel(child);
      return copy;
    };
    const GameTree moved(2, relabel(tree.ToSpec(0)));
    CHECK(ClassifyNodes(moved, shifted) == ClassifyNodes(tree));
    CHECK(ComputeStrategyClassSets(moved, 0, shifted).draw[1].count ==
          ComputeStrategyClassSets(tree, 0).draw[1].count);
  }
}

TEST_CASE("strategy class sets on small games") {
  const GameTree pick = Tree(2, D(1, {{"w", L({1, -1})}, {"l", L({-1, 1})}}));
  StrategyClassSets sets = ComputeStrategyClassSets(pick);
  CHECK(sets.shape == ZeroSumShape::kWinOrLose);
  CHECK(sets.win[0].count == 1);
  CHECK(sets.win[1].count == 0);
  REQUIRE(sets.win[0].sample.size() == 1);
  CHECK(sets.win[0].sample[0].choices[0] == 0);
  CHECK(sets.win[0].verified);

  sets = ComputeStrategyClassSets(GameTree(2, L({0, 0})));
  CHECK(sets.shape == ZeroSumShape::kChessLike);
  CHECK(sets.win[0].count == 0);
  CHECK(sets.win[1].count == 0);
  CHECK(sets.draw[0].count == 1);
  CHECK(sets.draw[1].count == 1);
}

TEST_CASE("guarantee counts match exhaustive filtering") {
  for (RandomShape shape : {RandomShape::kZeroSum2Outcome, RandomShape::kZeroSum3Outcome}) {
    for (const GameTree& tree : testing::SmallRandomGames(40, shape, 50, 3000)) {
      const StrategyClassSets sets = ComputeStrategyClassSets(tree, 4);
      const OutcomeScale scale;
      for (int i = 0; i < 2; ++i) {
        CHECK(sets.win[i].count == NaiveGuaranteeCount(tree, i, scale.WinFor(i)));
        CHECK(GuaranteeCount(tree, i, scale.WinFor(i)) == sets.win[i].count);
        CHECK(sets.win[i].verified);
        for (const PlayerStrategy& p : sets.win[i].sample) {
          CHECK(GuaranteesByExhaustion(tree, p, scale.WinFor(i)));
        }
        if (shape == RandomShape::kZeroSum3Outcome) {
          CHECK(sets.draw[i].count == NaiveGuaranteeCount(tree, i, scale.DrawFor(i)));
        }
      }
    }
  }
}

TEST_CASE("Zermelo and the trichotomy") {
  for (const GameTree& tree :
       testing::SmallRandomGames(60, RandomShape::kZeroSum2Outcome, 70, 1'000'000)) {
    const StrategyClassSets sets = ComputeStrategyClassSets(tree, 0);
    CHECK((sets.win[0].count > 0) != (sets.win[1].count > 0));
  }
  for (const GameTree& tree :
       testing::SmallRandomGames(60, RandomShape::kZeroSum3Outcome, 80, 1'000'000)) {
    const StrategyClassSets sets = ComputeStrategyClassSets(tree, 0);
    const int holding = (sets.win[0].count > 0) + (sets.win[1].count > 0) +
                        (sets.draw[0].count > 0 && sets.draw[1].count > 0);
    CHECK(holding == 1);
    for (int i = 0; i < 2; ++i) CHECK(sets.win[i].count <= sets.draw[i].count);
  }
}

TEST_CASE("relabeled draws") {
  for (const GameTree& tree :
       testing::SmallRandomGames(40, RandomShape::kZeroSum3Outcome, 90, 1'000'000)) {
    const OutcomeScale scale;
    const GameTree g1 = RelabelDraws(tree, 1);
    const GameTree g2 = RelabelDraws(tree, 0);
    CHECK(CheckWinOrLose(g1));
    CHECK(GuaranteeCount(g1, 1, scale.WinFor(1)) == GuaranteeCount(tree, 1, scale.DrawFor(1)));
    CHECK(GuaranteeCount(g2, 0, scale.WinFor(0)) == GuaranteeCount(tree, 0, scale.DrawFor(0)));
  }
}

TEST_CASE("NE closed forms") {
  const GameTree pick = Tree(2, D(1, {{"w", L({1, -1})}, {"l", L({-1, 1})}}));
  NeDescription ne = NeSetZeroSum(pick);
  CHECK(ne.form == NeForm::kWinnerTimesAll);
  CHECK(ne.winner == 0);
  CHECK(ne.count == 1);

  ne = NeSetZeroSum(GameTree(2, L({0, 0})));
  CHECK(ne.form == NeForm::kDrawTimesDraw);
  CHECK(ne.count == 1);

  for (RandomShape shape : {RandomShape::kZeroSum2Outcome, RandomShape::kZeroSum3Outcome}) {
    for (const GameTree& tree : testing::SmallRandomGames(40, shape, 110, 3000)) {
      const std::vector<JointStrategy> all = testing::AllJointStrategies(tree);
      std::size_t nash = 0;
      for (const JointStrategy& s : all) nash += testing::NaiveNashAt(tree, s, 0, all);
      CHECK(NeSetZeroSum(tree).count == nash);
    }
  }
}

TEST_CASE("zero-sum SPE check") {
  const GameTree pick = Tree(2, D(1, {{"w", L({1, -1})}, {"l", L({-1, 1})}}));
  CHECK(SpeCheckZeroSum(pick, testing::Strategy(pick, {{"", "w"}})));
  CHECK_FALSE(SpeCheckZeroSum(pick, testing::Strategy(pick, {{"", "l"}})));

  for (RandomShape shape : {RandomShape::kZeroSum2Outcome, RandomShape::kZeroSum3Outcome}) {
    for (const GameTree& tree : testing::SmallRandomGames(40, shape, 130, 3000)) {
      for (const JointStrategy& s : testing::AllJointStrategies(tree)) {
        CHECK(SpeCheckZeroSum(tree, s) == !OneDeviationCheck(tree, s).has_value());
      }
    }
  }
}

TEST_CASE("the winner may differ from subgame to subgame") {
  const GameTree tree = testing::LoadFixture("quantifier_order.json");
  const std::vector<NodeClass> classes = ClassifyNodes(tree);
  CHECK(classes[tree.root()] == NodeClass::kWin1);
  CHECK(classes[*tree.Find("R")] == NodeClass::kWin2);

  const SpeSet spe = SpeEnumerate(tree);
  REQUIRE(spe.count == 1);
  const JointStrategy& s = spe.sample[0];
  CHECK(SpeCheckZeroSum(tree, s));
  // Player 1's part wins the whole game but player 2's part is the one that
  // wins the subgame at R, so no single player wins every subgame.
  for (int i = 0; i < 2; ++i) {
    bool wins_everywhere = true;
    for (NodeIndex w : tree.InternalNodes()) {
      const GameTree sub = Subgame(tree, w);
      PlayerStrategy mine{i, std::vector<int>(sub.num_nodes(), kNoChoice)};
      const JointStrategy restricted = Restrict(tree, s, w);
      for (NodeIndex u : sub.InternalNodes()) {
        if (sub.Turn(u) == i) mine.choices[u] = restricted.Choice(u);
      }
      wins_everywhere =
          wins_everywhere && GuaranteesByExhaustion(sub, mine, OutcomeScale().WinFor(i));
    }
    CHECK_FALSE(wins_everywhere);
  }
}

TEST_CASE("chess-like fixture") {
  const GameTree tree = testing::LoadFixture("chess_like_11.json");
  REQUIRE(DetectShape(tree) == ZeroSumShape::kChessLike);
  const StrategyClassSets sets = ComputeStrategyClassSets(tree, 0);
  for (int i = 0; i < 2; ++i) {
    CHECK(sets.win[i].count == NaiveGuaranteeCount(tree, i, OutcomeScale().WinFor(i)));
    CHECK(sets.draw[i].count == NaiveGuaranteeCount(tree, i, OutcomeScale().DrawFor(i)));
  }
}

}  // namespace
}  // namespace spe
