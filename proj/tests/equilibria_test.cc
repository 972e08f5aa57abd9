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

#include "doctest.h"
#include "spe/generators.h"
#include "test_util.h"

namespace spe {
namespace {

using testing::D;
using testing::L;

// Player 1 claims `claim`; player 2 accepts claims up to `accept_up_to`.
JointStrategy Ultimatum(const GameTree& tree, int grid_max, int claim, int accept_up_to) {
  std::vector<std::pair<std::string, std::string>> picks = {{"", std::to_string(claim)}};
  for (int k = 0; k <= grid_max; ++k) {
    picks.emplace_back(std::to_string(k), k <= accept_up_to ? "A" : "R");
  }
  return testing::Strategy(tree, picks);
}

TEST_CASE("best responses") {
  const GameTree single(2, L({0, 0}));
  const JointStrategy none = FirstChildStrategy(single);
  CHECK(IsBestResponse(single, none, 0));
  CHECK(IsBestResponse(single, none, 1));

  const GameTree tree = GenUltimatum(2, 2);
  CHECK(IsBestResponse(tree, Ultimatum(tree, 2, 2, 2), 0));
  CHECK_FALSE(IsBestResponse(tree, Ultimatum(tree, 2, 0, 2), 0));

  const auto improvement = FindImprovement(tree, Ultimatum(tree, 2, 0, 2), 0);
  REQUIRE(improvement.has_value());
  CHECK(tree.Path(improvement->leaf_before) == "0/A");
  CHECK(tree.Payoffs(improvement->leaf_after)[0] > 0);
  CHECK(PlayOf(tree, improvement->deviation).leaf == improvement->leaf_after);
  // The deviation only touches the deviator's nodes.
  for (NodeIndex u : tree.InternalNodes()) {
    if (tree.Turn(u) != 0)
      CHECK(improvement->deviation.Choice(u) == Ultimatum(tree, 2, 0, 2).Choice(u));
  }
}

TEST_CASE("Nash equilibria of the ultimatum game") {
  const GameTree tree = GenUltimatum(100, 100);
  CHECK(IsNash(tree, Ultimatum(tree, 100, 100, -1)));
  CHECK(IsNash(tree, Ultimatum(tree, 100, 50, 50)));
  CHECK(IsNash(tree, Ultimatum(tree, 100, 100, 100)));
  CHECK_FALSE(IsNash(tree, Ultimatum(tree, 100, 30, 50)));

  const GameTree small = GenUltimatum(2, 2);
  CHECK_FALSE(IsNash(small, Ultimatum(small, 2, 0, 2)));
}

TEST_CASE("SPE by definition") {
  const GameTree tree = GenUltimatum(100, 100);
  CHECK(IsSpeByDefinition(tree, Ultimatum(tree, 100, 100, 100)));
  CHECK_FALSE(IsSpeByDefinition(tree, Ultimatum(tree, 100, 100, -1)));
  CHECK_FALSE(IsSpeByDefinition(tree, Ultimatum(tree, 100, 50, 50)));
  const GameTree single(2, L({0, 0}));
  CHECK(IsSpeByDefinition(single, FirstChildStrategy(single)));
}

TEST_CASE("one-deviation witnesses") {
  const GameTree tree = GenUltimatum(100, 100);
  CHECK_FALSE(OneDeviationCheck(tree, Ultimatum(tree, 100, 100, 100)).has_value());

  const auto witness = OneDeviationCheck(tree, Ultimatum(tree, 100, 50, 50));
  REQUIRE(witness.has_value());
  CHECK(tree.Path(witness->node) == "51");
  CHECK(witness->mover == 1);
  CHECK(tree.Children(witness->node)[witness->chosen_child].label == "R");
  CHECK(tree.Children(witness->node)[witness->deviating_child].label == "A");
  CHECK(witness->payoff_at_choice == 0);
  CHECK(witness->payoff_at_deviation == 49);

  const GameTree single(2, L({0, 0}));
  CHECK_FALSE(OneDeviationCheck(single, FirstChildStrategy(single)).has_value());
}

TEST_CASE("one-deviation check agrees with the definition") {
  for (RandomShape shape : {RandomShape::kAny, RandomShape::kZeroSum3Outcome}) {
    for (const GameTree& tree : testing::SmallRandomGames(30, shape, 300, 500)) {
      const std::vector<JointStrategy> all = testing::AllJointStrategies(tree);
      for (const JointStrategy& s : all) {
        const auto witness = OneDeviationCheck(tree, s);
        const bool naive = [&] {
          for (NodeIndex w : tree.InternalNodes()) {
            if (!testing::NaiveNashAt(tree, s, w, all)) return false;
          }
          return true;
        }();
        REQUIRE(naive == IsSpeByDefinition(tree, s));
        REQUIRE(naive == !witness.has_value());
        if (witness) {
          CHECK(witness->payoff_at_deviation > witness->payoff_at_choice);
          CHECK(witness->deviating_child < static_cast<int>(tree.Children(witness->node).size()));
        } else {
          CHECK(IsNash(tree, s));
        }
      }
    }
  }
}

TEST_CASE("brute-force sets match naive enumeration") {
  for (const GameTree& tree : testing::SmallRandomGames(25, RandomShape::kAny, 400, 300)) {
    const std::vector<JointStrategy> all = testing::AllJointStrategies(tree);
    CHECK(BruteForceSpeSet(tree) == testing::NaiveSpeSet(tree));
    std::vector<JointStrategy> nash;
    for (const JointStrategy& s : all) {
      if (testing::NaiveNashAt(tree, s, tree.root(), all)) nash.push_back(s);
    }
    CHECK(BruteForceNashSet(tree) == nash);
  }
}

TEST_CASE("joint strategies are visited in lexicographic order") {
  const GameTree tree = GenUltimatum(2, 2);
  std::vector<JointStrategy> seen;
  ForEachJointStrategy(tree, [&](const JointStrategy& s) {
    seen.push_back(s);
    return true;
  });
  CHECK(seen == testing::AllJointStrategies(tree));
  CHECK(std::is_sorted(seen.begin(), seen.end()));

  int visits = 0;
  ForEachJointStrategy(tree, [&](const JointStrategy&) { return ++visits < 5; });
  CHECK(visits == 5);
}

TEST_CASE("oracle caps are explicit errors") {
  const GameTree tree = GenUltimatum(2, 2);
  const OracleConfig tight{10};
  try {
    ForEachJointStrategy(tree, [](const JointStrategy&) { return true; }, tight);
    FAIL("expected OracleCapExceeded");
  } catch (const GameError& e) {
    CHECK(e.code() == ErrorCode::kOracleCapExceeded);
  }
  CHECK_THROWS_AS(BruteForceNashSet(tree, tight), GameError);
  CHECK_THROWS_AS(IsNash(tree, Ultimatum(tree, 2, 2, 2), OracleConfig{2}), GameError);
  CHECK_NOTHROW(IsNash(tree, Ultimatum(tree, 2, 2, 2), OracleConfig{3}));
}

TEST_CASE("three-player ties") {
  const GameTree tree = testing::LoadFixture("three_player.json");
  const std::vector<JointStrategy> spe = BruteForceSpeSet(tree);
  CHECK(spe.size() == 4);
  CHECK(spe == testing::NaiveSpeSet(tree));
}

}  // namespace
}  // namespace spe
