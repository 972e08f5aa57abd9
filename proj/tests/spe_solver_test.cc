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

#include "spe/spe_solver.h"

#include "doctest.h"
#include "spe/conditions.h"
#include "spe/generators.h"
#include "test_util.h"

namespace spe {
namespace {

using testing::L;

TEST_CASE("single leaf") {
  const GameTree tree(2, L({0, 0}));
  CHECK(SpeOutcomes(tree) == OutcomeSet{PayoffVector{0, 0}});
  CHECK(SpeCount(tree) == 1);
  CHECK(HasUniqueSpe(tree));
  const SpeSet set = SpeEnumerate(tree, 10);
  CHECK(set.count == 1);
  REQUIRE(set.sample.size() == 1);
  CHECK(set.sample[0].choices() == std::vector<int>{kNoChoice});
  CHECK_FALSE(set.truncated);
}

TEST_CASE("ultimatum grid 2") {
  const GameTree tree = GenUltimatum(2, 2);
  CHECK(SpeOutcomes(tree) == OutcomeSet{PayoffVector{1, 1}, PayoffVector{2, 0}});
  CHECK(SpeCount(tree) == 2);
  CHECK_FALSE(HasUniqueSpe(tree));

  const SpeSet set = SpeEnumerate(tree, 10);
  CHECK(set.count == 2);
  CHECK_FALSE(set.truncated);
  const std::vector<JointStrategy> expected = {
      testing::Strategy(tree, {{"", "1"}, {"0", "A"}, {"1", "A"}, {"2", "R"}}),
      testing::Strategy(tree, {{"", "2"}, {"0", "A"}, {"1", "A"}, {"2", "A"}}),
  };
  CHECK(set.sample == expected);
  CHECK(set.sample == testing::NaiveSpeSet(tree));
  for (const JointStrategy& s : set.sample) CHECK_FALSE(OneDeviationCheck(tree, s).has_value());

  const auto counts = SpeOutcomeCounts(tree);
  CHECK(counts.at(PayoffVector{1, 1}) == 1);
  CHECK(counts.at(PayoffVector{2, 0}) == 1);
}

TEST_CASE("ultimatum grid 100") {
  const GameTree tree = GenUltimatum(100, 100);
  CHECK(SpeOutcomes(tree) == OutcomeSet{PayoffVector{99, 1}, PayoffVector{100, 0}});
  CHECK(SpeCount(tree) == 2);
}

TEST_CASE("bargaining") {
  for (int k = 2; k <= 12; ++k) {
    const GameTree tree = GenBargaining(k);
    CHECK(SpeOutcomes(tree) == OutcomeSet{PayoffVector{50, 50}});
    CHECK(SpeCount(tree) == k - 1);
  }
  const SpeSet set = SpeEnumerate(GenBargaining(4));
  CHECK(set.sample == testing::NaiveSpeSet(GenBargaining(4)));
}

TEST_CASE("G(1, 4) on grid 2") {
  const GameTree tree = GenGAlpha(1, 4, 2);
  const std::vector<JointStrategy> oracle = BruteForceSpeSet(tree);
  CHECK(SpeCount(tree) == oracle.size());
  const SpeSet none = SpeEnumerate(tree, 0);
  CHECK(none.count == oracle.size());
  CHECK(none.sample.empty());
  CHECK(none.truncated);
  CHECK(SpeEnumerate(tree).sample == oracle);
  CHECK(SpeOutcomes(tree) == testing::OutcomesOf(tree, oracle));
}

TEST_CASE("truncated enumeration is a canonical prefix") {
  const GameTree tree = testing::LoadFixture("three_player.json");
  const SpeSet all = SpeEnumerate(tree);
  REQUIRE(all.count == 4);
  const SpeSet some = SpeEnumerate(tree, 3);
  CHECK(some.count == 4);
  CHECK(some.truncated);
  CHECK(std::equal(some.sample.begin(), some.sample.end(), all.sample.begin()));
  CHECK(SpeOutcomes(tree).size() == 3);
}

TEST_CASE("solver agrees with the naive oracle on random games") {
  for (int players : {1, 2, 3}) {
    for (const GameTree& tree :
         testing::SmallRandomGames(40, RandomShape::kAny, 500 + players * 1000, 400, players)) {
      const std::vector<JointStrategy> oracle = testing::NaiveSpeSet(tree);
      const SpeSet set = SpeEnumerate(tree);
      REQUIRE(set.sample == oracle);
      CHECK(set.count == oracle.size());
      CHECK(SpeCount(tree) == oracle.size());
      CHECK(SpeOutcomes(tree) == testing::OutcomesOf(tree, oracle));
      CHECK(SpeCount(tree) >= 1);

      BigInt total = 0;
      for (const auto& [outcome, count] : SpeOutcomeCounts(tree)) {
        std::size_t realized = 0;
        for (const JointStrategy& s : oracle) realized += PlayOf(tree, s).outcome == outcome;
        CHECK(count == realized);
        total += count;
      }
      CHECK(total == SpeCount(tree));
    }
  }
}

TEST_CASE("SPE restrict to SPE of every child subgame") {
  for (const GameTree& tree : testing::SmallRandomGames(30, RandomShape::kAny, 900, 2000)) {
    const SpeSet set = SpeEnumerate(tree);
    for (const JointStrategy& s : set.sample) {
      for (const auto& child : tree.Children(tree.root())) {
        const GameTree sub = Subgame(tree, child.node);
        const std::vector<JointStrategy> inner = SpeEnumerate(sub).sample;
        CHECK(std::binary_search(inner.begin(), inner.end(), Restrict(tree, s, child.node)));
      }
    }
  }
}

TEST_CASE("generic games have a unique SPE") {
  for (const GameTree& tree : testing::SmallRandomGames(40, RandomShape::kGeneric, 1300, 5000)) {
    CHECK(CheckNoRelevantTies(tree).holds);
    CHECK(HasUniqueSpe(tree));
  }
}

TEST_CASE("counts stay exact beyond machine integers") {
  // 70 independent indifferent two-way choices below a root.
  std::vector<std::pair<std::string, NodeSpec>> children;
  for (int k = 0; k < 70; ++k) {
    children.emplace_back(std::to_string(k), testing::D(2, {{"a", L({0, 0})}, {"b", L({0, 0})}}));
  }
  const GameTree tree = testing::Tree(2, testing::D(1, std::move(children)));
  CHECK(SpeCount(tree) == BigInt(70) * (BigInt(1) << 70));
  const SpeSet set = SpeEnumerate(tree, 5);
  CHECK(set.sample.size() == 5);
  CHECK(set.truncated);
}

}  // namespace
}  // namespace spe
