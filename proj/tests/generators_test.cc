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

#include "spe/generators.h"

#include "doctest.h"
#include "spe/conditions.h"
#include "spe/equilibria.h"
#include "spe/game_io.h"
#include "spe/spe_solver.h"
#include "spe/zerosum.h"
#include "test_util.h"

namespace spe {
namespace {

ErrorCode CodeOf(auto&& make) {
  try {
    make();
  } catch (const GameError& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST_CASE("ultimatum") {
  const GameTree small = GenUltimatum(2, 2);
  CHECK(small.Children(small.root()).size() == 3);
  CHECK(small.Leaves().size() == 6);
  CHECK(Rank(small) == 2);
  CHECK(small.Payoffs(*small.Find("1/A")) == PayoffVector{1, 1});

  const GameTree minimal = GenUltimatum(1, 100);
  REQUIRE(minimal.Children(minimal.root()).size() == 2);
  CHECK(minimal.Payoffs(*minimal.Find("1/A")) == PayoffVector{100, 0});

  const GameTree thirds = GenUltimatum(3, 1);
  CHECK(thirds.Payoffs(*thirds.Find("1/A")) == PayoffVector{Rational(1, 3), Rational(2, 3)});

  CHECK(CodeOf([] { GenUltimatum(0, 100); }) == ErrorCode::kBadParameters);
  CHECK(CodeOf([] { GenUltimatum(2, 0); }) == ErrorCode::kBadParameters);
}

TEST_CASE("bargaining") {
  const GameTree two = GenBargaining(2);
  CHECK(two.Children(two.root()).size() == 1);
  CHECK(two.Leaves().size() == 2);
  CHECK(two.Payoffs(*two.Find("2/A")) == PayoffVector{50, 50});
  CHECK(two.Payoffs(*two.Find("2/R")) == PayoffVector{0, 0});

  const GameTree three = GenBargaining(3);
  CHECK(Rank(three) == 4);
  CHECK(three.Turn(*three.Find("3/B")) == 0);
  CHECK(three.Payoffs(*three.Find("3/B/2/A")) == PayoffVector{50, 50});

  for (int k = 2; k <= 12; ++k) {
    const GameTree tree = GenBargaining(k);
    CHECK(Validate(tree) == std::nullopt);
    CHECK(SpeCount(tree) == k - 1);
    CHECK(SpeOutcomes(tree) == OutcomeSet{PayoffVector{50, 50}});
  }
  CHECK(CodeOf([] { GenBargaining(1); }) == ErrorCode::kBadParameters);
}

TEST_CASE("G(i, alpha)") {
  const GameTree three = GenGAlpha(1, 3, 100);
  CHECK(three.Turn(three.root()) == 0);
  REQUIRE(three.Children(three.root()).size() == 1);
  const NodeIndex inner = three.Children(three.root())[0].node;
  CHECK(three.Turn(inner) == 1);
  CHECK(three.Children(inner).size() == 101);
  // Roles reversed: player 2 proposes and player 1 responds.
  CHECK(three.Payoffs(*three.Find("2/30/A")) == PayoffVector{70, 30});

  const GameTree four = GenGAlpha(1, 4, 100);
  REQUIRE(four.Children(four.root()).size() == 2);
  CHECK(four.Children(four.root())[0].label == "2");
  CHECK(four.Children(four.root())[1].label == "3");

  // On a grid the responder at the full claim is indifferent, so the
  // proposer keeps all or all but one step; the continuum game keeps only
  // the first.
  CHECK(SpeOutcomes(three) == OutcomeSet{PayoffVector{0, 100}, PayoffVector{1, 99}});

  const GameTree small = GenGAlpha(1, 4, 2);
  CHECK(JointStrategyCount(small) == 1152);
  const std::vector<JointStrategy> oracle = BruteForceSpeSet(small);
  CHECK(SpeOutcomes(small) == testing::OutcomesOf(small, oracle));
  CHECK(SpeCount(small) == oracle.size());

  CHECK(GenGAlpha(2, 2, 2).Turn(0) == 1);
  CHECK(CodeOf([] { GenGAlpha(3, 3, 2); }) == ErrorCode::kBadParameters);
  CHECK(CodeOf([] { GenGAlpha(1, 1, 2); }) == ErrorCode::kBadParameters);
}

TEST_CASE("random games are deterministic and valid") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomGameSpec spec;
    spec.seed = seed;
    spec.players = 1 + static_cast<int>(seed % 3);
    spec.max_depth = 5;
    const GameTree first = GenRandom(spec);
    const GameTree second = GenRandom(spec);
    CHECK(Validate(first) == std::nullopt);
    CHECK(SerializeGame(first) == SerializeGame(second));
    CHECK(Rank(first) <= spec.max_depth);
    for (NodeIndex u : first.InternalNodes()) {
      CHECK(static_cast<int>(first.Children(u).size()) <= spec.max_branching);
    }
    for (NodeIndex z : first.Leaves()) {
      for (const Rational& p : first.Payoffs(z).values()) {
        CHECK(p >= spec.min_payoff);
        CHECK(p <= spec.max_payoff);
      }
    }
  }
  RandomGameSpec a;
  RandomGameSpec b;
  b.seed = 1;
  CHECK(SerializeGame(GenRandom(a)) != SerializeGame(GenRandom(b)));
}

TEST_CASE("random games are pinned across platforms") {
  RandomGameSpec spec;
  spec.seed = 7;
  spec.max_depth = 3;
  spec.max_branching = 3;
  CHECK(SerializeGame(GenRandom(spec)) == testing::ReadFile(testing::FixturePath("random_7.json")));
}

TEST_CASE("random shapes hold by construction") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomGameSpec spec;
    spec.seed = seed;
    spec.shape = RandomShape::kGeneric;
    spec.min_payoff = 0;
    spec.max_payoff = 3;
    CHECK(CheckGeneric(GenRandom(spec)).holds);
    CHECK(CheckNoRelevantTies(GenRandom(spec)).holds);
    spec.shape = RandomShape::kZeroSum2Outcome;
    CHECK(CheckWinOrLose(GenRandom(spec)));
    spec.shape = RandomShape::kZeroSum3Outcome;
    CHECK(CheckChessLike(GenRandom(spec)));
  }
}

TEST_CASE("random parameter bounds") {
  RandomGameSpec spec;
  spec.max_branching = 0;
  CHECK(CodeOf([&] { GenRandom(spec); }) == ErrorCode::kBadParameters);
  spec = {};
  spec.min_payoff = 3;
  spec.max_payoff = 2;
  CHECK(CodeOf([&] { GenRandom(spec); }) == ErrorCode::kBadParameters);
  spec = {};
  spec.players = 3;
  spec.shape = RandomShape::kZeroSum3Outcome;
  CHECK(CodeOf([&] { GenRandom(spec); }) == ErrorCode::kBadParameters);
  spec = {};
  spec.max_depth = 0;
  CHECK(GenRandom(spec).num_nodes() == 1);
}

}  // namespace
}  // namespace spe
