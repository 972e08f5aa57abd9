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

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

namespace spe {
namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) throw GameError(ErrorCode::kBadParameters, message);
}

// Ultimatum over `total` where `proposer` claims and the other responds.
NodeSpec UltimatumSpec(int proposer, int grid_max, const Rational& total) {
  const int responder = 1 - proposer;
  std::vector<std::pair<std::string, NodeSpec>> claims;
  for (int k = 0; k <= grid_max; ++k) {
    const Rational claim = total * k / grid_max;
    std::vector<Rational> accept(2);
    accept[proposer] = claim;
    accept[responder] = total - claim;
    claims.emplace_back(std::to_string(k),
                        NodeSpec::Decision(responder, {{"A", NodeSpec::Leaf(PayoffVector(accept))},
                                                       {"R", NodeSpec::Leaf(PayoffVector{0, 0})}}));
  }
  return NodeSpec::Decision(proposer, std::move(claims));
}

NodeSpec BargainingSpec(int k) {
  if (k == 2) {
    return NodeSpec::Decision(1, {{"A", NodeSpec::Leaf(PayoffVector{50, 50})},
                                  {"R", NodeSpec::Leaf(PayoffVector{0, 0})}});
  }
  NodeSpec better = NodeSpec::Decision(0, {{std::to_string(k - 1), BargainingSpec(k - 1)}});
  return NodeSpec::Decision(1,
                            {{"B", std::move(better)}, {"R", NodeSpec::Leaf(PayoffVector{0, 0})}});
}

NodeSpec GAlphaSpec(int player, int alpha, int grid_max) {
  if (alpha == 2) return UltimatumSpec(player, grid_max, Rational(100));
  std::vector<std::pair<std::string, NodeSpec>> children;
  for (int beta = 2; beta < alpha; ++beta) {
    children.emplace_back(std::to_string(beta), GAlphaSpec(1 - player, beta, grid_max));
  }
  return NodeSpec::Decision(player, std::move(children));
}

// Uniform integer in [lo, hi] by rejection on the raw 64-bit stream, so the
// sequence does not depend on the standard library's distributions.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  std::int64_t Int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  // Exact multiple of 2^-53.
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

std::string ChildLabel(int position) {
  std::string label;
  do {
    label.insert(label.begin(), static_cast<char>('a' + position % 26));
    position = position / 26 - 1;
  } while (position >= 0);
  return label;
}

NodeSpec RandomShapeSpec(const RandomGameSpec& spec, Draw& draw, int depth, int& leaves) {
  const bool leaf = depth == spec.max_depth || (depth > 0 && draw.Unit() < spec.leaf_probability);
  if (leaf) {
    ++leaves;
    return NodeSpec::Leaf(PayoffVector());
  }
  const int player = static_cast<int>(draw.Int(0, spec.players - 1));
  const int branching = static_cast<int>(draw.Int(1, spec.max_branching));
  std::vector<std::pair<std::string, NodeSpec>> children;
  for (int c = 0; c < branching; ++c) {
    children.emplace_back(ChildLabel(c), RandomShapeSpec(spec, draw, depth + 1, leaves));
  }
  return NodeSpec::Decision(player, std::move(children));
}

void AssignPayoffs(NodeSpec& spec, const std::function<PayoffVector()>& next) {
  if (spec.is_leaf) {
    spec.payoffs = next();
    return;
  }
  for (auto& [label, child] : spec.children) AssignPayoffs(child, next);
}

}  // namespace

GameTree GenUltimatum(int grid_max, const Rational& total) {
  Require(grid_max >= 1, "ultimatum grid must have at least one step");
  Require(total > 0, "ultimatum total must be positive");
  return GameTree(2, UltimatumSpec(0, grid_max, total));
}

GameTree GenBargaining(int max_k) {
  Require(max_k >= 2, "bargaining truncation K must be at least 2");
  std::vector<std::pair<std::string, NodeSpec>> first_moves;
  for (int k = 2; k <= max_k; ++k) first_moves.emplace_back(std::to_string(k), BargainingSpec(k));
  return GameTree(2, NodeSpec::Decision(0, std::move(first_moves)));
}

GameTree GenGAlpha(int player, int alpha, int grid_max) {
  Require(player == 1 || player == 2, "G(i, alpha) needs i in {1, 2}");
  Require(alpha >= 2, "G(i, alpha) needs alpha >= 2");
  Require(alpha <= 20, "G(i, alpha) grows exponentially in alpha; alpha <= 20");
  Require(grid_max >= 1, "ultimatum grid must have at least one step");
  return GameTree(2, GAlphaSpec(player - 1, alpha, grid_max));
}

GameTree GenRandom(const RandomGameSpec& spec) {
  Require(spec.players >= 1, "need at least one player");
  Require(spec.max_depth >= 0 && spec.max_depth <= 12, "depth must be in 0..12");
  Require(spec.max_branching >= 1 && spec.max_branching <= 8, "branching must be in 1..8");
  Require(spec.leaf_probability >= 0 && spec.leaf_probability <= 1,
          "leaf probability must be in [0, 1]");
  Require(spec.min_payoff <= spec.max_payoff, "empty payoff range");
  const bool zero_sum =
      spec.shape == RandomShape::kZeroSum2Outcome || spec.shape == RandomShape::kZeroSum3Outcome;
  Require(!zero_sum || spec.players == 2, "zero-sum shapes need two players");

  Draw draw(spec.seed);
  int leaves = 0;
  NodeSpec root = RandomShapeSpec(spec, draw, 0, leaves);

  switch (spec.shape) {
    case RandomShape::kAny:
      AssignPayoffs(root, [&] {
        std::vector<Rational> values;
        for (int i = 0; i < spec.players; ++i) {
          values.emplace_back(draw.Int(spec.min_payoff, spec.max_payoff));
        }
        return PayoffVector(std::move(values));
      });
      break;
    case RandomShape::kGeneric: {
      const std::int64_t hi = std::max<std::int64_t>(spec.max_payoff, spec.min_payoff + leaves - 1);
      Require(hi - spec.min_payoff < 10'000'000, "payoff range too wide for a generic game");
      // Per player, a random injective assignment from a partial shuffle.
      std::vector<std::vector<std::int64_t>> columns(spec.players);
      for (auto& column : columns) {
        std::vector<std::int64_t> pool(static_cast<std::size_t>(hi - spec.min_payoff + 1));
        std::iota(pool.begin(), pool.end(), spec.min_payoff);
        for (int k = 0; k < leaves; ++k) {
          std::swap(pool[k], pool[draw.Int(k, static_cast<std::int64_t>(pool.size()) - 1)]);
        }
        column.assign(pool.begin(), pool.begin() + leaves);
      }
      int next_leaf = 0;
      AssignPayoffs(root, [&] {
        std::vector<Rational> values;
        for (const auto& column : columns) values.emplace_back(column[next_leaf]);
        ++next_leaf;
        return PayoffVector(std::move(values));
      });
      break;
    }
    case RandomShape::kZeroSum2Outcome:
    case RandomShape::kZeroSum3Outcome: {
      const std::int64_t lo = spec.shape == RandomShape::kZeroSum2Outcome ? 0 : -1;
      AssignPayoffs(root, [&] {
        std::int64_t v = draw.Int(lo, 1);
        if (spec.shape == RandomShape::kZeroSum2Outcome) v = v == 0 ? -1 : 1;
        return PayoffVector{Rational(v), Rational(-v)};
      });
      break;
    }
  }
  return GameTree(spec.players, root);
}

}  // namespace spe
