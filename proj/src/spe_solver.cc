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

#include <algorithm>
#include <functional>

namespace spe {
namespace {

using CountMap = std::map<PayoffVector, BigInt>;

[[noreturn]] void EmptyArgmax(const GameTree& tree, NodeIndex u) {
  // Unreachable for finite trees: a finite maximum is always attained.
  throw GameError(ErrorCode::kInternal, "no SPE outcome at node '" + tree.Path(u) + "'");
}

// Number of SPE of a child subgame whose outcome gives the mover at most x.
class AtMostCounter {
 public:
  AtMostCounter(const CountMap& counts, int mover) {
    for (const auto& [outcome, count] : counts) steps_.emplace_back(outcome[mover], count);
    std::sort(steps_.begin(), steps_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    BigInt running = 0;
    for (auto& step : steps_) {
      running += step.second;
      step.second = running;
    }
  }

  BigInt AtMost(const Rational& x) const {
    auto it = std::upper_bound(steps_.begin(), steps_.end(), x,
                               [](const Rational& v, const auto& step) { return v < step.first; });
    if (it == steps_.begin()) return 0;
    return std::prev(it)->second;
  }

 private:
  std::vector<std::pair<Rational, BigInt>> steps_;
};

std::vector<CountMap> CountsPerNode(const GameTree& tree) {
  std::vector<CountMap> counts(tree.num_nodes());
  for (NodeIndex u = tree.num_nodes() - 1; u >= 0; --u) {
    if (tree.IsLeaf(u)) {
      counts[u].emplace(tree.Payoffs(u), 1);
      continue;
    }
    const int mover = tree.Turn(u);
    const auto children = tree.Children(u);
    std::vector<AtMostCounter> at_most;
    at_most.reserve(children.size());
    for (const auto& child : children) at_most.emplace_back(counts[child.node], mover);

    // An SPE of G^u is a root choice w together with one SPE per child such
    // that no other child's SPE gives the mover more than w's does.
    CountMap& here = counts[u];
    for (std::size_t w = 0; w < children.size(); ++w) {
      for (const auto& [outcome, count] : counts[children[w].node]) {
        BigInt ways = count;
        for (std::size_t other = 0; other < children.size() && ways != 0; ++other) {
          if (other != w) ways *= at_most[other].AtMost(outcome[mover]);
        }
        if (ways != 0) here[outcome] += ways;
      }
    }
    if (here.empty()) EmptyArgmax(tree, u);
  }
  return counts;
}

}  // namespace

OutcomeSet SpeOutcomes(const GameTree& tree) {
  std::vector<OutcomeSet> out(tree.num_nodes());
  for (NodeIndex u = tree.num_nodes() - 1; u >= 0; --u) {
    if (tree.IsLeaf(u)) {
      out[u] = {tree.Payoffs(u)};
      continue;
    }
    const int mover = tree.Turn(u);
    const auto children = tree.Children(u);
    // Worst SPE payoff the mover can be held to in each child.
    std::vector<Rational> floor;
    floor.reserve(children.size());
    for (const auto& child : children) {
      const OutcomeSet& set = out[child.node];
      auto lowest = std::min_element(
          set.begin(), set.end(),
          [mover](const PayoffVector& a, const PayoffVector& b) { return a[mover] < b[mover]; });
      floor.push_back((*lowest)[mover]);
    }
    // Largest and second-largest floor give the max over "other" children.
    std::size_t top = 0;
    for (std::size_t k = 1; k < floor.size(); ++k) {
      if (floor[k] > floor[top]) top = k;
    }
    std::optional<Rational> runner_up;
    for (std::size_t k = 0; k < floor.size(); ++k) {
      if (k != top && (!runner_up || floor[k] > *runner_up)) runner_up = floor[k];
    }

    OutcomeSet& here = out[u];
    for (std::size_t w = 0; w < children.size(); ++w) {
      const std::optional<Rational>& bar =
          (w == top) ? runner_up : std::optional<Rational>(floor[top]);
      for (const PayoffVector& o : out[children[w].node]) {
        if (!bar || o[mover] >= *bar) here.push_back(o);
      }
    }
    std::sort(here.begin(), here.end());
    here.erase(std::unique(here.begin(), here.end()), here.end());
    if (here.empty()) EmptyArgmax(tree, u);
    for (const auto& child : children) OutcomeSet().swap(out[child.node]);
  }
  return out[tree.root()];
}

std::map<PayoffVector, BigInt> SpeOutcomeCounts(const GameTree& tree) {
  return CountsPerNode(tree)[tree.root()];
}

BigInt SpeCount(const GameTree& tree) {
  BigInt total = 0;
  for (const auto& [outcome, count] : SpeOutcomeCounts(tree)) total += count;
  return total;
}

bool HasUniqueSpe(const GameTree& tree) { return SpeCount(tree) == 1; }

namespace {

// Lexicographic SPE enumeration with outcome filters. Every filter handed to
// a subgame is satisfiable, so no branch is entered without producing at
// least one equilibrium.
class Enumerator {
 public:
  using Mask = std::vector<char>;
  using Continuation = std::function<bool(int)>;

  Enumerator(const GameTree& tree, const std::vector<CountMap>& counts)
      : tree_(tree),
        outcomes_(tree.num_nodes()),
        to_parent_(tree.num_nodes()),
        choices_(FirstChildStrategy(tree)) {
    for (NodeIndex u = 0; u < tree.num_nodes(); ++u) {
      for (const auto& entry : counts[u]) outcomes_[u].push_back(entry.first);
    }
    for (NodeIndex u : tree.InternalNodes()) {
      for (const auto& child : tree.Children(u)) {
        auto& mapping = to_parent_[child.node];
        for (const PayoffVector& o : outcomes_[child.node]) {
          auto it = std::lower_bound(outcomes_[u].begin(), outcomes_[u].end(), o);
          mapping.push_back(it != outcomes_[u].end() && *it == o
                                ? static_cast<int>(it - outcomes_[u].begin())
                                : -1);
        }
      }
    }
  }

  void Run(const std::function<bool(const JointStrategy&)>& visit) {
    const NodeIndex root = tree_.root();
    Visit(root, Mask(outcomes_[root].size(), 1), [&](int) { return visit(choices_); });
  }

 private:
  // Enumerates SPE of G^u whose outcome index (into outcomes_[u]) is allowed
  // by `mask`. Returns false once a continuation asks to stop.
  bool Visit(NodeIndex u, const Mask& mask, const Continuation& next) {
    if (tree_.IsLeaf(u)) return mask[0] ? next(0) : true;
    const int mover = tree_.Turn(u);
    const auto children = tree_.Children(u);
    const int k = static_cast<int>(children.size());

    std::vector<Rational> floor(k);
    for (int c = 0; c < k; ++c) floor[c] = MinFor(children[c].node, mover);

    for (int j = 0; j < k; ++j) {
      const NodeIndex chosen = children[j].node;
      std::optional<Rational> bar;
      for (int c = 0; c < k; ++c) {
        if (c != j && (!bar || floor[c] > *bar)) bar = floor[c];
      }
      Mask candidates(outcomes_[chosen].size(), 0);
      std::optional<Rational> best;
      for (std::size_t x = 0; x < outcomes_[chosen].size(); ++x) {
        const int up = to_parent_[chosen][x];
        const Rational& value = outcomes_[chosen][x][mover];
        if (up < 0 || !mask[up] || (bar && value < *bar)) continue;
        candidates[x] = 1;
        if (!best || value > *best) best = value;
      }
      if (!best) continue;
      choices_.SetChoice(u, j);

      int chosen_outcome = -1;
      std::function<bool(int, const Rational*, const Rational*)> product =
          [&](int m, const Rational* prior_max, const Rational* achieved) -> bool {
        if (m == k) return next(to_parent_[chosen][chosen_outcome]);
        const NodeIndex c = children[m].node;
        if (m < j) {
          return Visit(c, AtMost(c, mover, *best), [&](int x) {
            const Rational& v = outcomes_[c][x][mover];
            const Rational* running = (prior_max && *prior_max > v) ? prior_max : &v;
            return product(m + 1, running, nullptr);
          });
        }
        if (m == j) {
          Mask allowed = candidates;
          if (prior_max) {
            for (std::size_t x = 0; x < allowed.size(); ++x) {
              if (outcomes_[c][x][mover] < *prior_max) allowed[x] = 0;
            }
          }
          return Visit(c, allowed, [&](int x) {
            chosen_outcome = x;
            return product(m + 1, nullptr, &outcomes_[c][x][mover]);
          });
        }
        return Visit(c, AtMost(c, mover, *achieved),
                     [&](int) { return product(m + 1, nullptr, achieved); });
      };
      if (!product(0, nullptr, nullptr)) return false;
    }
    return true;
  }

  Rational MinFor(NodeIndex u, int mover) const {
    Rational lowest = outcomes_[u].front()[mover];
    for (const PayoffVector& o : outcomes_[u]) lowest = std::min(lowest, o[mover]);
    return lowest;
  }

  Mask AtMost(NodeIndex u, int mover, const Rational& bound) const {
    Mask mask(outcomes_[u].size(), 0);
    for (std::size_t x = 0; x < mask.size(); ++x) mask[x] = outcomes_[u][x][mover] <= bound;
    return mask;
  }

  const GameTree& tree_;
  std::vector<std::vector<PayoffVector>> outcomes_;
  std::vector<std::vector<int>> to_parent_;
  JointStrategy choices_;
};

}  // namespace

SpeSet SpeEnumerate(const GameTree& tree, std::uint64_t cap) {
  // TODO: make the enumeration iterative; recursion depth grows with the
  // node count and limits it to trees of a few hundred thousand nodes.
  const std::vector<CountMap> counts = CountsPerNode(tree);
  SpeSet result;
  result.count = 0;
  for (const auto& [outcome, count] : counts[tree.root()]) result.count += count;
  if (cap > 0) {
    Enumerator enumerator(tree, counts);
    enumerator.Run([&](const JointStrategy& s) {
      result.sample.push_back(s);
      return result.sample.size() < cap;
    });
  }
  result.truncated = result.count > result.sample.size();
  return result;
}

}  // namespace spe
