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

#include "spe/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "spe/conditions.h"
#include "spe/equilibria.h"
#include "spe/game_io.h"
#include "spe/generators.h"
#include "spe/spe_solver.h"
#include "spe/zerosum.h"

namespace spe {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadSource(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

void WriteTarget(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw UsageError("cannot write '" + path + "'");
}

std::string Quoted(const GameTree& tree, NodeIndex u) { return "\"" + tree.Path(u) + "\""; }

std::string OutcomeSetText(const OutcomeSet& outcomes) {
  std::string text = "{";
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (k > 0) text += ",";
    text += outcomes[k].ToString();
  }
  return text + "}";
}

void PrintWitness(const GameTree& tree, const DeviationWitness& w, std::ostream& out) {
  const auto children = tree.Children(w.node);
  out << "node: " << Quoted(tree, w.node) << "\n"
      << "mover: " << w.mover + 1 << "\n"
      << "chosen: " << children[w.chosen_child].label << " (payoff "
      << FormatRational(w.payoff_at_choice) << ")\n"
      << "deviation: " << children[w.deviating_child].label << " (payoff "
      << FormatRational(w.payoff_at_deviation) << ")\n";
}

std::uint64_t ResolveCap(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kOracleCapEnv)) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw UsageError(std::string(kOracleCapEnv) + " must be an integer");
    }
    return value;
  }
  return kDefaultOracleCap;
}

// solve

struct SolveOptions {
  std::string game = "-";
  bool outcomes = false;
  bool count = false;
  std::optional<std::uint64_t> enumerate;
  std::string out_dir;
};

int RunSolve(const SolveOptions& options, std::istream& in, std::ostream& out) {
  const GameTree tree = ParseGame(ReadSource(options.game, in));
  if (options.count) {
    out << SpeCount(tree).str() << "\n";
    return kExitOk;
  }
  if (options.enumerate) {
    const SpeSet set = SpeEnumerate(tree, *options.enumerate);
    if (!options.out_dir.empty()) std::filesystem::create_directories(options.out_dir);
    for (std::size_t k = 0; k < set.sample.size(); ++k) {
      const std::string text = SerializeStrategy(tree, set.sample[k]);
      if (options.out_dir.empty()) {
        out << "# spe " << k + 1 << "\n" << text;
      } else {
        std::ostringstream name;
        name << "spe_" << std::setw(6) << std::setfill('0') << k + 1 << ".txt";
        WriteTarget((std::filesystem::path(options.out_dir) / name.str()).string(), text, out);
      }
    }
    out << "# count " << set.count.str() << (set.truncated ? " (truncated)" : "") << "\n";
    return kExitOk;
  }
  out << OutcomeSetText(SpeOutcomes(tree)) << "\n";
  return kExitOk;
}

// check

struct CheckOptions {
  std::string game = "-";
  std::string strategy;
  std::string mode = "one-deviation";
  std::optional<std::uint64_t> cap;
};

int RunCheck(const CheckOptions& options, std::istream& in, std::ostream& out) {
  const GameTree tree = ParseGame(ReadSource(options.game, in));
  const JointStrategy s = ParseStrategy(tree, ReadSource(options.strategy, in));
  const OracleConfig config{ResolveCap(options.cap)};

  if (options.mode == "nash") {
    const auto violation = FindNashViolation(tree, s, tree.root(), config);
    out << "nash: " << (violation ? "no" : "yes") << "\n";
    if (violation) {
      const int i = violation->player;
      out << "player: " << i + 1 << "\n"
          << "leaf: " << Quoted(tree, violation->leaf_before) << " (payoff "
          << FormatRational(tree.Payoffs(violation->leaf_before)[i]) << ")\n"
          << "improved leaf: " << Quoted(tree, violation->leaf_after) << " (payoff "
          << FormatRational(tree.Payoffs(violation->leaf_after)[i]) << ")\n";
    }
    return violation ? kExitCheckFailed : kExitOk;
  }

  const auto witness = OneDeviationCheck(tree, s);
  if (options.mode == "spe") {
    const bool spe = IsSpeByDefinition(tree, s, config);
    if (spe == witness.has_value()) {
      throw GameError(ErrorCode::kInternal, "definitional and one-deviation checks disagree");
    }
    out << "spe: " << (spe ? "yes" : "no") << "\n";
  } else {
    out << "one-deviation: " << (witness ? "violated" : "ok") << "\n";
  }
  if (witness) PrintWitness(tree, *witness, out);
  return witness ? kExitCheckFailed : kExitOk;
}

// classify

int RunClassify(const std::string& game, std::istream& in, std::ostream& out) {
  const GameTree tree = ParseGame(ReadSource(game, in));
  if (tree.num_players() != 2 || DetectShape(tree) == ZeroSumShape::kNone) {
    out << "shape: none\n";
    return kExitCheckFailed;
  }
  const StrategyClassSets sets = ComputeStrategyClassSets(tree, 0);
  const bool chess = sets.shape == ZeroSumShape::kChessLike;
  out << "shape: " << (chess ? "chess-like" : "win-or-lose") << "\n";
  out << "root: " << NodeClassName(ClassifyNodes(tree)[tree.root()]) << "\n";
  for (int i = 0; i < 2; ++i) out << "win_" << i + 1 << ": " << sets.win[i].count.str() << "\n";
  if (chess) {
    for (int i = 0; i < 2; ++i) out << "draw_" << i + 1 << ": " << sets.draw[i].count.str() << "\n";
  }
  const NeDescription ne = NeSetZeroSum(tree);
  if (ne.form == NeForm::kWinnerTimesAll) {
    out << "ne: win_" << ne.winner + 1 << " x S_" << 2 - ne.winner << "\n";
  } else {
    out << "ne: draw_1 x draw_2\n";
  }
  out << "ne_count: " << ne.count.str() << "\n";
  return kExitOk;
}

// conditions

void PrintReport(const GameTree& tree, const ConditionReport& report, std::ostream& out) {
  out << std::left << std::setw(24) << ConditionName(report.condition)
      << (report.holds ? "holds" : "fails");
  if (report.witness) {
    const ConditionWitness& w = *report.witness;
    if (w.node >= 0) out << "  node " << Quoted(tree, w.node);
    if (w.player >= 0) out << "  player " << w.player + 1;
    if (w.first == w.second) {
      out << "  leaf " << Quoted(tree, w.first);
    } else {
      out << "  leaves " << Quoted(tree, w.first) << " " << Quoted(tree, w.second);
    }
  }
  out << "\n";
}

int RunConditions(const std::string& game, std::istream& in, std::ostream& out) {
  const GameTree tree = ParseGame(ReadSource(game, in));
  PrintReport(tree, CheckNoRelevantTies(tree), out);
  PrintReport(tree, CheckGeneric(tree), out);
  PrintReport(tree, CheckRochet(tree), out);
  if (tree.num_players() == 2) {
    PrintReport(tree, CheckStrictlyCompetitive(tree), out);
  } else {
    out << std::left << std::setw(24) << "STRICTLY_COMPETITIVE" << "n/a  (two players only)\n";
  }
  PrintReport(tree, CheckTdi(tree), out);
  if (tree.num_players() == 2) {
    PrintReport(tree, CheckZeroSum(tree), out);
  } else {
    out << std::left << std::setw(24) << "ZERO_SUM" << "n/a  (two players only)\n";
  }
  out << std::left << std::setw(24) << "SPE_PAYOFF_EQUIVALENT"
      << (CheckSpePayoffEquivalence(tree) ? "yes" : "no") << "\n";
  return kExitOk;
}

// verify-properties

int RunVerify(const std::string& game, const std::optional<std::uint64_t>& cap_flag,
              std::istream& in, std::ostream& out) {
  const GameTree tree = ParseGame(ReadSource(game, in));
  const OracleConfig config{ResolveCap(cap_flag)};
  const BigInt joint = JointStrategyCount(tree);
  if (joint > config.cap) {
    throw GameError(
        ErrorCode::kOracleCapExceeded,
        "game has " + joint.str() + " joint strategies, cap is " + std::to_string(config.cap));
  }
  out << "joint strategies: " << joint.str() << "\n";
  bool all_pass = true;
  auto report = [&](bool pass, const std::string& what) {
    out << (pass ? "[pass] " : "[FAIL] ") << what << "\n";
    all_pass = all_pass && pass;
  };

  std::vector<JointStrategy> brute;
  bool one_deviation_agrees = true;
  ForEachJointStrategy(
      tree,
      [&](const JointStrategy& s) {
        const bool spe = IsSpeByDefinition(tree, s, config);
        one_deviation_agrees =
            one_deviation_agrees && spe == !OneDeviationCheck(tree, s).has_value();
        if (spe) brute.push_back(s);
        return true;
      },
      config);
  report(one_deviation_agrees,
         "one-deviation check agrees with the definition on every joint strategy");

  const SpeSet enumerated = SpeEnumerate(tree);
  report(enumerated.sample == brute,
         "enumerated SPE equal the brute-force SPE set (" + std::to_string(brute.size()) + ")");
  report(enumerated.count == brute.size(), "SPE count equals the brute-force count");
  std::set<PayoffVector> brute_outcomes;
  for (const JointStrategy& s : brute) brute_outcomes.insert(PlayOf(tree, s).outcome);
  const OutcomeSet outcomes = SpeOutcomes(tree);
  report(OutcomeSet(brute_outcomes.begin(), brute_outcomes.end()) == outcomes,
         "SPE outcome set equals the brute-force outcomes " + OutcomeSetText(outcomes));

  if (tree.num_players() == 2 && DetectShape(tree) != ZeroSumShape::kNone) {
    const NeDescription ne = NeSetZeroSum(tree);
    const std::size_t brute_ne = BruteForceNashSet(tree, config).size();
    report(ne.count == brute_ne, "closed-form NE count equals the brute-force NE count (" +
                                     std::to_string(brute_ne) + ")");

    const StrategyClassSets sets = ComputeStrategyClassSets(tree, 0);
    const bool chess = sets.shape == ZeroSumShape::kChessLike;
    const OutcomeScale scale;
    bool counts_match = true;
    for (int i = 0; i < 2; ++i) {
      std::uint64_t wins = 0;
      std::uint64_t draws = 0;
      ForEachPlayerStrategy(
          tree, i,
          [&](const PlayerStrategy& mine) {
            wins += GuaranteesByExhaustion(tree, mine, scale.WinFor(i), config);
            if (chess) draws += GuaranteesByExhaustion(tree, mine, scale.DrawFor(i), config);
            return true;
          },
          config);
      counts_match =
          counts_match && sets.win[i].count == wins && (!chess || sets.draw[i].count == draws);
    }
    report(counts_match, "win/draw counts equal exhaustive strategy filtering");

    bool zero_sum_agrees = true;
    ForEachJointStrategy(
        tree,
        [&](const JointStrategy& s) {
          zero_sum_agrees = zero_sum_agrees &&
                            SpeCheckZeroSum(tree, s) == !OneDeviationCheck(tree, s).has_value();
          return zero_sum_agrees;
        },
        config);
    report(zero_sum_agrees, "per-node zero-sum SPE check agrees with the one-deviation check");
  } else {
    out << "[skip] zero-sum checks (not a win-or-lose or chess-like game)\n";
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

// gen

struct GenOptions {
  std::string output = "-";
  std::uint64_t seed = 0;
  int grid = 100;
  std::string total = "100";
  int k = 4;
  int player = 1;
  int alpha = 3;
  RandomGameSpec random;
  std::string shape = "any";
};

GameTree Generate(const std::string& family, const GenOptions& o) {
  if (family == "ultimatum") return GenUltimatum(o.grid, ParseRational(o.total));
  if (family == "bargaining") return GenBargaining(o.k);
  if (family == "g-alpha") return GenGAlpha(o.player, o.alpha, o.grid);
  RandomGameSpec spec = o.random;
  spec.seed = o.seed;
  if (o.shape == "any") {
    spec.shape = RandomShape::kAny;
  } else if (o.shape == "generic") {
    spec.shape = RandomShape::kGeneric;
  } else if (o.shape == "zero-sum-3") {
    spec.shape = RandomShape::kZeroSum3Outcome;
  } else if (o.shape == "zero-sum-2") {
    spec.shape = RandomShape::kZeroSum2Outcome;
  } else {
    throw UsageError("unknown shape '" + o.shape + "'");
  }
  return GenRandom(spec);
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOracleCapExceeded:
      return kExitOracleCap;
    case ErrorCode::kInternal:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Subgame perfect equilibria of finite extensive games with perfect information",
               "spegame"};
  app.require_subcommand(1);

  SolveOptions solve_options;
  auto* solve = app.add_subcommand("solve", "SPE outcome set, count or enumeration");
  solve->add_option("game", solve_options.game, "game file, - for stdin");
  auto* outcomes_flag =
      solve->add_flag("--outcomes", solve_options.outcomes, "print the SPE outcome set (default)");
  auto* count_flag =
      solve->add_flag("--count", solve_options.count, "print the exact number of SPE");
  auto* enumerate_opt = solve->add_option("--enumerate", solve_options.enumerate,
                                          "print up to N SPE as strategy files");
  solve
      ->add_option("--out-dir", solve_options.out_dir,
                   "with --enumerate, write one strategy file per SPE here")
      ->needs(enumerate_opt);
  outcomes_flag->excludes(count_flag)->excludes(enumerate_opt);
  count_flag->excludes(enumerate_opt);

  CheckOptions check_options;
  auto* check = app.add_subcommand("check", "check a joint strategy");
  check->add_option("game", check_options.game, "game file, - for stdin")->required();
  check->add_option("--strategy", check_options.strategy, "strategy file")->required();
  check->add_option("--mode", check_options.mode, "spe, nash or one-deviation")
      ->check(CLI::IsMember({"spe", "nash", "one-deviation"}));
  check->add_option("--oracle-cap", check_options.cap,
                    "largest strategy set searched exhaustively");

  std::string classify_game = "-";
  auto* classify = app.add_subcommand("classify", "zero-sum classification");
  classify->add_option("game", classify_game, "game file, - for stdin");

  std::string conditions_game = "-";
  auto* conditions = app.add_subcommand("conditions", "structural condition reports");
  conditions->add_option("game", conditions_game, "game file, - for stdin");

  std::string verify_game = "-";
  std::optional<std::uint64_t> verify_cap;
  auto* verify = app.add_subcommand("verify-properties", "cross-check solvers against oracles");
  verify->add_option("game", verify_game, "game file, - for stdin");
  verify->add_option("--oracle-cap", verify_cap, "largest joint strategy set enumerated");

  GenOptions gen_options;
  auto* gen = app.add_subcommand("gen", "write a generated game");
  gen->require_subcommand(1);
  gen->add_option("-o,--output", gen_options.output, "output file, - for stdout");
  gen->add_option("--seed", gen_options.seed, "random seed");
  auto* ultimatum = gen->add_subcommand("ultimatum", "ultimatum game on a claim grid");
  ultimatum->add_option("--grid", gen_options.grid, "number of grid steps");
  ultimatum->add_option("--total", gen_options.total, "amount to share");
  auto* bargaining = gen->add_subcommand("bargaining", "bargaining game with first moves 2..K");
  bargaining->add_option("--k", gen_options.k, "largest first move K");
  auto* g_alpha = gen->add_subcommand("g-alpha", "the G(i, alpha) family");
  g_alpha->add_option("--player", gen_options.player, "player i owning the root (1 or 2)");
  g_alpha->add_option("--alpha", gen_options.alpha, "alpha >= 2");
  g_alpha->add_option("--grid", gen_options.grid, "ultimatum grid steps");
  auto* random = gen->add_subcommand("random", "seeded random game");
  random->add_option("--players", gen_options.random.players);
  random->add_option("--depth", gen_options.random.max_depth);
  random->add_option("--branching", gen_options.random.max_branching);
  random->add_option("--leaf-prob", gen_options.random.leaf_probability);
  random->add_option("--min-payoff", gen_options.random.min_payoff);
  random->add_option("--max-payoff", gen_options.random.max_payoff);
  random->add_option("--shape", gen_options.shape, "any, generic, zero-sum-3 or zero-sum-2");
  for (auto* family : {ultimatum, bargaining, g_alpha, random}) family->fallthrough();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    out << target->help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return RunSolve(solve_options, in, out);
    if (check->parsed()) return RunCheck(check_options, in, out);
    if (classify->parsed()) return RunClassify(classify_game, in, out);
    if (conditions->parsed()) return RunConditions(conditions_game, in, out);
    if (verify->parsed()) return RunVerify(verify_game, verify_cap, in, out);
    if (gen->parsed()) {
      const std::string family = gen->get_subcommands().front()->get_name();
      WriteTarget(gen_options.output, SerializeGame(Generate(family, gen_options)), out);
      return kExitOk;
    }
  } catch (const GameError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace spe
