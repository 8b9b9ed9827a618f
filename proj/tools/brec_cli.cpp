// Copyright 2026 The brec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: simulate, verify, static-check, equiv-test,
// project, reps. Exit codes: 0 success, 1 property violation, 2 usage or
// parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "brec/delay.hpp"
#include "brec/harness.hpp"
#include "brec/recurrence.hpp"

namespace {

using namespace brec;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// An argument starting with '(' is inline DSL, anything else a file name.
Game load_game(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '(') return parse_game(arg);
  return parse_game(read_file(arg));
}

Transcript load_transcript(const std::string& path) {
  return parse_transcript(read_file(path));
}

struct SimulateArgs {
  std::string game, machine = "e1", adversary = "random", out;
  std::uint64_t seed = 1;
  std::size_t max_moves = 40;
  bool fuzz = false;
};

int run_simulate(const SimulateArgs& a) {
  Game game = load_game(a.game);
  std::optional<Game> base;
  if (a.machine == "e1") base = e1_base(game);
  if (a.machine == "e2") base = e2_base(game);
  if (a.machine == "none") base = game;
  if (!base) {
    // A bare base game is wrapped into the machine's game.
    if (game.op() != GameOp::Tree)
      throw UsageError("game does not have the shape machine " + a.machine +
                       " plays");
    base = game;
    game = a.machine == "e1" ? e1_shape(game) : e2_shape(game);
  }
  auto machine = make_machine(a.machine, *base);

  std::unique_ptr<Adversary> adversary;
  if (a.adversary == "random") {
    adversary = std::make_unique<RandomLegalAdversary>(
        game, candidate_moves(game, 3));
  } else if (a.adversary.rfind("script:", 0) == 0) {
    adversary = std::make_unique<ScriptedAdversary>(
        parse_script(read_file(a.adversary.substr(7))));
  } else {
    throw UsageError("--adversary must be 'random' or 'script:<file>'");
  }

  MatchConfig cfg;
  cfg.max_moves = a.max_moves;
  cfg.seed = a.seed;
  cfg.interleaving_fuzz = a.fuzz;
  Transcript t = run_match(game, *machine, *adversary, cfg);
  std::string text = serialize_transcript(t);
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
  } else {
    std::ofstream out(a.out, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + a.out + "'");
    out << text;
    std::cout << "wrote " << t.moves.size() << " labmoves to " << a.out
              << "\n";
  }
  return kOk;
}

int run_verify(const std::string& game_arg, const std::string& path) {
  Game game = load_game(game_arg);
  Transcript t = load_transcript(path);
  VerifyReport r = verify_transcript(game, t);
  std::cout << r.to_text();
  return r.violations.empty() ? kOk : kViolation;
}

int run_static_check(const std::string& game_arg, std::size_t max_len,
                     const std::vector<std::string>& extra) {
  Game game = load_game(game_arg);
  auto alphabet = default_alphabet(game);
  for (const auto& m : extra) {
    if (std::find(alphabet.begin(), alphabet.end(), m) == alphabet.end())
      alphabet.push_back(m);
  }
  std::cout << "alphabet:";
  for (const auto& m : alphabet) std::cout << ' ' << m;
  std::cout << "\n";
  auto v = find_static_violation(game, max_len, alphabet);
  if (!v) {
    std::cout << "static up to length " << max_len << "\n";
    return kOk;
  }
  std::cout << "NOT static: " << v->player << " wins\n";
  for (const auto& lm : v->won) std::cout << "  " << lm << "\n";
  std::cout << "but not its " << v->player << "-delay\n";
  for (const auto& lm : v->delayed) std::cout << "  " << lm << "\n";
  return kViolation;
}

int run_equiv_test(const std::string& direction, std::size_t trials,
                   std::uint64_t seed, std::size_t depth,
                   std::size_t max_moves) {
  if (direction != "t2l" && direction != "l2t")
    throw UsageError("--direction must be t2l or l2t");
  std::size_t failed = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    std::uint64_t s = seed + i;
    Game base = Game::tree(random_static_tree(s, depth, 2).tree);
    Game game = direction == "t2l" ? e1_shape(base) : e2_shape(base);
    auto machine = make_machine(direction == "t2l" ? "e1" : "e2", base);
    RandomLegalAdversary adversary(game, candidate_moves(game, 3));
    MatchConfig cfg;
    cfg.max_moves = max_moves;
    cfg.seed = s;
    Transcript t = run_match(game, *machine, adversary, cfg);
    auto problems = direction == "t2l" ? check_e1_match(base, t)
                                       : check_e2_match(base, t);
    if (!problems.empty()) {
      ++failed;
      std::cout << "trial " << i << " (seed " << s << ", base "
                << serialize(base) << "):\n";
      for (const auto& p : problems) std::cout << "  " << p << "\n";
    }
  }
  std::cout << direction << ": " << trials - failed << "/" << trials
            << " matches passed\n";
  return failed == 0 ? kOk : kViolation;
}

int run_project(const std::string& path, int component,
                const std::string& branch) {
  if (!is_bitstring(branch)) throw UsageError("--branch must be a bitstring");
  Transcript t = load_transcript(path);
  Run run = component_run(t.moves, component);
  for (const auto& lm : project(run, branch)) std::cout << lm << "\n";
  return kOk;
}

int run_reps(const std::string& path, int component) {
  Transcript t = load_transcript(path);
  for (const auto& b : representatives(component_run(t.moves, component)))
    std::cout << b << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight and loose branching recurrence: games, strategies, checks"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "play a match and write its transcript");
  simulate->add_option("--game", sim.game, "game file or inline DSL")->required();
  simulate->add_option("--machine", sim.machine, "e1, e2 or none")
      ->check(CLI::IsMember({"e1", "e2", "none"}));
  simulate->add_option("--adversary", sim.adversary, "random or script:<file>");
  simulate->add_option("--seed", sim.seed);
  simulate->add_option("--max-moves", sim.max_moves)->check(CLI::PositiveNumber);
  simulate->add_flag("--fuzz", sim.fuzz, "randomize where adversary moves land between machine batches");
  simulate->add_option("--out", sim.out, "transcript file ('-' for stdout)");

  std::string game_arg, transcript_path;
  auto* verify = app.add_subcommand("verify", "evaluate a transcript");
  verify->add_option("--game", game_arg)->required();
  verify->add_option("--transcript", transcript_path)->required();

  std::size_t max_len = 4;
  std::vector<std::string> tokens;
  auto* static_check = app.add_subcommand("static-check", "bounded check of the static property");
  static_check->add_option("--game", game_arg)->required();
  static_check->add_option("--max-len", max_len)->required();
  static_check->add_option("--token", tokens, "extra surface move for the alphabet");

  std::string direction;
  std::size_t trials = 100, depth = 2, eq_max_moves = 40;
  std::uint64_t eq_seed = 1;
  auto* equiv = app.add_subcommand("equiv-test", "random matches of E1 (t2l) or E2 (l2t)");
  equiv->add_option("--direction", direction)->required();
  equiv->add_option("--trials", trials);
  equiv->add_option("--seed", eq_seed);
  equiv->add_option("--depth", depth);
  equiv->add_option("--max-moves", eq_max_moves)->check(CLI::PositiveNumber);

  int component = 1;
  std::string branch;
  auto* project_cmd = app.add_subcommand("project", "projection of a component run along a branch");
  project_cmd->add_option("--transcript", transcript_path)->required();
  project_cmd->add_option("--component", component)->required()->check(CLI::Range(1, 2));
  project_cmd->add_option("--branch", branch)->required();

  auto* reps = app.add_subcommand("reps", "representative branches of a component run");
  reps->add_option("--transcript", transcript_path)->required();
  reps->add_option("--component", component)->required()->check(CLI::Range(1, 2));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*simulate) return run_simulate(sim);
    if (*verify) return run_verify(game_arg, transcript_path);
    if (*static_check) return run_static_check(game_arg, max_len, tokens);
    if (*equiv) return run_equiv_test(direction, trials, eq_seed, depth, eq_max_moves);
    if (*project_cmd) return run_project(transcript_path, component, branch);
    if (*reps) return run_reps(transcript_path, component);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const NonDecisiveBranch& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
