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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Optional arguments select criteria by
// number.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "brec/delay.hpp"
#include "brec/harness.hpp"
#include "brec/recurrence.hpp"
#include "oracles.hpp"

namespace {

using namespace brec;
using Clock = std::chrono::steady_clock;

// Pinned sizes and time limits (seconds).
constexpr double kLimit1 = 60;
constexpr double kLimit2 = 300;
constexpr double kLimit3 = 600;
constexpr double kLimit4 = 600;
constexpr double kLimit5 = 600;
constexpr double kLimit6 = 600;
constexpr double kLimit7 = 600;
constexpr double kLimit8 = 600;

constexpr std::size_t kDelayRunLen = 5;
constexpr std::size_t kIllegalDelayRunLen = 4;
constexpr std::size_t kStaticTreeLen = 4;
constexpr std::size_t kStaticTrees = 50;
constexpr std::size_t kLooseStaticRunLen = 5;
constexpr std::size_t kMatches = 1000;
constexpr std::size_t kMaxMoves = 40;
constexpr std::size_t kAddressCap = 3;
constexpr std::size_t kInjectedMatches = 200;
constexpr std::size_t kOracleRunLen = 5;
constexpr std::size_t kRoundTrips = 100;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& what) {
    if (ok) first_failure = what;
    ok = false;
  }
};

// ---------------------------------------------------------------------------

Outcome converse_delay() {
  Outcome o;
  auto runs = oracle::all_runs(oracle::both_labels({"a", "b"}), kDelayRunLen);
  std::size_t pairs = 0, delays = 0;
  for (const auto& g : runs) {
    for (const auto& w : runs) {
      if (w.size() != g.size()) continue;  // different lengths never qualify
      ++pairs;
      for (Player p : {Player::Top, Player::Bot}) {
        if (!is_delay(p, w, g)) continue;
        ++delays;
        if (!is_delay(opponent(p), g, w))
          o.fail("converse fails for a pair of length " +
                 std::to_string(g.size()));
      }
    }
  }
  o.detail = std::to_string(runs.size()) + " runs, " + std::to_string(pairs) +
             " same-length pairs, " + std::to_string(delays) + " delays";
  return o;
}

// ---------------------------------------------------------------------------

const RunSpace& space_for(std::map<std::vector<Move>, RunSpace>& cache,
                          const std::vector<Move>& alphabet, std::size_t len) {
  auto it = cache.find(alphabet);
  if (it == cache.end())
    it = cache.emplace(alphabet, RunSpace(labeled_alphabet(alphabet), len))
             .first;
  return it->second;
}

Outcome lemma_illegal_delay() {
  Outcome o;
  auto trees = enumerate_trees(2, 2, {"a", "b"});
  std::map<std::vector<Move>, RunSpace> tree_spaces, loose_spaces;
  std::size_t static_trees = 0, checked = 0, implications = 0;
  for (const auto& t : trees) {
    Game a = Game::tree(t);
    if (find_static_violation(
            a, space_for(tree_spaces, tree_alphabet(t), kStaticTreeLen)))
      continue;
    ++static_trees;
    Game l = Game::loose(a);
    const RunSpace& space = space_for(loose_spaces, loose_alphabet(t), kIllegalDelayRunLen);
    // Offender of each run, or nullopt when legal.
    std::vector<std::optional<Player>> offender(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
      const Run& r = space.run(i);
      if (auto fi = first_illegal(l, r)) offender[i] = r[*fi].player;
    }
    for (std::size_t i = 0; i < space.size(); ++i) {
      for (Player p : {Player::Top, Player::Bot}) {
        for (std::size_t d : space.delays(p, i)) {
          ++checked;
          if (offender[d] != p) continue;
          ++implications;
          if (offender[i] != p) {
            std::ostringstream os;
            os << "tree " << serialize(t) << ", " << p << "-delay of run #"
               << i << " is " << p << "-illegal but the run is not";
            o.fail(os.str());
          }
        }
      }
    }
  }
  o.detail = std::to_string(trees.size()) + " trees, " +
             std::to_string(static_trees) + " static, " +
             std::to_string(checked) + " (run, delay) pairs, " +
             std::to_string(implications) + " with an illegal delay";
  return o;
}

// ---------------------------------------------------------------------------

Outcome loose_preserves_static() {
  Outcome o;
  std::map<std::vector<Move>, RunSpace> spaces;
  std::size_t runs = 0;
  for (std::uint64_t seed = 1; seed <= kStaticTrees; ++seed) {
    GameTree t = random_static_tree(seed, 2, 2).tree;
    Game a = Game::tree(t);
    const RunSpace& space = space_for(spaces, loose_alphabet(t), kLooseStaticRunLen);
    runs = space.size();
    for (const Game& g : {Game::loose(a), Game::co_loose(Game::neg(a))}) {
      if (auto v = find_static_violation(g, space)) {
        std::ostringstream os;
        os << serialize(g) << " is not static: " << v->player
           << " wins a run of length " << v->won.size()
           << " but not one of its delays";
        o.fail(os.str());
      }
    }
  }
  o.detail = std::to_string(kStaticTrees) + " trees x 2 games, " +
             std::to_string(runs) + " runs each";
  return o;
}

// ---------------------------------------------------------------------------

Outcome theorem_matches(bool e2) {
  Outcome o;
  std::size_t total_moves = 0, fuzzed = 0;
  for (std::uint64_t seed = 1; seed <= kMatches; ++seed) {
    Game base = Game::tree(random_static_tree(seed, 2, 2).tree);
    Game game = e2 ? e2_shape(base) : e1_shape(base);
    auto machine = make_machine(e2 ? "e2" : "e1", base);
    RandomLegalAdversary adv(game, candidate_moves(game, kAddressCap));
    MatchConfig cfg;
    cfg.max_moves = kMaxMoves;
    cfg.seed = seed;
    cfg.interleaving_fuzz = seed % 2 == 0;
    fuzzed += cfg.interleaving_fuzz;
    Transcript t = run_match(game, *machine, adv, cfg);
    total_moves += t.moves.size();
    if (!classify(game, t.moves).legal)
      o.fail("seed " + std::to_string(seed) + ": random-legal match is illegal");
    auto problems = e2 ? check_e2_match(base, t) : check_e1_match(base, t);
    if (!problems.empty())
      o.fail("seed " + std::to_string(seed) + ": " + problems.front());
  }
  o.detail = std::to_string(kMatches) + " matches (" + std::to_string(fuzzed) +
             " fuzzed), " + std::to_string(total_moves) + " labmoves";
  return o;
}

// ---------------------------------------------------------------------------

Outcome clean_hands() {
  Outcome o;
  Rng pick(20260415);
  std::size_t tail_moves = 0;
  for (std::uint64_t i = 0; i < kInjectedMatches; ++i) {
    std::uint64_t seed = 5000 + i;
    bool e2 = i % 2 == 1;
    const char* name = e2 ? "e2" : "e1";
    Game base = Game::tree(random_static_tree(seed, 2, 2).tree);
    Game game = e2 ? e2_shape(base) : e1_shape(base);
    auto candidates = candidate_moves(game, kAddressCap);

    // Adversary moves of an ordinary match.
    auto m0 = make_machine(name, base);
    RandomLegalAdversary adv(game, candidates);
    MatchConfig cfg;
    cfg.max_moves = kMaxMoves;
    cfg.seed = seed;
    Transcript honest = run_match(game, *m0, adv, cfg);
    std::vector<Move> script;
    for (const auto& lm : honest.moves)
      if (lm.player == Player::Bot) script.push_back(lm.move);

    // Inject one illegal move after k adversary moves.
    std::size_t k = draw(pick, script.size() + 1);
    std::vector<Move> prefix(script.begin(), script.begin() + k);
    auto m1 = make_machine(name, base);
    ScriptedAdversary lead(prefix);
    MatchConfig open = cfg;
    open.max_moves = std::numeric_limits<std::size_t>::max();
    Run position = run_match(game, *m1, lead, open).moves;
    std::vector<Move> illegal;
    for (const auto& c : candidates)
      if (!legal(game, position, {Player::Bot, c})) illegal.push_back(c);
    if (illegal.empty()) {
      o.fail("seed " + std::to_string(seed) + ": no illegal candidate");
      continue;
    }
    std::vector<Move> injected = prefix;
    injected.push_back(illegal[draw(pick, illegal.size())]);
    injected.insert(injected.end(), script.begin() + k, script.end());
    tail_moves += script.size() - k;

    auto m2 = make_machine(name, base);
    ScriptedAdversary scripted(injected);
    cfg.max_moves = std::numeric_limits<std::size_t>::max();
    Transcript t = run_match(game, *m2, scripted, cfg);
    RunStatus s = classify(game, t.moves);
    VerifyReport r = verify_transcript(game, t);
    std::string at = "seed " + std::to_string(seed) + ": ";
    if (s.legal || s.offender != Player::Bot)
      o.fail(at + "first offender is not the adversary");
    else if (t.moves[s.first_bad_index].move != injected[k])
      o.fail(at + "first illegal labmove is not the injected one");
    if (r.winner != Player::Top) o.fail(at + "machine does not win");
    if (!r.violations.empty()) o.fail(at + r.violations.front());
  }
  o.detail = std::to_string(kInjectedMatches) + " matches, " +
             std::to_string(tail_moves) + " adversary moves after injection";
  return o;
}

// ---------------------------------------------------------------------------

Outcome oracle_equivalence() {
  Outcome o;
  // Representatives: every run over a mixed alphabet, independent of trees.
  auto mixed = oracle::both_labels({":", ".a", "0.a", "1:", "10.a", "11.b"});
  auto runs = oracle::all_runs(mixed, kOracleRunLen);
  for (const auto& r : runs) {
    std::set<Run> from_reps;
    for (const auto& b : representatives(r)) {
      if (!is_decisive(r, b)) o.fail("representative not decisive");
      from_reps.insert(project(r, b));
    }
    if (from_reps != oracle::projection_classes(r))
      o.fail("representatives miss a projection class");
  }

  // Loose legality: legal positions extended by every letter.
  auto trees = enumerate_trees(2, 2, {"a"});
  auto two = enumerate_trees(2, 2, {"a", "b"});
  for (std::size_t i = 0; i < two.size(); i += 53) trees.push_back(two[i]);
  std::size_t queries = 0;
  for (const auto& t : trees) {
    Game base = Game::tree(t);
    auto letters = labeled_alphabet(loose_alphabet(t));
    auto walk = [&](auto&& self, Run& pos) -> void {
      if (pos.size() == kOracleRunLen) return;
      for (const auto& lm : letters) {
        ++queries;
        pos.push_back(lm);
        bool expected = oracle::loose_run_legal(t, pos);
        pos.pop_back();
        if (loose_legal(base, pos, lm) != expected) {
          o.fail("loose_legal disagrees on " + serialize(t));
          continue;
        }
        if (expected) {
          pos.push_back(lm);
          self(self, pos);
          pos.pop_back();
        }
      }
    };
    Run pos;
    walk(walk, pos);
  }
  o.detail = std::to_string(runs.size()) + " runs for representatives, " +
             std::to_string(trees.size()) + " trees and " +
             std::to_string(queries) + " legality queries";
  return o;
}

// ---------------------------------------------------------------------------

Outcome determinism() {
  Outcome o;
  for (std::uint64_t seed = 1; seed <= kRoundTrips; ++seed) {
    bool e2 = seed % 2 == 0;
    Game base = Game::tree(random_static_tree(seed, 2, 2).tree);
    Game game = e2 ? e2_shape(base) : e1_shape(base);
    std::string texts[2], reports[2];
    for (int rep = 0; rep < 2; ++rep) {
      auto m = make_machine(e2 ? "e2" : "e1", base);
      RandomLegalAdversary adv(game, candidate_moves(game, kAddressCap));
      MatchConfig cfg;
      cfg.max_moves = kMaxMoves;
      cfg.seed = seed;
      cfg.interleaving_fuzz = seed % 3 == 0;
      Transcript t = run_match(game, *m, adv, cfg);
      texts[rep] = serialize_transcript(t);
      Transcript back = parse_transcript(texts[rep]);
      if (!(back == t)) o.fail("parse(serialize(t)) != t");
      if (serialize_transcript(back) != texts[rep])
        o.fail("serialize is not stable");
      reports[rep] = verify_transcript(parse_game(back.game_text), back).to_text();
      if (reports[rep] != verify_transcript(game, t).to_text())
        o.fail("verify differs after the round trip");
    }
    if (texts[0] != texts[1]) o.fail("seed " + std::to_string(seed) + ": simulate differs");
    if (reports[0] != reports[1]) o.fail("seed " + std::to_string(seed) + ": verify differs");
  }
  o.detail = std::to_string(kRoundTrips) + " seeds, simulated and verified twice";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all{
      {1, "converse-delay law", kLimit1, converse_delay},
      {2, "illegal delays of loose runs on static trees", kLimit2,
       lemma_illegal_delay},
      {3, "loose recurrence preserves staticness", kLimit3,
       loose_preserves_static},
      {4, "tight-to-loose strategy (E1) wins with the mirror law", kLimit4,
       [] { return theorem_matches(false); }},
      {5, "loose-to-tight strategy (E2) wins with leaf-map audit", kLimit5,
       [] { return theorem_matches(true); }},
      {6, "clean hands under injected illegal moves", kLimit6, clean_hands},
      {7, "oracle equivalence for loose legality and representatives",
       kLimit7, oracle_equivalence},
      {8, "determinism and transcript round-trip", kLimit8, determinism}};

  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  bool all_ok = true;
  for (const auto& c : all) {
    if (!only.empty() && !only.contains(c.id)) continue;
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.limit)
      o.fail("took " + std::to_string(secs) + " s, limit " +
             std::to_string(c.limit) + " s");
    all_ok = all_ok && o.ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.1f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": "
              << c.name << " [" << o.detail << "; " << timing << "]";
    if (!o.ok) std::cout << " first failure: " << o.first_failure;
    std::cout << std::endl;
  }
  return all_ok ? 0 : 1;
}
