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

#include <limits>
#include <sstream>

#include "brec/delay.hpp"
#include "brec/harness.hpp"
#include "brec/recurrence.hpp"

namespace brec {

std::optional<Game> e1_base(const Game& game) {
  if (game.op() != GameOp::Or) return std::nullopt;
  const Game& l = game.left();
  const Game& r = game.right();
  if (l.op() != GameOp::CoTight || l.operand().op() != GameOp::Neg ||
      r.op() != GameOp::Loose)
    return std::nullopt;
  if (!(l.operand().operand() == r.operand())) return std::nullopt;
  return r.operand();
}

std::optional<Game> e2_base(const Game& game) {
  if (game.op() != GameOp::Or) return std::nullopt;
  const Game& l = game.left();
  const Game& r = game.right();
  if (l.op() != GameOp::CoLoose || l.operand().op() != GameOp::Neg ||
      r.op() != GameOp::Tight)
    return std::nullopt;
  if (!(l.operand().operand() == r.operand())) return std::nullopt;
  return r.operand();
}

bool E2Audit::ok() const {
  if (!problems.empty()) return false;
  for (const auto& row : counterparts)
    if (!row.failure.empty()) return false;
  return true;
}

namespace {

const char* op_name(GameOp op) {
  switch (op) {
    case GameOp::Tree: return "tree";
    case GameOp::Neg: return "neg";
    case GameOp::Or: return "or";
    case GameOp::Tight: return "tight";
    case GameOp::Loose: return "loose";
    case GameOp::CoTight: return "co-tight";
    case GameOp::CoLoose: return "co-loose";
  }
  return "?";
}

std::string show_bits(const Bits& b) { return b.empty() ? "\"\"" : b; }

std::string show_run(const Run& run) {
  std::string out = "<";
  for (std::size_t i = 0; i < run.size(); ++i) {
    if (i) out += ", ";
    out += format_labmove(run[i]);
  }
  return out + ">";
}

std::optional<ComponentReport> describe_component(int index, Game g, Run run) {
  ComponentReport c;
  c.component = index;
  c.winner = legal_run_winner(g, run);
  while (g.op() == GameOp::Neg) {
    Game inner = g.operand();
    g = inner;
    run = role_swapped(run);
    c.swapped = !c.swapped;
  }
  if (!g.is_recurrence()) return std::nullopt;
  c.op = op_name(g.op());
  for (const auto& b : representatives(run)) {
    Run proj = project(run, b);
    c.rows.push_back({b, proj, legal_run_winner(g.operand(), proj)});
  }
  return c;
}

// The machine's own view of the play: the transcript's adversary moves, each
// followed immediately by the machine's reaction.
Transcript atomic_replay(const Game& game, const Game& base,
                         const Transcript& t) {
  std::vector<Move> script;
  for (const auto& lm : t.moves)
    if (lm.player == Player::Bot) script.push_back(lm.move);
  ScriptedAdversary adversary(std::move(script));
  auto machine = make_machine(t.machine, base);
  MatchConfig cfg;
  cfg.max_moves = std::numeric_limits<std::size_t>::max();
  cfg.seed = static_cast<std::uint64_t>(t.seed);
  return run_match(game, *machine, adversary, cfg);
}

void check_common(const Game& game, const Transcript& t,
                  const Transcript& replay, std::vector<std::string>& out) {
  if (t.moves != replay.moves && !is_delay(Player::Top, t.moves, replay.moves))
    out.push_back(
        "transcript is not a Top-delay of the machine's replayed play");
  RunStatus status = classify(game, t.moves);
  if (!status.legal && status.offender == Player::Top)
    out.push_back("machine made the first illegal move (labmove " +
                  std::to_string(status.first_bad_index) + ")");
  if (winner(game, t.moves) != Player::Top)
    out.push_back("machine does not win the final run");
}

// Prefix of the replay that ends at the first illegal labmove, if any.
std::size_t legal_extent(const Game& game, const Run& run) {
  auto fi = first_illegal(game, run);
  return fi ? *fi : run.size();
}

}  // namespace

std::vector<std::string> audit_leaf_maps(const Transcript& t,
                                         std::vector<LeafMap>* history,
                                         std::size_t legal_prefix) {
  std::vector<std::string> problems;
  LeafMap previous{{Bits{}, Bits{}}};
  if (history) history->assign(1, previous);
  for (std::size_t i = 0; i < t.snapshots.size(); ++i) {
    const auto& s = t.snapshots[i];
    std::string where = "record " + std::to_string(i) + " (after " +
                        std::to_string(s.after_moves) + " labmoves)";
    if (!is_prefix_free(s.f))
      problems.push_back(where + ": leaf map values are not prefix-free");
    // Past an illegal move the machine ignores the adversary, so the leaves
    // of the raw position say nothing about the record.
    if (s.after_moves <= legal_prefix) {
      Run tight = component_run(
          Run(t.moves.begin(),
              t.moves.begin() + static_cast<std::ptrdiff_t>(
                                    std::min(s.after_moves, t.moves.size()))),
          2);
      std::set<Bits> domain;
      for (const auto& [leaf, bits] : s.f) domain.insert(leaf);
      if (domain != bt_leaves(tight))
        problems.push_back(where + ": domain differs from the current leaves");
    }
    // Values only grow: kept leaves extend their old value, new leaves are
    // children of a split leaf with the matching child value.
    for (const auto& [leaf, bits] : s.f) {
      auto old = previous.find(leaf);
      if (old != previous.end()) {
        if (!is_prefix(old->second, bits))
          problems.push_back(where + ": value of leaf " + show_bits(leaf) +
                             " shrank or moved");
        continue;
      }
      Bits parent = leaf.empty() ? leaf : leaf.substr(0, leaf.size() - 1);
      auto p = previous.find(parent);
      if (leaf.empty() || p == previous.end() ||
          bits != p->second + leaf.back())
        problems.push_back(where + ": leaf " + show_bits(leaf) +
                           " appeared without a matching split");
    }
    previous = s.f;
    if (history) history->push_back(s.f);
  }
  return problems;
}

std::vector<std::string> check_e1_match(const Game& base,
                                        const Transcript& t) {
  std::vector<std::string> out;
  Game game = e1_shape(base);
  Transcript replay = atomic_replay(game, base, t);
  check_common(game, t, replay, out);

  // Mirror law at every iteration boundary of the machine's view, up to the
  // adversary's first illegal move.
  const Run& moves = replay.moves;
  std::size_t extent = legal_extent(game, moves);
  for (std::size_t k = 0; k <= moves.size(); ++k) {
    bool boundary = k == moves.size() || moves[k].player == Player::Bot;
    if (!boundary) continue;
    if (k > extent) break;
    Run prefix(moves.begin(), moves.begin() + static_cast<std::ptrdiff_t>(k));
    Run sigma = component_run(prefix, 1);
    Run pi = component_run(prefix, 2);
    for (const auto& v : representatives(pi)) {
      try {
        if (project(sigma, v) != role_swapped(project(pi, v))) {
          out.push_back("mirror law fails after " + std::to_string(k) +
                        " labmoves on branch " + show_bits(v));
        }
      } catch (const NonDecisiveBranch& e) {
        out.push_back("mirror law: " + std::string(e.what()));
      }
    }
  }
  return out;
}

std::vector<std::string> check_e2_match(const Game& base,
                                        const Transcript& t) {
  std::vector<std::string> out;
  Game game = e2_shape(base);
  Transcript replay = atomic_replay(game, base, t);
  check_common(game, t, replay, out);
  for (auto& p : audit_leaf_maps(t, nullptr, legal_extent(game, t.moves)))
    out.push_back(std::move(p));

  std::size_t extent = legal_extent(game, replay.moves);
  if (extent < replay.moves.size()) return out;  // adversary went illegal
  std::vector<LeafMap> history;
  audit_leaf_maps(replay, &history);
  Run sigma = component_run(replay.moves, 1);
  Run pi = component_run(replay.moves, 2);
  for (const auto& v : representatives(pi)) {
    if (!find_counterpart_z(sigma, pi, v))
      out.push_back("no counterpart z for branch " + show_bits(v));
    auto check = check_counterpart_history(sigma, pi, history, v);
    if (!check.failure.empty())
      out.push_back("z-condition on branch " + show_bits(v) + ": " +
                    check.failure);
  }
  return out;
}

VerifyReport verify_transcript(const Game& game, const Transcript& t) {
  VerifyReport r;
  r.status = classify(game, t.moves);
  r.winner = winner(game, t.moves);
  if (r.status.legal) {
    if (game.op() == GameOp::Or) {
      for (int k = 1; k <= 2; ++k) {
        const Game& sub = k == 1 ? game.left() : game.right();
        if (auto c = describe_component(k, sub, component_run(t.moves, k)))
          r.components.push_back(std::move(*c));
      }
    } else if (auto c = describe_component(0, game, t.moves)) {
      r.components.push_back(std::move(*c));
    }
  }

  if (t.machine == "e1") {
    if (auto base = e1_base(game))
      r.violations = check_e1_match(*base, t);
    else
      r.violations.push_back("machine e1 needs the game Or(CoTight(Neg A), Loose A)");
  } else if (t.machine == "e2") {
    if (auto base = e2_base(game)) {
      r.violations = check_e2_match(*base, t);
      E2Audit audit;
      std::vector<LeafMap> history;
      audit.problems =
          audit_leaf_maps(t, &history, legal_extent(game, t.moves));
      if (r.status.legal) {
        Run sigma = component_run(t.moves, 1);
        Run pi = component_run(t.moves, 2);
        for (const auto& v : representatives(pi)) {
          CounterpartRow row;
          row.v = v;
          row.z = find_counterpart_z(sigma, pi, v);
          auto check = check_counterpart_history(sigma, pi, history, v);
          row.witness = check.z;
          row.failure = check.failure;
          if (!row.z && row.failure.empty()) row.failure = "no counterpart z";
          audit.counterparts.push_back(std::move(row));
        }
      }
      r.e2 = std::move(audit);
    } else {
      r.violations.push_back("machine e2 needs the game Or(CoLoose(Neg A), Tight A)");
    }
  }
  return r;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "status: " << status << "\n";
  os << "winner: " << winner << "\n";
  for (const auto& c : components) {
    os << "component " << c.component << " (" << c.op
       << (c.swapped ? ", labels swapped" : "") << "): winner " << c.winner
       << "\n";
    for (const auto& row : c.rows) {
      os << "  branch " << show_bits(row.branch) << ": "
         << show_run(row.projection) << " -> " << row.winner << "\n";
    }
  }
  if (e2) {
    os << "leaf-map audit: " << (e2->problems.empty() ? "ok" : "FAILED")
       << "\n";
    for (const auto& p : e2->problems) os << "  " << p << "\n";
    os << "counterparts:\n";
    for (const auto& row : e2->counterparts) {
      os << "  v=" << show_bits(row.v)
         << " z=" << (row.z ? show_bits(*row.z) : "absent")
         << " witness=" << (row.witness ? show_bits(*row.witness) : "absent");
      if (!row.failure.empty()) os << " (" << row.failure << ")";
      os << "\n";
    }
  }
  if (violations.empty()) {
    os << "properties: ok\n";
  } else {
    os << "properties: " << violations.size() << " violation(s)\n";
    for (const auto& v : violations) os << "  " << v << "\n";
  }
  return os.str();
}

}  // namespace brec
