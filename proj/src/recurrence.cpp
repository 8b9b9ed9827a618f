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

#include "brec/recurrence.hpp"

#include <algorithm>

#include "brec/semantics.hpp"

namespace brec {

std::optional<RecMove> parse_rec_move(std::string_view move) noexcept {
  auto sep = move.find_first_of(".:");
  if (sep == std::string_view::npos) return std::nullopt;
  std::string_view address = move.substr(0, sep);
  if (!is_bitstring(address)) return std::nullopt;
  std::string_view rest = move.substr(sep + 1);
  if (move[sep] == ':') {
    if (!rest.empty()) return std::nullopt;
    return RecMove{RecMoveKind::Replicative, address, {}};
  }
  if (rest.empty()) return std::nullopt;
  return RecMove{RecMoveKind::NonReplicative, address, rest};
}

std::set<Bits> bt_nodes(const Run& position) {
  std::set<Bits> nodes{Bits{}};
  for (const auto& lm : position) {
    auto m = parse_rec_move(lm.move);
    if (m && m->kind == RecMoveKind::Replicative) {
      Bits u(m->address);
      nodes.insert(u + '0');
      nodes.insert(u + '1');
    }
  }
  return nodes;
}

namespace {

// In lexicographic order every proper extension of n directly follows n.
std::set<Bits> leaves_of(const std::set<Bits>& nodes) {
  std::set<Bits> leaves;
  for (auto it = nodes.begin(); it != nodes.end(); ++it) {
    auto next = std::next(it);
    if (next == nodes.end() || !is_proper_prefix(*it, *next))
      leaves.insert(*it);
  }
  return leaves;
}

}  // namespace

std::set<Bits> bt_leaves(const Run& position) {
  return leaves_of(bt_nodes(position));
}

BTView bt_view(const Run& position) {
  BTView v;
  v.nodes = bt_nodes(position);
  v.leaves = leaves_of(v.nodes);
  return v;
}

std::set<Bits> run_addresses(const Run& run) {
  std::set<Bits> out;
  for (const auto& lm : run) {
    if (auto m = parse_rec_move(lm.move)) out.emplace(m->address);
  }
  return out;
}

bool is_decisive(const Run& run, std::string_view branch) {
  for (const auto& lm : run) {
    auto m = parse_rec_move(lm.move);
    if (m && is_proper_prefix(branch, m->address)) return false;
  }
  return true;
}

Run project_unchecked(const Run& run, std::string_view branch) {
  Run out;
  for (const auto& lm : run) {
    auto m = parse_rec_move(lm.move);
    if (m && m->kind == RecMoveKind::NonReplicative &&
        is_prefix(m->address, branch))
      out.push_back({lm.player, std::string(m->inner)});
  }
  return out;
}

Run project(const Run& run, std::string_view branch) {
  for (const auto& lm : run) {
    auto m = parse_rec_move(lm.move);
    if (m && is_proper_prefix(branch, m->address))
      throw NonDecisiveBranch(Bits(branch), Bits(m->address));
  }
  return project_unchecked(run, branch);
}

std::vector<Bits> representatives(const Run& run) {
  std::set<Bits> closure{Bits{}};
  for (const auto& a : run_addresses(run)) {
    for (std::size_t n = 1; n <= a.size(); ++n) closure.insert(a.substr(0, n));
  }
  std::vector<Bits> reps;
  for (const auto& t : closure) {
    if (!closure.contains(t + '0'))
      reps.push_back(t + '0');
    else if (!closure.contains(t + '1'))
      reps.push_back(t + '1');
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

namespace detail {

std::optional<std::size_t> rec_first_illegal(RecKind kind, bool dual,
                                             const Game& base,
                                             const Run& run) {
  const Player replicator = dual ? Player::Top : Player::Bot;
  std::size_t bad = run.size();
  std::set<Bits> nodes{Bits{}};
  for (std::size_t i = 0; i < run.size() && bad == run.size(); ++i) {
    auto m = parse_rec_move(run[i].move);
    if (!m) {
      bad = i;
    } else if (m->kind == RecMoveKind::Replicative) {
      Bits u(m->address);
      bool ok = kind == RecKind::Tight && run[i].player == replicator &&
                nodes.contains(u) && !nodes.contains(u + '0');
      if (!ok) {
        bad = i;
      } else {
        nodes.insert(u + '0');
        nodes.insert(u + '1');
      }
    } else if (kind == RecKind::Tight && !nodes.contains(Bits(m->address))) {
      bad = i;
    }
  }

  // Thread-wise legality: every projection of the well-formed prefix must be
  // a legal run of the base game. The earliest failure over all thread
  // classes is the first illegal labmove.
  Run prefix(run.begin(), run.begin() + static_cast<std::ptrdiff_t>(bad));
  for (const auto& branch : representatives(prefix)) {
    Run proj;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      auto m = parse_rec_move(prefix[i].move);
      if (m->kind == RecMoveKind::NonReplicative &&
          is_prefix(m->address, branch)) {
        proj.push_back({prefix[i].player, std::string(m->inner)});
        where.push_back(i);
      }
    }
    if (auto fi = first_illegal(base, proj)) bad = std::min(bad, where[*fi]);
  }
  if (bad < run.size()) return bad;
  return std::nullopt;
}

Player rec_legal_winner(bool dual, const Game& base, const Run& run) {
  // Non-dual: Top must win every thread. Dual: Bot must win every thread.
  const Player all_threads = dual ? Player::Bot : Player::Top;
  for (const auto& branch : representatives(run)) {
    if (legal_run_winner(base, project_unchecked(run, branch)) != all_threads)
      return opponent(all_threads);
  }
  return all_threads;
}

}  // namespace detail

bool tight_legal(const Game& base, const Run& position, const LabMove& lm) {
  return legal(Game::tight(base), position, lm);
}

bool loose_legal(const Game& base, const Run& position, const LabMove& lm) {
  return legal(Game::loose(base), position, lm);
}

Player rec_winner(RecKind kind, const Game& base, const Run& run) {
  Game g = kind == RecKind::Tight ? Game::tight(base) : Game::loose(base);
  if (auto fi = first_illegal(g, run)) {
    throw PreconditionError("rec_winner needs a legal run; labmove " +
                            std::to_string(*fi) + " is illegal");
  }
  return detail::rec_legal_winner(false, base, run);
}

}  // namespace brec
