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

#include "brec/semantics.hpp"

#include <algorithm>
#include <sstream>

#include "brec/recurrence.hpp"

namespace brec {

std::ostream& operator<<(std::ostream& os, const RunStatus& s) {
  if (s.legal) return os << "Legal";
  return os << "IllegalBy(" << s.offender << ", " << s.first_bad_index << ")";
}

std::string to_string(const RunStatus& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::optional<std::pair<int, std::string_view>> split_component(
    std::string_view move) noexcept {
  if (move.size() < 2 || move[1] != '.') return std::nullopt;
  if (move[0] == '1') return std::pair{1, move.substr(2)};
  if (move[0] == '2') return std::pair{2, move.substr(2)};
  return std::nullopt;
}

Run component_run(const Run& run, int component) {
  Run out;
  for (const auto& lm : run) {
    auto c = split_component(lm.move);
    if (c && c->first == component)
      out.push_back({lm.player, std::string(c->second)});
  }
  return out;
}

namespace {

std::optional<std::size_t> tree_first_illegal(const GameTree& t,
                                              const Run& run) {
  const GameTree* at = &t;
  for (std::size_t i = 0; i < run.size(); ++i) {
    at = at->child(run[i].player, run[i].move);
    if (!at) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> or_first_illegal(const Game& g, const Run& run) {
  std::size_t bad = run.size();
  Run parts[2];
  std::vector<std::size_t> where[2];
  for (std::size_t i = 0; i < run.size(); ++i) {
    auto c = split_component(run[i].move);
    if (!c) {
      bad = i;
      break;
    }
    int k = c->first - 1;
    parts[k].push_back({run[i].player, std::string(c->second)});
    where[k].push_back(i);
  }
  const Game* sub[2] = {&g.left(), &g.right()};
  for (int k = 0; k < 2; ++k) {
    if (auto fi = first_illegal(*sub[k], parts[k]))
      bad = std::min(bad, where[k][*fi]);
  }
  if (bad < run.size()) return bad;
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> first_illegal(const Game& game, const Run& run) {
  switch (game.op()) {
    case GameOp::Tree: return tree_first_illegal(game.base_tree(), run);
    case GameOp::Neg: return first_illegal(game.operand(), role_swapped(run));
    case GameOp::Or: return or_first_illegal(game, run);
    case GameOp::Tight:
      return detail::rec_first_illegal(RecKind::Tight, false, game.operand(),
                                       run);
    case GameOp::Loose:
      return detail::rec_first_illegal(RecKind::Loose, false, game.operand(),
                                       run);
    case GameOp::CoTight:
      return detail::rec_first_illegal(RecKind::Tight, true, game.operand(),
                                       run);
    case GameOp::CoLoose:
      return detail::rec_first_illegal(RecKind::Loose, true, game.operand(),
                                       run);
  }
  return std::nullopt;
}

RunStatus classify(const Game& game, const Run& run) {
  if (auto fi = first_illegal(game, run))
    return RunStatus::IllegalBy(run[*fi].player, *fi);
  return RunStatus::Legal();
}

bool legal(const Game& game, const Run& position, const LabMove& lm) {
  Run extended = position;
  extended.push_back(lm);
  auto fi = first_illegal(game, extended);
  if (fi && *fi < position.size()) {
    throw PreconditionError("position is not legal: labmove " +
                            std::to_string(*fi) + " (" +
                            format_labmove(position[*fi]) + ") is illegal");
  }
  return !fi.has_value();
}

Player legal_run_winner(const Game& game, const Run& run) {
  switch (game.op()) {
    case GameOp::Tree: {
      const GameTree* at = &game.base_tree();
      for (const auto& lm : run) {
        at = at->child(lm.player, lm.move);
        if (!at) throw PreconditionError("run is not legal in the tree");
      }
      return at->winner;
    }
    case GameOp::Neg:
      return opponent(legal_run_winner(game.operand(), role_swapped(run)));
    case GameOp::Or: {
      bool top = legal_run_winner(game.left(), component_run(run, 1)) ==
                     Player::Top ||
                 legal_run_winner(game.right(), component_run(run, 2)) ==
                     Player::Top;
      return top ? Player::Top : Player::Bot;
    }
    case GameOp::Tight:
    case GameOp::Loose:
      return detail::rec_legal_winner(false, game.operand(), run);
    case GameOp::CoTight:
    case GameOp::CoLoose:
      return detail::rec_legal_winner(true, game.operand(), run);
  }
  return Player::Bot;
}

Player winner(const Game& game, const Run& run) {
  if (auto fi = first_illegal(game, run)) return opponent(run[*fi].player);
  return legal_run_winner(game, run);
}

}  // namespace brec
