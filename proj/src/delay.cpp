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

#include "brec/delay.hpp"

#include <algorithm>

#include "brec/semantics.hpp"

namespace brec {

namespace {

std::vector<const LabMove*> moves_of(const Run& run, Player p) {
  std::vector<const LabMove*> out;
  for (const auto& lm : run)
    if (lm.player == p) out.push_back(&lm);
  return out;
}

// For each p-labeled move (in order), the number of opponent moves before it.
std::vector<std::size_t> opponent_moves_before(const Run& run, Player p) {
  std::vector<std::size_t> out;
  std::size_t seen = 0;
  for (const auto& lm : run) {
    if (lm.player == p)
      out.push_back(seen);
    else
      ++seen;
  }
  return out;
}

bool same_subsequence(const Run& a, const Run& b, Player p) {
  auto x = moves_of(a, p);
  auto y = moves_of(b, p);
  return std::equal(x.begin(), x.end(), y.begin(), y.end(),
                    [](const LabMove* l, const LabMove* r) {
                      return l->move == r->move;
                    });
}

}  // namespace

bool is_delay(Player p, const Run& omega, const Run& gamma) {
  if (!same_subsequence(omega, gamma, Player::Top) ||
      !same_subsequence(omega, gamma, Player::Bot))
    return false;
  auto in_omega = opponent_moves_before(omega, p);
  auto in_gamma = opponent_moves_before(gamma, p);
  for (std::size_t k = 0; k < in_omega.size(); ++k) {
    if (in_omega[k] < in_gamma[k]) return false;
  }
  return true;
}

std::vector<Run> enumerate_delays(Player p, const Run& gamma) {
  auto mine = moves_of(gamma, p);
  auto theirs = moves_of(gamma, opponent(p));
  auto floor = opponent_moves_before(gamma, p);

  std::vector<Run> out;
  Run current;
  current.reserve(gamma.size());
  // p's i-th move may be placed once at least floor[i] opponent moves are in.
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == mine.size() && j == theirs.size()) {
      out.push_back(current);
      return;
    }
    if (i < mine.size() && j >= floor[i]) {
      current.push_back(*mine[i]);
      self(self, i + 1, j);
      current.pop_back();
    }
    if (j < theirs.size()) {
      current.push_back(*theirs[j]);
      self(self, i, j + 1);
      current.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

bool is_p_illegal(const Game& game, const Run& run, Player p) {
  auto fi = first_illegal(game, run);
  return fi && run[*fi].player == p;
}

std::vector<LabMove> labeled_alphabet(const std::vector<Move>& moves) {
  std::vector<LabMove> out;
  for (const auto& m : moves) {
    out.push_back({Player::Top, m});
    out.push_back({Player::Bot, m});
  }
  return out;
}

RunSpace::RunSpace(std::vector<LabMove> letters, std::size_t max_len,
                   StaticCheckLimits limits)
    : letters_(std::move(letters)) {
  std::map<LabMove, std::size_t> digit;
  for (std::size_t i = 0; i < letters_.size(); ++i) digit.emplace(letters_[i], i);
  if (digit.size() != letters_.size())
    throw std::invalid_argument("RunSpace letters must be distinct");

  // Runs of length len occupy [offset[len], offset[len + 1]) in base-m order.
  const std::size_t m = letters_.size();
  std::vector<std::size_t> offset{0};
  std::size_t layer = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (offset.back() + layer > limits.max_runs)
      throw ResourceLimitExceeded(
          "run enumeration exceeds " + std::to_string(limits.max_runs) +
          " runs (alphabet " + std::to_string(m) + " labmoves, max length " +
          std::to_string(max_len) + ")");
    offset.push_back(offset.back() + layer);
    layer *= m;
  }

  runs_.reserve(offset.back());
  runs_.emplace_back();
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::size_t r = offset[len - 1]; r < offset[len]; ++r) {
      for (const auto& l : letters_) {
        Run next = runs_[r];
        next.push_back(l);
        runs_.push_back(std::move(next));
      }
    }
  }

  auto index_of = [&](const Run& run) {
    std::size_t idx = 0;
    for (const auto& lm : run) idx = idx * m + digit.at(lm);
    return offset[run.size()] + idx;
  };
  top_delays_.resize(runs_.size());
  bot_delays_.resize(runs_.size());
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    for (const auto& d : enumerate_delays(Player::Top, runs_[i]))
      top_delays_[i].push_back(index_of(d));
    for (const auto& d : enumerate_delays(Player::Bot, runs_[i]))
      bot_delays_[i].push_back(index_of(d));
  }
}

std::optional<StaticViolation> find_static_violation(const Game& game,
                                                     const RunSpace& space) {
  std::vector<Player> winners(space.size());
  for (std::size_t i = 0; i < space.size(); ++i)
    winners[i] = winner(game, space.run(i));
  for (std::size_t i = 0; i < space.size(); ++i) {
    Player p = winners[i];
    for (std::size_t d : space.delays(p, i)) {
      if (winners[d] != p) return StaticViolation{p, space.run(i), space.run(d)};
    }
  }
  return std::nullopt;
}

std::optional<StaticViolation> find_static_violation(
    const Game& game, std::size_t max_len, const std::vector<Move>& alphabet,
    StaticCheckLimits limits) {
  RunSpace space(labeled_alphabet(alphabet), max_len, limits);
  return find_static_violation(game, space);
}

bool is_static_bounded(const Game& game, std::size_t max_len,
                       const std::vector<Move>& alphabet,
                       StaticCheckLimits limits) {
  return !find_static_violation(game, max_len, alphabet, limits).has_value();
}

std::string fresh_token(const Game& game) {
  auto used = game_tokens(game);
  for (char c = 'z'; c >= 'a'; --c) {
    std::string t(1, c);
    if (!used.contains(t)) return t;
  }
  for (int i = 0;; ++i) {
    std::string t = "fresh" + std::to_string(i);
    if (!used.contains(t)) return t;
  }
}

namespace {

std::vector<Move> lift(const Game& g, const std::string& fresh) {
  switch (g.op()) {
    case GameOp::Tree: {
      auto toks = g.base_tree().tokens();
      std::vector<Move> out(toks.begin(), toks.end());
      out.push_back(fresh);
      return out;
    }
    case GameOp::Neg: return lift(g.operand(), fresh);
    case GameOp::Or: {
      std::vector<Move> out;
      for (const auto& m : lift(g.left(), fresh)) out.push_back("1." + m);
      for (const auto& m : lift(g.right(), fresh)) out.push_back("2." + m);
      return out;
    }
    default: {
      std::vector<Move> out;
      if (g.op() == GameOp::Tight || g.op() == GameOp::CoTight) {
        out.push_back(":");
        out.push_back("0:");
      }
      for (const auto& m : lift(g.operand(), fresh)) {
        out.push_back("." + m);
        out.push_back("0." + m);
      }
      return out;
    }
  }
}

}  // namespace

std::vector<Move> default_alphabet(const Game& game) {
  return lift(game, fresh_token(game));
}

}  // namespace brec
