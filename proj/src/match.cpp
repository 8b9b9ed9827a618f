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

#include <deque>
#include <numeric>

#include "brec/harness.hpp"

namespace brec {

std::size_t draw(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

namespace {

std::vector<Bits> bitstrings_up_to(std::size_t max_len) {
  std::vector<Bits> out{Bits{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      out.push_back(out[i] + '0');
      out.push_back(out[i] + '1');
    }
    begin = end;
  }
  return out;
}

}  // namespace

std::vector<Move> candidate_moves(const Game& game,
                                  std::size_t max_address_len) {
  switch (game.op()) {
    case GameOp::Tree: {
      auto toks = game.base_tree().tokens();
      return {toks.begin(), toks.end()};
    }
    case GameOp::Neg: return candidate_moves(game.operand(), max_address_len);
    case GameOp::Or: {
      std::vector<Move> out;
      for (auto& m : candidate_moves(game.left(), max_address_len))
        out.push_back("1." + m);
      for (auto& m : candidate_moves(game.right(), max_address_len))
        out.push_back("2." + m);
      return out;
    }
    default: {
      std::vector<Move> out;
      auto inner = candidate_moves(game.operand(), max_address_len);
      auto addresses = bitstrings_up_to(max_address_len);
      bool tight = game.op() == GameOp::Tight || game.op() == GameOp::CoTight;
      for (const auto& w : addresses) {
        if (tight && w.size() < max_address_len) out.push_back(w + ":");
        for (const auto& m : inner) out.push_back(w + "." + m);
      }
      return out;
    }
  }
}

RandomLegalAdversary::RandomLegalAdversary(Game game,
                                           std::vector<Move> candidates,
                                           double pass_probability)
    : game_(std::move(game)),
      candidates_(std::move(candidates)),
      pass_probability_(pass_probability) {}

std::optional<Move> RandomLegalAdversary::offer(const Run& position,
                                                Rng& rng) {
  if (candidates_.empty() || first_illegal(game_, position))
    return std::nullopt;
  constexpr std::size_t kScale = 1'000'000;
  if (draw(rng, kScale) <
      static_cast<std::size_t>(pass_probability_ * static_cast<double>(kScale)))
    return std::nullopt;
  std::vector<std::size_t> order(candidates_.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[draw(rng, i)]);
  Run extended = position;
  extended.push_back({Player::Bot, {}});
  for (std::size_t idx : order) {
    extended.back().move = candidates_[idx];
    if (!first_illegal(game_, extended)) return candidates_[idx];
  }
  return std::nullopt;
}

std::vector<Move> parse_script(std::string_view text) {
  std::vector<Move> out;
  std::size_t offset = 0;
  while (offset < text.size()) {
    std::size_t nl = text.find('\n', offset);
    std::string_view line = text.substr(
        offset, nl == std::string_view::npos ? std::string_view::npos
                                             : nl - offset);
    std::size_t start = offset;
    offset = nl == std::string_view::npos ? text.size() : nl + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.size() > 2 && line.substr(0, 2) == "B ") line.remove_prefix(2);
    if (line.find_first_of(" \t") != std::string_view::npos)
      throw ParseError("script line must hold a single move", start);
    out.emplace_back(line);
  }
  return out;
}

Transcript run_match(const Game& game, Machine& machine, Adversary& adversary,
                     const MatchConfig& cfg) {
  if (cfg.max_moves < 1)
    throw std::invalid_argument("max_moves must be at least 1");
  Rng rng(cfg.seed);
  machine.reset();
  adversary.reset();

  Transcript t;
  t.game_text = serialize(game);
  t.machine = machine.name();
  t.seed = static_cast<std::int64_t>(cfg.seed);

  Run view;
  std::deque<Reaction> pending;
  auto write = [&](const Reaction& r) {
    for (const auto& m : r) t.moves.push_back({Player::Top, m});
  };

  while (t.moves.size() < cfg.max_moves) {
    if (!pending.empty() && draw(rng, 2) == 0) {
      write(pending.front());
      pending.pop_front();
      continue;
    }
    auto m = adversary.offer(t.moves, rng);
    if (!m) break;
    LabMove lm{Player::Bot, *m};
    t.moves.push_back(lm);
    view.push_back(lm);
    Reaction r = machine.react(view, lm);
    for (const auto& x : r) view.push_back({Player::Top, x});
    if (auto f = machine.leaf_map())
      t.snapshots.push_back({t.moves.size(), std::move(*f)});
    if (cfg.interleaving_fuzz)
      pending.push_back(std::move(r));
    else
      write(r);
  }
  for (const auto& r : pending) write(r);
  return t;
}

}  // namespace brec
