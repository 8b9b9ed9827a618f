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

#include <algorithm>
#include <map>
#include <mutex>

#include "brec/delay.hpp"
#include "brec/harness.hpp"

namespace brec {

namespace {

struct EdgeKey {
  Player player;
  std::string token;
};

std::vector<EdgeKey> edge_keys(const std::vector<std::string>& tokens) {
  std::vector<EdgeKey> keys;
  for (Player p : {Player::Top, Player::Bot})
    for (const auto& t : tokens) keys.push_back({p, t});
  return keys;
}

GameTree random_tree(Rng& rng, std::size_t depth, std::size_t max_branch,
                     const std::vector<EdgeKey>& keys, bool root) {
  GameTree t;
  t.winner = draw(rng, 2) == 0 ? Player::Top : Player::Bot;
  if (depth == 0 || max_branch == 0) return t;
  std::size_t k = draw(rng, max_branch + 1);
  if (root && k == 0) k = 1;
  k = std::min(k, keys.size());
  std::vector<std::size_t> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = 0; i < k; ++i)
    std::swap(order[i], order[i + draw(rng, order.size() - i)]);
  std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& key = keys[order[i]];
    t.edges.push_back({key.player, key.token,
                       random_tree(rng, depth - 1, max_branch, keys, false)});
  }
  return t;
}

// Run spaces depend only on the labeled alphabet and length; share them.
const RunSpace& cached_space(const std::vector<Move>& alphabet,
                             std::size_t max_len) {
  static std::mutex mu;
  static std::map<std::pair<std::vector<Move>, std::size_t>, RunSpace> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(alphabet, max_len);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, RunSpace(labeled_alphabet(alphabet), max_len))
             .first;
  return it->second;
}

}  // namespace

std::vector<Move> tree_alphabet(const GameTree& tree) {
  auto toks = tree.tokens();
  std::vector<Move> out(toks.begin(), toks.end());
  out.push_back(fresh_token(Game::tree(tree)));
  return out;
}

GeneratedTree random_static_tree(std::uint64_t seed, std::size_t max_depth,
                                 std::size_t max_branch,
                                 std::size_t static_len,
                                 std::size_t max_attempts) {
  Rng rng(seed);
  std::vector<std::string> pool;
  for (std::size_t i = 0; i < std::max<std::size_t>(2, max_branch); ++i)
    pool.emplace_back(1, static_cast<char>('a' + i));
  auto keys = edge_keys(pool);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    GameTree t = random_tree(rng, max_depth, max_branch, keys, true);
    const RunSpace& space = cached_space(tree_alphabet(t), static_len);
    if (!find_static_violation(Game::tree(t), space)) return {t, attempt};
  }
  throw GenerationLimitExceeded("no static tree found in " +
                                std::to_string(max_attempts) + " attempts");
}

std::vector<GameTree> enumerate_trees(std::size_t max_depth,
                                      std::size_t max_edges,
                                      const std::vector<std::string>& tokens) {
  if (max_depth == 0) {
    GameTree bot, top;
    bot.winner = Player::Bot;
    top.winner = Player::Top;
    return {bot, top};
  }
  auto children = enumerate_trees(max_depth - 1, max_edges, tokens);
  auto keys = edge_keys(tokens);
  std::vector<GameTree> out;

  // Subsets of keys (in key order) of size <= max_edges, then every
  // assignment of child trees to the chosen keys.
  std::vector<std::size_t> chosen;
  auto emit = [&](auto&& self_assign, std::size_t slot, GameTree& t) -> void {
    if (slot == chosen.size()) {
      out.push_back(t);
      return;
    }
    for (const auto& c : children) {
      t.edges.push_back({keys[chosen[slot]].player, keys[chosen[slot]].token,
                         c});
      self_assign(self_assign, slot + 1, t);
      t.edges.pop_back();
    }
  };
  auto subsets = [&](auto&& self, std::size_t from) -> void {
    for (Player w : {Player::Bot, Player::Top}) {
      GameTree t;
      t.winner = w;
      emit(emit, 0, t);
    }
    if (chosen.size() == max_edges) return;
    for (std::size_t k = from; k < keys.size(); ++k) {
      chosen.push_back(k);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  subsets(subsets, 0);
  return out;
}

std::vector<Move> loose_alphabet(const GameTree& tree) {
  auto toks = tree.tokens();
  std::vector<std::string> t(toks.begin(), toks.end());
  std::string fresh = fresh_token(Game::tree(tree));
  while (t.size() < 2) t.push_back(t.empty() || t.back() != fresh ? fresh
                                                                  : fresh + "2");
  return {"." + t[0], "0." + t[0], "." + t[1], "1." + t[1]};
}

}  // namespace brec
