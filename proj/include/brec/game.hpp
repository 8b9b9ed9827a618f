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

#ifndef BREC_GAME_HPP_
#define BREC_GAME_HPP_

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "brec/types.hpp"

namespace brec {

struct TreeEdge;

/// A finite constant game. Every node carries the winner of a run that stops
/// there; edges are keyed by (player, token).
struct GameTree {
  Player winner = Player::Bot;
  std::vector<TreeEdge> edges;

  /// Child reached by `player` playing `token`, or nullptr.
  const GameTree* child(Player player, std::string_view token) const;

  std::size_t depth() const;
  /// Every token used anywhere in the tree.
  std::set<std::string> tokens() const;

  friend bool operator==(const GameTree&, const GameTree&);
};

struct TreeEdge {
  Player player = Player::Top;
  std::string token;
  GameTree child;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// Token grammar: [a-z0-9_-]+.
bool is_valid_token(std::string_view token) noexcept;

/// Game expression operators. The co-duals are first-class so that they can
/// be checked against their negation normal form.
enum class GameOp { Tree, Neg, Or, Tight, Loose, CoTight, CoLoose };

/// An immutable game expression. Copies share structure.
class Game {
 public:
  static Game tree(GameTree t);
  static Game neg(Game g);
  static Game disj(Game left, Game right);
  static Game tight(Game g);
  static Game loose(Game g);
  static Game co_tight(Game g);
  static Game co_loose(Game g);

  GameOp op() const noexcept;
  const GameTree& base_tree() const;
  /// The operand of a unary operator, or the left operand of Or.
  const Game& operand() const;
  const Game& left() const { return operand(); }
  const Game& right() const;

  bool is_recurrence() const noexcept;

  friend bool operator==(const Game& a, const Game& b);

 private:
  struct Node;
  explicit Game(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Rewrites CoTight(E) to Neg(Tight(Neg E)) and CoLoose(E) to
/// Neg(Loose(Neg E)), recursively.
Game normal_form(const Game& g);

/// All tokens of every tree occurring in `g`.
std::set<std::string> game_tokens(const Game& g);

/// The E1 game: Or(CoTight(Neg A), Loose A).
Game e1_shape(const Game& base);
/// The E2 game: Or(CoLoose(Neg A), Tight A).
Game e2_shape(const Game& base);

/// Game DSL, s-expression form:
///   (node <T|B> (<T|B> <token> <subtree>)*)
///   (neg E) (or E E) (tight E) (loose E) (co-tight E) (co-loose E)
Game parse_game(std::string_view text);
GameTree parse_tree(std::string_view text);

/// Canonical single-line form; parse_game(serialize(g)) == g.
std::string serialize(const Game& g);
std::string serialize(const GameTree& t);

}  // namespace brec

#endif  // BREC_GAME_HPP_
