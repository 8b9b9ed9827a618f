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

#include "brec/game.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace brec {

const GameTree* GameTree::child(Player player, std::string_view token) const {
  for (const auto& e : edges) {
    if (e.player == player && e.token == token) return &e.child;
  }
  return nullptr;
}

std::size_t GameTree::depth() const {
  std::size_t d = 0;
  for (const auto& e : edges) d = std::max(d, 1 + e.child.depth());
  return d;
}

std::set<std::string> GameTree::tokens() const {
  std::set<std::string> out;
  for (const auto& e : edges) {
    out.insert(e.token);
    out.merge(e.child.tokens());
  }
  return out;
}

bool operator==(const GameTree& a, const GameTree& b) {
  return a.winner == b.winner && a.edges == b.edges;
}

bool is_valid_token(std::string_view token) noexcept {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '-';
  });
}

struct Game::Node {
  GameOp op = GameOp::Tree;
  std::shared_ptr<const GameTree> tree;
  std::optional<Game> a;
  std::optional<Game> b;
};

GameOp Game::op() const noexcept { return node_->op; }

bool Game::is_recurrence() const noexcept {
  auto o = op();
  return o == GameOp::Tight || o == GameOp::Loose || o == GameOp::CoTight ||
         o == GameOp::CoLoose;
}

Game Game::tree(GameTree t) {
  auto n = std::make_shared<Node>();
  n->op = GameOp::Tree;
  n->tree = std::make_shared<const GameTree>(std::move(t));
  return Game(std::move(n));
}

Game Game::neg(Game g) {
  auto n = std::make_shared<Node>();
  n->op = GameOp::Neg;
  n->a = std::move(g);
  return Game(std::move(n));
}

Game Game::disj(Game left, Game right) {
  auto n = std::make_shared<Node>();
  n->op = GameOp::Or;
  n->a = std::move(left);
  n->b = std::move(right);
  return Game(std::move(n));
}

Game Game::tight(Game g) {
  auto n = std::make_shared<Node>();
  n->op = GameOp::Tight;
  n->a = std::move(g);
  return Game(std::move(n));
}

Game Game::loose(Game g) {
  auto n = std::make_shared<Node>();
  n->op = GameOp::Loose;
  n->a = std::move(g);
  return Game(std::move(n));
}

Game Game::co_tight(Game g) {
  auto n = std::make_shared<Node>();
  n->op = GameOp::CoTight;
  n->a = std::move(g);
  return Game(std::move(n));
}

Game Game::co_loose(Game g) {
  auto n = std::make_shared<Node>();
  n->op = GameOp::CoLoose;
  n->a = std::move(g);
  return Game(std::move(n));
}

namespace {

Game make_unary(GameOp op, Game g) {
  switch (op) {
    case GameOp::Neg: return Game::neg(std::move(g));
    case GameOp::Tight: return Game::tight(std::move(g));
    case GameOp::Loose: return Game::loose(std::move(g));
    case GameOp::CoTight: return Game::co_tight(std::move(g));
    case GameOp::CoLoose: return Game::co_loose(std::move(g));
    default: throw std::logic_error("not a unary operator");
  }
}

}  // namespace

const GameTree& Game::base_tree() const {
  if (op() != GameOp::Tree) throw std::logic_error("not a tree game");
  return *node_->tree;
}

const Game& Game::operand() const {
  if (!node_->a) throw std::logic_error("tree game has no operand");
  return *node_->a;
}

const Game& Game::right() const {
  if (!node_->b) throw std::logic_error("not a disjunction");
  return *node_->b;
}

bool operator==(const Game& x, const Game& y) {
  if (x.node_ == y.node_) return true;
  if (x.op() != y.op()) return false;
  switch (x.op()) {
    case GameOp::Tree: return x.base_tree() == y.base_tree();
    case GameOp::Or:
      return x.left() == y.left() && x.right() == y.right();
    default: return x.operand() == y.operand();
  }
}

Game normal_form(const Game& g) {
  switch (g.op()) {
    case GameOp::Tree: return g;
    case GameOp::Or:
      return Game::disj(normal_form(g.left()), normal_form(g.right()));
    case GameOp::CoTight:
      return Game::neg(Game::tight(Game::neg(normal_form(g.operand()))));
    case GameOp::CoLoose:
      return Game::neg(Game::loose(Game::neg(normal_form(g.operand()))));
    default: return make_unary(g.op(), normal_form(g.operand()));
  }
}

std::set<std::string> game_tokens(const Game& g) {
  switch (g.op()) {
    case GameOp::Tree: return g.base_tree().tokens();
    case GameOp::Or: {
      auto out = game_tokens(g.left());
      out.merge(game_tokens(g.right()));
      return out;
    }
    default: return game_tokens(g.operand());
  }
}

Game e1_shape(const Game& base) {
  return Game::disj(Game::co_tight(Game::neg(base)), Game::loose(base));
}

Game e2_shape(const Game& base) {
  return Game::disj(Game::co_loose(Game::neg(base)), Game::tight(base));
}

// ---------------------------------------------------------------------------
// DSL

namespace {

struct Token {
  enum Kind { Open, Close, Atom, End } kind;
  std::string_view text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ >= src_.size()) return {Token::End, {}, pos_};
    char c = src_[pos_];
    if (c == '(') return {Token::Open, src_.substr(pos_++, 1), pos_ - 1};
    if (c == ')') return {Token::Close, src_.substr(pos_++, 1), pos_ - 1};
    std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] != '(' && src_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    return {Token::Atom, src_.substr(start, pos_ - start), start};
  }

  Token peek() {
    std::size_t saved = pos_;
    Token t = next();
    pos_ = saved;
    return t;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Game game() {
    expect(Token::Open, "'('");
    Token head = expect(Token::Atom, "an operator");
    if (head.text == "node") return Game::tree(tree_body(head.pos));
    std::optional<GameOp> op;
    if (head.text == "neg") op = GameOp::Neg;
    else if (head.text == "tight") op = GameOp::Tight;
    else if (head.text == "loose") op = GameOp::Loose;
    else if (head.text == "co-tight") op = GameOp::CoTight;
    else if (head.text == "co-loose") op = GameOp::CoLoose;
    if (op) {
      Game g = make_unary(*op, game());
      expect(Token::Close, "')'");
      return g;
    }
    if (head.text == "or") {
      Game a = game();
      Game b = game();
      expect(Token::Close, "')'");
      return Game::disj(std::move(a), std::move(b));
    }
    throw ParseError("unknown operator '" + std::string(head.text) + "'",
                     head.pos);
  }

  GameTree tree() {
    expect(Token::Open, "'('");
    Token head = expect(Token::Atom, "'node'");
    if (head.text != "node")
      throw ParseError("expected 'node', got '" + std::string(head.text) + "'",
                       head.pos);
    return tree_body(head.pos);
  }

  void finish() {
    Token t = lex_.next();
    if (t.kind != Token::End)
      throw ParseError("trailing input after game expression", t.pos);
  }

 private:
  // After "(node": winner label, then edges, then ')'.
  GameTree tree_body(std::size_t) {
    GameTree t;
    t.winner = player(expect(Token::Atom, "a winner label T or B"));
    while (lex_.peek().kind == Token::Open) {
      Token open = lex_.next();
      TreeEdge e;
      e.player = player(expect(Token::Atom, "an edge label T or B"));
      Token tok = expect(Token::Atom, "an edge token");
      if (!is_valid_token(tok.text))
        throw ParseError("forbidden character in token '" +
                             std::string(tok.text) + "'",
                         tok.pos);
      e.token = std::string(tok.text);
      if (t.child(e.player, e.token))
        throw ParseError("duplicate edge key (" +
                             std::string(1, label_char(e.player)) + ", " +
                             e.token + ")",
                         open.pos);
      e.child = tree();
      expect(Token::Close, "')'");
      t.edges.push_back(std::move(e));
    }
    expect(Token::Close, "')'");
    return t;
  }

  Player player(const Token& t) {
    if (t.text == "T") return Player::Top;
    if (t.text == "B") return Player::Bot;
    throw ParseError("expected T or B, got '" + std::string(t.text) + "'",
                     t.pos);
  }

  Token expect(Token::Kind kind, const char* what) {
    Token t = lex_.next();
    if (t.kind != kind) {
      std::string got = t.kind == Token::End ? "end of input"
                                             : "'" + std::string(t.text) + "'";
      throw ParseError(std::string("expected ") + what + ", got " + got, t.pos);
    }
    return t;
  }

  Lexer lex_;
};

void write_tree(std::string& out, const GameTree& t) {
  out += "(node ";
  out += label_char(t.winner);
  for (const auto& e : t.edges) {
    out += " (";
    out += label_char(e.player);
    out += ' ';
    out += e.token;
    out += ' ';
    write_tree(out, e.child);
    out += ')';
  }
  out += ')';
}

void write_game(std::string& out, const Game& g) {
  auto unary = [&](const char* name) {
    out += '(';
    out += name;
    out += ' ';
    write_game(out, g.operand());
    out += ')';
  };
  switch (g.op()) {
    case GameOp::Tree: write_tree(out, g.base_tree()); return;
    case GameOp::Neg: unary("neg"); return;
    case GameOp::Tight: unary("tight"); return;
    case GameOp::Loose: unary("loose"); return;
    case GameOp::CoTight: unary("co-tight"); return;
    case GameOp::CoLoose: unary("co-loose"); return;
    case GameOp::Or:
      out += "(or ";
      write_game(out, g.left());
      out += ' ';
      write_game(out, g.right());
      out += ')';
      return;
  }
}

}  // namespace

Game parse_game(std::string_view text) {
  Parser p(text);
  Game g = p.game();
  p.finish();
  return g;
}

GameTree parse_tree(std::string_view text) {
  Parser p(text);
  GameTree t = p.tree();
  p.finish();
  return t;
}

std::string serialize(const Game& g) {
  std::string out;
  write_game(out, g);
  return out;
}

std::string serialize(const GameTree& t) {
  std::string out;
  write_tree(out, t);
  return out;
}

}  // namespace brec
