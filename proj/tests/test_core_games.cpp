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

#include <gtest/gtest.h>

#include "brec/delay.hpp"
#include "brec/game.hpp"
#include "brec/harness.hpp"
#include "brec/semantics.hpp"
#include "oracles.hpp"

namespace brec {
namespace {

const char* kA0 = "(node B (T a (node T)))";

Game a0() { return parse_game(kA0); }
LabMove T(const std::string& m) { return {Player::Top, m}; }
LabMove B(const std::string& m) { return {Player::Bot, m}; }

TEST(Player, OpponentIsAnInvolution) {
  for (Player p : {Player::Top, Player::Bot}) {
    EXPECT_NE(opponent(p), p);
    EXPECT_EQ(opponent(opponent(p)), p);
  }
}

TEST(ParseGame, TreeDenotation) {
  Game g = a0();
  ASSERT_EQ(g.op(), GameOp::Tree);
  const GameTree& t = g.base_tree();
  EXPECT_EQ(t.winner, Player::Bot);
  ASSERT_EQ(t.edges.size(), 1u);
  EXPECT_EQ(t.edges[0].player, Player::Top);
  EXPECT_EQ(t.edges[0].token, "a");
  EXPECT_EQ(t.edges[0].child.winner, Player::Top);
  EXPECT_TRUE(t.edges[0].child.edges.empty());
}

TEST(ParseGame, LooseWrapper) {
  Game g = parse_game("(loose (node B (T a (node T))))");
  ASSERT_EQ(g.op(), GameOp::Loose);
  EXPECT_EQ(g.operand(), a0());
}

TEST(ParseGame, E1Shape) {
  std::string text = std::string("(or (co-tight (neg ") + kA0 + ")) (loose " +
                     kA0 + "))";
  Game g = parse_game(text);
  EXPECT_EQ(g, e1_shape(a0()));
  ASSERT_TRUE(e1_base(g).has_value());
  EXPECT_EQ(*e1_base(g), a0());
  EXPECT_FALSE(e2_base(g).has_value());
}

TEST(ParseGame, SerializeRoundTrip) {
  for (const char* text :
       {"(node B)", kA0, "(node T (B a (node B)) (T a (node T (B b (node B)))))",
        "(or (co-loose (neg (node B))) (tight (node T)))",
        "(co-tight (loose (neg (node T (T x_1 (node B))))))"}) {
    Game g = parse_game(text);
    EXPECT_EQ(serialize(g), text);
    EXPECT_EQ(parse_game(serialize(g)), g);
  }
  // Whitespace is not significant; the canonical form is.
  EXPECT_EQ(serialize(parse_game("  (node   B\n (T a (node T)) ) ")), kA0);
}

TEST(ParseGame, Errors) {
  EXPECT_THROW(parse_game("(node B (T a (node T))"), ParseError);
  EXPECT_THROW(parse_game("(node B (T a (node T)) (T a (node B)))"), ParseError);
  EXPECT_THROW(parse_game("(node B (T a.b (node T)))"), ParseError);
  EXPECT_THROW(parse_game("(node B (T a:b (node T)))"), ParseError);
  EXPECT_THROW(parse_game("(node X)"), ParseError);
  EXPECT_THROW(parse_game("(star (node B))"), ParseError);
  EXPECT_THROW(parse_game("(node B) trailing"), ParseError);
  try {
    parse_game("(node B (T a (node Q)))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 19u);
  }
  // Same token for different players is fine.
  EXPECT_NO_THROW(parse_game("(node B (T a (node T)) (B a (node B)))"));
}

TEST(ParseLabMove, Examples) {
  EXPECT_EQ(parse_labmove("T 2.01.a"), T("2.01.a"));
  EXPECT_EQ(parse_labmove("B 1.:"), B("1.:"));
  EXPECT_THROW(parse_labmove("X foo"), ParseError);
  EXPECT_THROW(parse_labmove("T "), ParseError);
  EXPECT_THROW(parse_labmove("T"), ParseError);
  EXPECT_THROW(parse_labmove("T a b"), ParseError);
  EXPECT_EQ(format_labmove(B("1.:")), "B 1.:");
}

TEST(Legal, Examples) {
  Game g = a0();
  EXPECT_TRUE(legal(g, {}, T("a")));
  EXPECT_FALSE(legal(g, {T("a")}, T("a")));
  EXPECT_FALSE(legal(g, {}, B("a")));
  EXPECT_TRUE(legal(Game::neg(g), {}, B("a")));
  EXPECT_FALSE(legal(Game::neg(g), {}, T("a")));
}

TEST(Legal, OrAgreesWithComponentOracle) {
  const GameTree& t = a0().base_tree();
  Game g = Game::disj(a0(), a0());
  EXPECT_TRUE(legal(g, {}, T("2.a")));
  // Oracle: the component run is the stripped "2." moves.
  EXPECT_FALSE(oracle::tree_first_bad(t, {T("a")}).has_value());
  EXPECT_FALSE(legal(g, {}, T("3.a")));
  EXPECT_FALSE(legal(g, {}, T("a")));
  EXPECT_FALSE(legal(g, {T("2.a")}, T("2.a")));
  EXPECT_TRUE(legal(g, {T("2.a")}, T("1.a")));
}

TEST(Legal, IllegalPositionIsReported) {
  EXPECT_THROW(legal(a0(), {B("a")}, T("a")), PreconditionError);
}

TEST(Classify, Examples) {
  Game g = a0();
  EXPECT_EQ(classify(g, {T("a")}), RunStatus::Legal());
  EXPECT_EQ(classify(g, {T("a"), T("a")}), RunStatus::IllegalBy(Player::Top, 1));
  EXPECT_EQ(classify(Game::loose(g), {B(":")}),
            RunStatus::IllegalBy(Player::Bot, 0));
  EXPECT_EQ(to_string(RunStatus::IllegalBy(Player::Top, 1)), "IllegalBy(T, 1)");
  EXPECT_EQ(to_string(RunStatus::Legal()), "Legal");
}

TEST(Winner, Examples) {
  Game g = a0();
  EXPECT_EQ(winner(g, {}), Player::Bot);
  EXPECT_EQ(winner(g, {T("a")}), Player::Top);
  EXPECT_EQ(winner(g, {T("a"), T("a")}), Player::Bot);
  Game o = Game::disj(g, g);
  brec::Run r{T("2.a")};
  EXPECT_EQ(winner(o, r), Player::Top);
  // Component oracle: Top wins some component on its stripped run.
  const GameTree& t = g.base_tree();
  EXPECT_EQ(oracle::tree_winner(t, {}), Player::Bot);
  EXPECT_EQ(oracle::tree_winner(t, {T("a")}), Player::Top);
  EXPECT_EQ(winner(o, {}), Player::Bot);
  EXPECT_EQ(winner(Game::neg(g), {}), Player::Top);
}

TEST(ComponentRun, StripsPrefix) {
  brec::Run r{T("1.a"), B("2.0.b"), T("2.:"), B("1..c")};
  EXPECT_EQ(component_run(r, 1), (brec::Run{T("a"), B(".c")}));
  EXPECT_EQ(component_run(r, 2), (brec::Run{B("0.b"), T(":")}));
}

// Small exhaustive families used by the properties below.
std::vector<GameTree> one_token_trees() { return enumerate_trees(2, 2, {"a"}); }

TEST(Properties, TreeSemanticsMatchOracle) {
  auto trees = one_token_trees();
  ASSERT_EQ(trees.size(), 722u);
  auto runs = oracle::all_runs(oracle::both_labels({"a", "z"}), 5);
  for (const auto& t : trees) {
    Game g = Game::tree(t);
    for (const auto& r : runs) {
      auto bad = oracle::tree_first_bad(t, r);
      RunStatus s = classify(g, r);
      ASSERT_EQ(s.legal, !bad.has_value());
      if (bad) {
        ASSERT_EQ(s.first_bad_index, *bad);
        ASSERT_EQ(s.offender, r[*bad].player);
      }
      ASSERT_EQ(winner(g, r), oracle::tree_winner(t, r));
    }
  }
}

TEST(Properties, RoleSwapInvolution) {
  auto runs = oracle::all_runs(oracle::both_labels({"a", "z"}), 6);
  for (const auto& t : one_token_trees()) {
    Game g = Game::tree(t);
    Game nn = Game::neg(Game::neg(g));
    for (const auto& r : runs) {
      ASSERT_EQ(winner(nn, r), winner(g, r));
      ASSERT_EQ(classify(nn, r), classify(g, r));
    }
  }
}

TEST(Properties, NormalFormLaw) {
  // Every depth <= 1 tree over one token, and a sample of depth-2 trees.
  std::vector<GameTree> trees = enumerate_trees(1, 2, {"a"});
  auto deep = one_token_trees();
  for (std::size_t i = 0; i < deep.size(); i += 37) trees.push_back(deep[i]);
  for (const auto& t : trees) {
    Game e = Game::tree(t);
    std::vector<std::pair<Game, Game>> pairs{
        {Game::co_tight(e), Game::neg(Game::tight(Game::neg(e)))},
        {Game::co_loose(e), Game::neg(Game::loose(Game::neg(e)))}};
    for (const auto& [co, nf] : pairs) {
      EXPECT_EQ(normal_form(co), nf);
      auto runs = oracle::all_runs(labeled_alphabet(default_alphabet(co)), 3);
      for (const auto& r : runs) {
        ASSERT_EQ(classify(co, r), classify(nf, r)) << serialize(co);
        ASSERT_EQ(winner(co, r), winner(nf, r)) << serialize(co);
      }
    }
  }
}

TEST(Properties, ClassifyMonotoneAndWinnerTotal) {
  Game g = Game::disj(Game::tight(a0()), Game::loose(Game::neg(a0())));
  auto runs = oracle::all_runs(labeled_alphabet(default_alphabet(g)), 3);
  for (const auto& r : runs) {
    RunStatus s = classify(g, r);
    Player w = winner(g, r);
    EXPECT_TRUE(w == Player::Top || w == Player::Bot);
    if (s.legal) {
      for (std::size_t k = 0; k <= r.size(); ++k)
        ASSERT_TRUE(classify(g, brec::Run(r.begin(), r.begin() + k)).legal);
    } else {
      ASSERT_EQ(r[s.first_bad_index].player, s.offender);
      ASSERT_TRUE(classify(g, brec::Run(r.begin(), r.begin() + s.first_bad_index)).legal);
      ASSERT_EQ(w, opponent(s.offender));
    }
  }
}

}  // namespace
}  // namespace brec
