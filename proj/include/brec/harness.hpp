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

#ifndef BREC_HARNESS_HPP_
#define BREC_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "brec/game.hpp"
#include "brec/semantics.hpp"
#include "brec/strategies.hpp"
#include "brec/types.hpp"

namespace brec {

using Rng = std::mt19937_64;

/// Uniform draw in [0, n). n must be positive.
std::size_t draw(Rng& rng, std::size_t n);

// ---------------------------------------------------------------------------
// Transcripts

/// Leaf map recorded after the machine processed the adversary move that
/// precedes it; `after_moves` counts the labmoves written before the record.
struct FSnapshot {
  std::size_t after_moves = 0;
  LeafMap f;

  friend bool operator==(const FSnapshot&, const FSnapshot&) = default;
};

/// File format (UTF-8 text, one item per line):
///   #game <dsl>
///   #machine e1|e2|none
///   #seed <int>
///   T <move> | B <move>
///   #f <leaf>=<bits>,...      (E2 only, after each processed adversary move)
struct Transcript {
  std::string game_text;
  std::string machine = "none";
  std::int64_t seed = 0;
  Run moves;
  std::vector<FSnapshot> snapshots;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

std::string serialize_transcript(const Transcript& t);
Transcript parse_transcript(std::string_view text);

/// Number of component-2 moves among the first `after_moves` labmoves.
std::size_t tight_position_length(const Transcript& t, const FSnapshot& s);

// ---------------------------------------------------------------------------
// Adversaries

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual void reset() {}
  /// A Bot move to play at `position`, or nullopt to pass for good.
  virtual std::optional<Move> offer(const Run& position, Rng& rng) = 0;
};

/// Surface moves worth trying in `game`: base tokens lifted through each
/// operator, with recurrence addresses of length <= max_address_len.
std::vector<Move> candidate_moves(const Game& game,
                                  std::size_t max_address_len);

/// Picks uniformly among the candidate moves that are legal for Bot, trying
/// them in a random order. Passes for good with `pass_probability` per offer
/// or when nothing is legal.
class RandomLegalAdversary : public Adversary {
 public:
  RandomLegalAdversary(Game game, std::vector<Move> candidates,
                       double pass_probability = 0.05);
  std::optional<Move> offer(const Run& position, Rng& rng) override;

 private:
  Game game_;
  std::vector<Move> candidates_;
  double pass_probability_;
};

/// Replays a fixed list of moves verbatim, then passes.
class ScriptedAdversary : public Adversary {
 public:
  explicit ScriptedAdversary(std::vector<Move> script)
      : script_(std::move(script)) {}
  void reset() override { next_ = 0; }
  std::optional<Move> offer(const Run&, Rng&) override {
    if (next_ >= script_.size()) return std::nullopt;
    return script_[next_++];
  }

 private:
  std::vector<Move> script_;
  std::size_t next_ = 0;
};

/// One move per line, either "<move>" or "B <move>"; blank lines skipped.
std::vector<Move> parse_script(std::string_view text);

// ---------------------------------------------------------------------------
// Matches

struct MatchConfig {
  std::size_t max_moves = 40;
  std::uint64_t seed = 1;
  bool interleaving_fuzz = false;
};

/// Alternates adversary offers and machine reactions until the adversary
/// passes or max_moves labmoves have been written. The machine always reacts
/// to each adversary move on its own view of the play (adversary moves in
/// order, each followed by the machine's whole batch). Without fuzz the
/// batch is written immediately; with fuzz, batches queue up and further
/// adversary offers may be written before a queued batch, never inside one.
Transcript run_match(const Game& game, Machine& machine, Adversary& adversary,
                     const MatchConfig& cfg);

// ---------------------------------------------------------------------------
// Base game generation

struct GeneratedTree {
  GameTree tree;
  std::size_t rejections = 0;
};

class GenerationLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Draws random trees (winner labels and distinct (player, token) edges from
/// a small token pool) and returns the first one that passes
/// is_static_bounded with its own tokens plus a fresh one at length
/// `static_len`. With max_depth >= 1 and max_branch >= 1 the root has at
/// least one edge.
GeneratedTree random_static_tree(std::uint64_t seed, std::size_t max_depth,
                                 std::size_t max_branch,
                                 std::size_t static_len = 4,
                                 std::size_t max_attempts = 100000);

/// Every tree of depth <= max_depth with at most max_edges edges per node,
/// edge keys drawn from {T,B} x tokens.
std::vector<GameTree> enumerate_trees(std::size_t max_depth,
                                      std::size_t max_edges,
                                      const std::vector<std::string>& tokens);

/// The tree's tokens plus one fresh token.
std::vector<Move> tree_alphabet(const GameTree& tree);

/// Four loose surface moves over the tree's tokens: ".t1", "0.t1", ".t2",
/// "1.t2" (a fresh token fills in for missing ones).
std::vector<Move> loose_alphabet(const GameTree& tree);

// ---------------------------------------------------------------------------
// Verification

/// The A of Or(CoTight(Neg A), Loose A), or nullopt.
std::optional<Game> e1_base(const Game& game);
/// The A of Or(CoLoose(Neg A), Tight A), or nullopt.
std::optional<Game> e2_base(const Game& game);

struct ProjectionRow {
  Bits branch;
  Run projection;
  Player winner;
};

/// Thread-wise breakdown of one recurrence component (after peeling Neg).
struct ComponentReport {
  int component = 0;  // 0: the whole game, 1/2: disjunct
  std::string op;
  bool swapped = false;  // run labels were swapped by enclosing negations
  Player winner = Player::Bot;
  std::vector<ProjectionRow> rows;
};

struct CounterpartRow {
  Bits v;
  std::optional<Bits> z;        // find_counterpart_z
  std::optional<Bits> witness;  // f-history witness
  std::string failure;
};

struct E2Audit {
  std::vector<std::string> problems;  // prefix-freeness, domain and growth issues
  std::vector<CounterpartRow> counterparts;
  bool ok() const;
};

struct VerifyReport {
  RunStatus status;
  Player winner = Player::Bot;
  std::vector<ComponentReport> components;
  std::optional<E2Audit> e2;
  /// Machine-specific property failures (empty for machine "none").
  std::vector<std::string> violations;

  std::string to_text() const;
};

VerifyReport verify_transcript(const Game& game, const Transcript& t);

/// Prefix-freeness and growth of every record, and for records within the
/// first `legal_prefix` labmoves, domain equal to the current leaves. The
/// leaf maps in order, starting with the initial {"" -> ""}, go to `history`.
std::vector<std::string> audit_leaf_maps(
    const Transcript& t, std::vector<LeafMap>* history,
    std::size_t legal_prefix = static_cast<std::size_t>(-1));

/// Property checks of a finished E1 match. The transcript must be the
/// machine's play or a Top-delay of it (fuzzed interleavings), the machine
/// must not be the first offender and must win; on the machine's own view
/// of the play the mirror law holds at every iteration boundary.
std::vector<std::string> check_e1_match(const Game& base, const Transcript& t);

/// Property checks of a finished E2 match: as for E1, plus the leaf-map audit
/// after every reaction and a counterpart z for every representative of the
/// final tight-side run.
std::vector<std::string> check_e2_match(const Game& base, const Transcript& t);

}  // namespace brec

#endif  // BREC_HARNESS_HPP_
