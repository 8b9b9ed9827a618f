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

#ifndef BREC_RECURRENCE_HPP_
#define BREC_RECURRENCE_HPP_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "brec/game.hpp"
#include "brec/types.hpp"

namespace brec {

// Recurrence moves are "w:" (replicative, split thread w) or "w.a"
// (non-replicative, play a in every thread extending w), where w is a
// possibly empty bitstring. The address is read greedily up to the first
// '.' or ':'.

enum class RecMoveKind { Replicative, NonReplicative };

struct RecMove {
  RecMoveKind kind = RecMoveKind::NonReplicative;
  std::string_view address;
  std::string_view inner;  // empty for replicative moves
};

/// Parses one recurrence layer; nullopt for malformed moves (non-bit address,
/// missing separator, or trailing text after ':').
std::optional<RecMove> parse_rec_move(std::string_view move) noexcept;

enum class RecKind { Tight, Loose };

/// Node and leaf sets of the bitstring tree induced by a tight position.
struct BTView {
  std::set<Bits> nodes;
  std::set<Bits> leaves;
};

/// Nodes: the empty bitstring plus u0, u1 for every replicative move "u:".
std::set<Bits> bt_nodes(const Run& position);
std::set<Bits> bt_leaves(const Run& position);
BTView bt_view(const Run& position);

/// Raised by project() when the branch is not decisive for the run.
class NonDecisiveBranch : public std::invalid_argument {
 public:
  NonDecisiveBranch(const Bits& branch, const Bits& witness)
      : std::invalid_argument("branch '" + branch +
                              "' is not decisive: address '" + witness +
                              "' extends it; use a longer branch") {}
};

/// Every address occurring in a well-formed recurrence move of `run`.
std::set<Bits> run_addresses(const Run& run);

/// True iff no address of `run` properly extends `branch`.
bool is_decisive(const Run& run, std::string_view branch);

/// The base-game run along `branch`: keep "u.b" moves with u a prefix of
/// the branch, strip "u.". Replicative moves are dropped. Throws
/// NonDecisiveBranch if the branch is too short to pin a single thread class.
Run project(const Run& run, std::string_view branch);

/// Same as project() without the decisiveness check.
Run project_unchecked(const Run& run, std::string_view branch);

/// A finite set of decisive branches covering every projection class of the
/// run, in lexicographic order. For each node t of the prefix closure T of the
/// run's addresses (plus the empty string) that has a child outside T, the
/// least such child is included.
std::vector<Bits> representatives(const Run& run);

/// Legality of `lm` after `position` in a recurrence over `base`. Tight runs
/// require replicative moves to be made by Bot (Top for the co-dual) at a
/// leaf and non-replicative moves at a node; both kinds require every thread
/// projection to stay a legal run of the base game.
bool tight_legal(const Game& base, const Run& position, const LabMove& lm);
bool loose_legal(const Game& base, const Run& position, const LabMove& lm);

/// Winner of a legal run of Tight/Loose(base). Top wins iff Top wins the
/// base game on every representative projection.
Player rec_winner(RecKind kind, const Game& base, const Run& run);

namespace detail {

/// first_illegal for a recurrence node; `dual` selects the co-operator.
std::optional<std::size_t> rec_first_illegal(RecKind kind, bool dual,
                                             const Game& base, const Run& run);
Player rec_legal_winner(bool dual, const Game& base, const Run& run);

}  // namespace detail

}  // namespace brec

#endif  // BREC_RECURRENCE_HPP_
