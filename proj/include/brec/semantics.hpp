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

#ifndef BREC_SEMANTICS_HPP_
#define BREC_SEMANTICS_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "brec/game.hpp"
#include "brec/types.hpp"

namespace brec {

/// Legal, or illegal with the label and index of the first illegal labmove.
struct RunStatus {
  bool legal = true;
  Player offender = Player::Top;
  std::size_t first_bad_index = 0;

  static RunStatus Legal() { return {}; }
  static RunStatus IllegalBy(Player p, std::size_t index) {
    return {false, p, index};
  }

  friend bool operator==(const RunStatus&, const RunStatus&) = default;
};

std::ostream& operator<<(std::ostream& os, const RunStatus& s);
std::string to_string(const RunStatus& s);

/// Index of the first labmove whose addition makes the run illegal.
std::optional<std::size_t> first_illegal(const Game& game, const Run& run);

RunStatus classify(const Game& game, const Run& run);

/// Whether `position` extended by `lm` is still legal. Throws
/// PreconditionError when `position` itself is illegal.
bool legal(const Game& game, const Run& position, const LabMove& lm);

/// Winner of a finite run: the opponent of the first offender for illegal
/// runs, the game's own win condition otherwise.
Player winner(const Game& game, const Run& run);

/// Winner of a run that is already known to be legal.
Player legal_run_winner(const Game& game, const Run& run);

/// The run played in component 1 or 2 of a parallel disjunction: moves
/// prefixed "i." with the prefix stripped.
Run component_run(const Run& run, int component);

/// Splits a disjunction move "1.x" / "2.x" into (component, rest).
std::optional<std::pair<int, std::string_view>> split_component(
    std::string_view move) noexcept;

}  // namespace brec

#endif  // BREC_SEMANTICS_HPP_
