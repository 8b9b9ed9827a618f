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

#ifndef BREC_TYPES_HPP_
#define BREC_TYPES_HPP_

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace brec {

/// The two players: Top is the machine, Bot the environment.
enum class Player : unsigned char { Top, Bot };

constexpr Player opponent(Player p) noexcept {
  return p == Player::Top ? Player::Bot : Player::Top;
}

constexpr char label_char(Player p) noexcept {
  return p == Player::Top ? 'T' : 'B';
}

std::ostream& operator<<(std::ostream& os, Player p);

/// A move string. Structure is interpreted layer by layer by the game it is
/// played in; the value itself is just text.
using Move = std::string;

/// A player-labeled move.
struct LabMove {
  Player player = Player::Top;
  Move move;

  friend bool operator==(const LabMove&, const LabMove&) = default;
  friend auto operator<=>(const LabMove&, const LabMove&) = default;
};

std::ostream& operator<<(std::ostream& os, const LabMove& lm);

/// A finite sequence of labmoves. Positions are runs.
using Run = std::vector<LabMove>;

/// Swaps every label of the run (the run as seen from the negated game).
Run role_swapped(const Run& run);

/// Finite bitstrings over {0,1}, possibly empty. Used for thread addresses,
/// branches and leaf-map values.
using Bits = std::string;

bool is_bitstring(std::string_view s) noexcept;

/// True iff `prefix` is an initial segment of `s` (not necessarily proper).
inline bool is_prefix(std::string_view prefix, std::string_view s) noexcept {
  return prefix.size() <= s.size() && s.substr(0, prefix.size()) == prefix;
}

inline bool is_proper_prefix(std::string_view prefix,
                             std::string_view s) noexcept {
  return prefix.size() < s.size() && is_prefix(prefix, s);
}

/// Raised by the text readers (game DSL, labmove lines, transcripts).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        pos_(pos) {}

  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses "T <move>" or "B <move>".
LabMove parse_labmove(std::string_view line);

std::string format_labmove(const LabMove& lm);

}  // namespace brec

#endif  // BREC_TYPES_HPP_
