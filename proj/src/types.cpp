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

#include "brec/types.hpp"

#include <algorithm>
#include <cctype>

namespace brec {

std::ostream& operator<<(std::ostream& os, Player p) {
  return os << label_char(p);
}

std::ostream& operator<<(std::ostream& os, const LabMove& lm) {
  return os << label_char(lm.player) << ' ' << lm.move;
}

Run role_swapped(const Run& run) {
  Run out = run;
  for (auto& lm : out) lm.player = opponent(lm.player);
  return out;
}

bool is_bitstring(std::string_view s) noexcept {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c == '0' || c == '1'; });
}

LabMove parse_labmove(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
    line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty labmove line", 0);
  LabMove lm;
  if (line[0] == 'T') {
    lm.player = Player::Top;
  } else if (line[0] == 'B') {
    lm.player = Player::Bot;
  } else {
    throw ParseError("bad label '" + std::string(1, line[0]) +
                         "' (expected T or B)",
                     0);
  }
  if (line.size() < 2 || line[1] != ' ')
    throw ParseError("expected a single space after the label", 1);
  std::string_view move = line.substr(2);
  if (move.empty()) throw ParseError("empty move", 2);
  for (std::size_t i = 0; i < move.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(move[i])))
      throw ParseError("whitespace inside move", i + 2);
  }
  lm.move = std::string(move);
  return lm;
}

std::string format_labmove(const LabMove& lm) {
  std::string out(1, label_char(lm.player));
  out += ' ';
  out += lm.move;
  return out;
}

}  // namespace brec
