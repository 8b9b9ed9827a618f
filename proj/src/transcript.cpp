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

#include <charconv>

#include "brec/harness.hpp"

namespace brec {

std::string serialize_transcript(const Transcript& t) {
  std::string out;
  out += "#game " + t.game_text + "\n";
  out += "#machine " + t.machine + "\n";
  out += "#seed " + std::to_string(t.seed) + "\n";
  std::size_t snap = 0;
  auto flush_snapshots = [&](std::size_t written) {
    while (snap < t.snapshots.size() &&
           t.snapshots[snap].after_moves == written) {
      out += "#f " + format_leaf_map(t.snapshots[snap].f) + "\n";
      ++snap;
    }
  };
  flush_snapshots(0);
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    out += format_labmove(t.moves[i]);
    out += '\n';
    flush_snapshots(i + 1);
  }
  return out;
}

Transcript parse_transcript(std::string_view text) {
  Transcript t;
  bool have_game = false, have_machine = false, have_seed = false;
  std::size_t offset = 0;
  while (offset < text.size()) {
    std::size_t nl = text.find('\n', offset);
    std::string_view line = text.substr(
        offset, nl == std::string_view::npos ? std::string_view::npos
                                             : nl - offset);
    std::size_t line_start = offset;
    offset = nl == std::string_view::npos ? text.size() : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    auto header = [&](std::string_view key) -> std::optional<std::string_view> {
      if (line.size() > key.size() && line.substr(0, key.size()) == key &&
          line[key.size()] == ' ')
        return line.substr(key.size() + 1);
      return std::nullopt;
    };

    if (line[0] != '#') {
      try {
        t.moves.push_back(parse_labmove(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad labmove line: ") + e.what(),
                         line_start + e.position());
      }
    } else if (auto v = header("#game")) {
      t.game_text = std::string(*v);
      have_game = true;
    } else if (auto v = header("#machine")) {
      t.machine = std::string(*v);
      if (t.machine != "e1" && t.machine != "e2" && t.machine != "none")
        throw ParseError("unknown machine '" + t.machine + "'", line_start);
      have_machine = true;
    } else if (auto v = header("#seed")) {
      auto [p, ec] = std::from_chars(v->data(), v->data() + v->size(), t.seed);
      if (ec != std::errc() || p != v->data() + v->size())
        throw ParseError("bad seed", line_start);
      have_seed = true;
    } else if (auto v = header("#f")) {
      try {
        t.snapshots.push_back({t.moves.size(), parse_leaf_map(*v)});
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad leaf map: ") + e.what(), line_start);
      }
    } else {
      throw ParseError("unknown header line", line_start);
    }
  }
  if (!have_game || !have_machine || !have_seed)
    throw ParseError("missing #game, #machine or #seed header", 0);
  return t;
}

std::size_t tight_position_length(const Transcript& t, const FSnapshot& s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.after_moves && i < t.moves.size(); ++i) {
    auto c = split_component(t.moves[i].move);
    if (c && c->first == 2) ++n;
  }
  return n;
}

}  // namespace brec
