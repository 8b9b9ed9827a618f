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

#include "brec/strategies.hpp"

#include <stdexcept>

#include "brec/recurrence.hpp"
#include "brec/semantics.hpp"

namespace brec {

bool is_prefix_free(const LeafMap& f) {
  for (auto a = f.begin(); a != f.end(); ++a) {
    for (auto b = f.begin(); b != f.end(); ++b) {
      if (a != b && is_prefix(a->second, b->second)) return false;
    }
  }
  return true;
}

std::string format_leaf_map(const LeafMap& f) {
  std::string out;
  for (const auto& [leaf, bits] : f) {
    if (!out.empty()) out += ',';
    out += leaf;
    out += '=';
    out += bits;
  }
  return out;
}

LeafMap parse_leaf_map(std::string_view text) {
  LeafMap f;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view entry = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    std::size_t eq = entry.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("leaf map entry without '='", pos);
    std::string_view leaf = entry.substr(0, eq);
    std::string_view bits = entry.substr(eq + 1);
    if (!is_bitstring(leaf) || !is_bitstring(bits))
      throw ParseError("leaf map entries must be bitstrings", pos);
    if (!f.emplace(leaf, bits).second)
      throw ParseError("duplicate leaf in leaf map", pos);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return f;
}

Reaction grow_to_node(const Run& tight_position, std::string_view w) {
  auto nodes = bt_nodes(tight_position);
  Reaction out;
  for (std::size_t n = 0; n < w.size(); ++n) {
    Bits u(w.substr(0, n));
    if (!nodes.contains(u + '0')) {
      out.push_back(u + ':');
      nodes.insert(u + '0');
      nodes.insert(u + '1');
    }
  }
  return out;
}

Reaction e1_step(const Run& co_tight_run, const LabMove& adversary) {
  auto c = split_component(adversary.move);
  if (!c) return {};
  auto m = parse_rec_move(c->second);
  if (!m || m->kind != RecMoveKind::NonReplicative) return {};
  if (c->first == 1) return {"2." + std::string(c->second)};
  Reaction out;
  for (auto& r : grow_to_node(co_tight_run, m->address))
    out.push_back("1." + r);
  out.push_back("1." + std::string(c->second));
  return out;
}

namespace {

void check_pending(const Run& position, const LabMove& adversary) {
  if (position.empty() || position.back() != adversary)
    throw PreconditionError(
        "the adversary move must already be the last labmove of the position");
}

}  // namespace

Reaction e1_react(const Game& e1_game, const Run& position,
                  const std::optional<LabMove>& adversary) {
  if (!adversary || adversary->player != Player::Bot) return {};
  check_pending(position, *adversary);
  if (first_illegal(e1_game, position)) return {};
  return e1_step(component_run(position, 1), *adversary);
}

std::pair<E2State, Reaction> e2_step(const E2State& state,
                                     const LabMove& adversary) {
  auto c = split_component(adversary.move);
  if (!c) return {state, {}};
  auto m = parse_rec_move(c->second);
  if (!m) return {state, {}};
  E2State next = state;
  LeafMap& f = next.f;
  Reaction out;

  if (c->first == 2) {
    Bits w(m->address);
    if (m->kind == RecMoveKind::Replicative) {
      auto it = f.find(w);
      if (it == f.end()) return {state, {}};
      Bits v = it->second;
      f.erase(it);
      f[w + '0'] = v + '0';
      f[w + '1'] = v + '1';
      return {next, {}};
    }
    for (const auto& [leaf, target] : f) {
      if (is_prefix(w, leaf))
        out.push_back("1." + target + "." + std::string(m->inner));
    }
    return {next, out};
  }

  if (m->kind != RecMoveKind::NonReplicative) return {state, {}};
  Bits w(m->address);
  for (auto& [leaf, target] : f) {
    if (is_proper_prefix(target, w)) {
      target = w;
      return {next, {"2." + leaf + "." + std::string(m->inner)}};
    }
  }
  for (const auto& [leaf, target] : f) {
    if (is_prefix(w, target))
      out.push_back("2." + leaf + "." + std::string(m->inner));
  }
  return {next, out};
}

std::pair<E2State, Reaction> e2_react(const Game& e2_game,
                                      const E2State& state, const Run& position,
                                      const std::optional<LabMove>& adversary) {
  if (!adversary || adversary->player != Player::Bot) return {state, {}};
  check_pending(position, *adversary);
  if (first_illegal(e2_game, position)) return {state, {}};
  return e2_step(state, *adversary);
}

Reaction E2Machine::react(const Run& position,
                          const std::optional<LabMove>& adversary) {
  auto [next, out] = e2_react(game_, state_, position, adversary);
  state_ = std::move(next);
  return out;
}

std::optional<Bits> find_counterpart_z(const Run& sigma, const Run& pi,
                                       std::string_view v) {
  Run target = role_swapped(project(pi, v));
  for (const auto& z : representatives(sigma)) {
    if (project(sigma, z) == target) return z;
  }
  return std::nullopt;
}

CounterpartCheck check_counterpart_history(const Run& sigma, const Run& pi,
                                           const std::vector<LeafMap>& history,
                                           std::string_view v) {
  CounterpartCheck out;
  std::optional<Bits> last;
  for (std::size_t i = 0; i < history.size(); ++i) {
    const Bits* value = nullptr;
    for (const auto& [leaf, target] : history[i]) {
      if (is_prefix(leaf, v)) {
        value = &target;
        break;
      }
    }
    if (!value) {
      out.failure = "record " + std::to_string(i) + " has no leaf on branch '" +
                    std::string(v) + "'";
      return out;
    }
    if (last && !is_prefix(*last, *value)) {
      out.failure = "record " + std::to_string(i) + " breaks the prefix chain";
      return out;
    }
    last = *value;
  }
  if (!last) {
    out.failure = "empty history";
    return out;
  }
  if (!is_decisive(sigma, *last)) {
    out.failure = "witness '" + *last + "' is not decisive for sigma";
    return out;
  }
  if (project(sigma, *last) != role_swapped(project(pi, v))) {
    out.failure = "projection along witness '" + *last +
                  "' differs from the swapped projection along '" +
                  std::string(v) + "'";
    return out;
  }
  out.z = last;
  return out;
}

std::unique_ptr<Machine> make_machine(std::string_view name, const Game& base) {
  if (name == "e1") return std::make_unique<E1Machine>(base);
  if (name == "e2") return std::make_unique<E2Machine>(base);
  if (name == "none") return std::make_unique<IdleMachine>();
  throw std::invalid_argument("unknown machine '" + std::string(name) + "'");
}

}  // namespace brec
