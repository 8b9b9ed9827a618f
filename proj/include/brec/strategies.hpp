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

#ifndef BREC_STRATEGIES_HPP_
#define BREC_STRATEGIES_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brec/game.hpp"
#include "brec/types.hpp"

namespace brec {

/// Moves the machine emits in one step, in order.
using Reaction = std::vector<Move>;

/// Map from the current leaves of the tight component to loose-side
/// addresses. No value may be a prefix of another value.
using LeafMap = std::map<Bits, Bits>;

bool is_prefix_free(const LeafMap& f);

std::string format_leaf_map(const LeafMap& f);
LeafMap parse_leaf_map(std::string_view text);

struct E2State {
  LeafMap f{{Bits{}, Bits{}}};

  friend bool operator==(const E2State&, const E2State&) = default;
};

/// Shortest sequence of replicative moves after which `w` is a node of the
/// bitstring tree of `tight_position`; shortest prefix first.
Reaction grow_to_node(const Run& tight_position, std::string_view w);

// E1 plays Or(CoTight(Neg A), Loose A).
//   adversary "1.w.a" (co-tight side): copy it as "2.w.a".
//   adversary "2.w.a" (loose side): grow w into a node of the co-tight
//   side, then play "1.w.a" there.

/// The E1 prescription for one adversary move; no legality check.
/// `co_tight_run` is the component-1 run before the reaction.
Reaction e1_step(const Run& co_tight_run, const LabMove& adversary);

/// `position` already ends with `adversary`. Returns nothing when there is no
/// pending adversary move or when the position is illegal.
Reaction e1_react(const Game& e1_game, const Run& position,
                  const std::optional<LabMove>& adversary);

/// The E2 prescription for one adversary move; no legality check.
std::pair<E2State, Reaction> e2_step(const E2State& state,
                                     const LabMove& adversary);

/// `e2_game` is Or(CoLoose(Neg A), Tight A). Illegal or absent adversary
/// moves leave the state unchanged and produce no moves.
std::pair<E2State, Reaction> e2_react(const Game& e2_game,
                                      const E2State& state, const Run& position,
                                      const std::optional<LabMove>& adversary);

/// First representative z of `sigma` whose projection equals the
/// label-swapped projection of `pi` along `v`.
std::optional<Bits> find_counterpart_z(const Run& sigma, const Run& pi,
                                       std::string_view v);

struct CounterpartCheck {
  std::optional<Bits> z;  // f-history witness
  std::string failure;    // empty on success
};

/// Builds the z witness from the recorded leaf maps: for each record f_i,
/// v_i is the key of f_i that is a prefix of v; the values f_i(v_i) must form
/// a prefix chain, and the last one must be decisive for sigma with
/// project(sigma, z) equal to the label-swapped project(pi, v).
CounterpartCheck check_counterpart_history(const Run& sigma, const Run& pi,
                                           const std::vector<LeafMap>& history,
                                           std::string_view v);

/// A machine as driven by the match runner.
class Machine {
 public:
  virtual ~Machine() = default;
  virtual std::string name() const = 0;
  virtual void reset() {}
  /// `position` is the machine's view of the play and already ends with
  /// `adversary`.
  virtual Reaction react(const Run& position,
                         const std::optional<LabMove>& adversary) = 0;
  virtual std::optional<LeafMap> leaf_map() const { return std::nullopt; }
};

class E1Machine : public Machine {
 public:
  explicit E1Machine(const Game& base) : game_(e1_shape(base)) {}
  std::string name() const override { return "e1"; }
  Reaction react(const Run& position,
                 const std::optional<LabMove>& adversary) override {
    return e1_react(game_, position, adversary);
  }

 private:
  Game game_;
};

class E2Machine : public Machine {
 public:
  explicit E2Machine(const Game& base) : game_(e2_shape(base)) {}
  std::string name() const override { return "e2"; }
  void reset() override { state_ = {}; }
  Reaction react(const Run& position,
                 const std::optional<LabMove>& adversary) override;
  std::optional<LeafMap> leaf_map() const override { return state_.f; }
  const E2State& state() const noexcept { return state_; }

 private:
  Game game_;
  E2State state_;
};

/// Never moves.
class IdleMachine : public Machine {
 public:
  std::string name() const override { return "none"; }
  Reaction react(const Run&, const std::optional<LabMove>&) override {
    return {};
  }
};

/// "e1", "e2" or "none".
std::unique_ptr<Machine> make_machine(std::string_view name, const Game& base);

}  // namespace brec

#endif  // BREC_STRATEGIES_HPP_
