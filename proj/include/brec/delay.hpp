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

#ifndef BREC_DELAY_HPP_
#define BREC_DELAY_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "brec/game.hpp"
#include "brec/types.hpp"

namespace brec {

/// Omega is a p-delay of Gamma: both runs have the same Top-subsequence and
/// the same Bot-subsequence, and whenever the k-th p-labeled move precedes
/// the n-th opponent-labeled move in Omega, it also does in Gamma. In other
/// words Omega only postpones p's moves relative to the opponent's.
bool is_delay(Player p, const Run& omega, const Run& gamma);

/// Every interleaving Omega of gamma's two per-player subsequences that is a
/// p-delay of gamma. Includes gamma itself.
std::vector<Run> enumerate_delays(Player p, const Run& gamma);

/// The first illegal labmove of `run` in `game` is p-labeled.
bool is_p_illegal(const Game& game, const Run& run, Player p);

class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StaticCheckLimits {
  std::size_t max_runs = 4'000'000;
};

/// All runs of length <= max_len over a finite labmove alphabet, indexed
/// densely, with the delay sets of every run precomputed as index lists.
class RunSpace {
 public:
  RunSpace(std::vector<LabMove> letters, std::size_t max_len,
           StaticCheckLimits limits = {});

  std::size_t size() const noexcept { return runs_.size(); }
  const Run& run(std::size_t index) const { return runs_[index]; }
  const std::vector<LabMove>& letters() const noexcept { return letters_; }

  /// Indices of enumerate_delays(p, run(index)).
  const std::vector<std::size_t>& delays(Player p, std::size_t index) const {
    return p == Player::Top ? top_delays_[index] : bot_delays_[index];
  }

 private:
  std::vector<LabMove> letters_;
  std::vector<Run> runs_;
  std::vector<std::vector<std::size_t>> top_delays_;
  std::vector<std::vector<std::size_t>> bot_delays_;
};

/// Both labels of every move.
std::vector<LabMove> labeled_alphabet(const std::vector<Move>& moves);

struct StaticViolation {
  Player player;
  Run won;      // p-won run
  Run delayed;  // p-delay of `won` that p does not win
};

std::optional<StaticViolation> find_static_violation(
    const Game& game, std::size_t max_len, const std::vector<Move>& alphabet,
    StaticCheckLimits limits = {});

/// For every run over `alphabet` of length <= max_len, every player p and
/// every p-delay: if p wins the run then p wins the delay. Throws
/// ResourceLimitExceeded if the run space exceeds the configured ceiling.
bool is_static_bounded(const Game& game, std::size_t max_len,
                       const std::vector<Move>& alphabet,
                       StaticCheckLimits limits = {});

/// Same check against a prebuilt run space.
std::optional<StaticViolation> find_static_violation(const Game& game,
                                                     const RunSpace& space);

/// A token not used by the game, for probing illegal-move behaviour.
std::string fresh_token(const Game& game);

/// Surface alphabet used when no explicit one is given: the base tokens plus
/// a fresh one, lifted through each operator (addresses "" and "0" for
/// recurrences, plus ":" for the tight kinds; "1." and "2." for Or).
std::vector<Move> default_alphabet(const Game& game);

}  // namespace brec

#endif  // BREC_DELAY_HPP_
