// Copyright 2026 The beliefmix Authors.
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

// Exact perfect-information evaluation of fully determined worlds.
//
// Expectiminimax: seat 0 maximizes, seat 1 minimizes the seat-0 payoff and
// chance nodes take the probability-weighted mean of their children. Player
// nodes use fail-soft alpha-beta; chance children are searched with a full
// window so their values are exact. A transposition table keyed by
// State::WorldKey() stores exact values and bounds.

#ifndef BELIEFMIX_PERFECT_INFO_H_
#define BELIEFMIX_PERFECT_INFO_H_

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "beliefmix/fosg.h"

namespace beliefmix {

class PerfectInfoSolver {
 public:
  static constexpr size_t kDefaultTableLimit = 1'000'000;

  explicit PerfectInfoSolver(size_t table_limit = kDefaultTableLimit)
      : table_limit_(table_limit) {}

  // Game value of `world` for `seat`.
  double Value(const State& world, Player seat);
  // Value for `seat` of every legal action at the player node `world`.
  std::vector<std::pair<Action, double>> ActionValues(const State& world, Player seat);

  size_t table_size() const { return table_.size(); }
  size_t nodes_searched() const { return nodes_searched_; }
  void Clear() { table_.clear(); }

 private:
  enum class Bound : unsigned char { kExact, kLower, kUpper };
  struct Entry {
    double value;
    Bound bound;
  };

  double AlphaBeta(const State& state, double alpha, double beta);
  void Store(std::string key, double value, Bound bound);

  size_t table_limit_;
  std::unordered_map<std::string, Entry> table_;
  size_t nodes_searched_ = 0;
};

// Plain expectiminimax without pruning or caching, for cross-checking.
double UnprunedMinimax(const State& world, Player seat);

}  // namespace beliefmix

#endif  // BELIEFMIX_PERFECT_INFO_H_
