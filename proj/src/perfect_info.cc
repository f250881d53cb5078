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

#include "beliefmix/perfect_info.h"

#include <algorithm>
#include <limits>

#include "beliefmix/errors.h"

namespace beliefmix {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double SeatValue(double value0, Player seat) { return seat == 0 ? value0 : -value0; }

double UnprunedValue0(const State& state) {
  if (state.IsTerminal()) return state.Utility(0);
  if (state.IsChanceNode()) {
    double value = 0.0;
    for (const auto& [a, p] : state.ChanceOutcomes()) value += p * UnprunedValue0(*state.Child(a).first);
    return value;
  }
  bool maximize = state.CurrentPlayer() == 0;
  double best = maximize ? -kInf : kInf;
  for (Action a : state.LegalActions()) {
    double v = UnprunedValue0(*state.Child(a).first);
    best = maximize ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

}  // namespace

double UnprunedMinimax(const State& world, Player seat) {
  return SeatValue(UnprunedValue0(world), seat);
}

double PerfectInfoSolver::Value(const State& world, Player seat) {
  return SeatValue(AlphaBeta(world, -kInf, kInf), seat);
}

std::vector<std::pair<Action, double>> PerfectInfoSolver::ActionValues(const State& world,
                                                                       Player seat) {
  if (!world.IsPlayerNode()) throw DomainError("action values requested at a non-player node");
  std::vector<std::pair<Action, double>> values;
  for (Action a : world.LegalActions()) {
    values.emplace_back(a, Value(*world.Child(a).first, seat));
  }
  return values;
}

void PerfectInfoSolver::Store(std::string key, double value, Bound bound) {
  if (table_.size() >= table_limit_) table_.clear();
  table_.insert_or_assign(std::move(key), Entry{value, bound});
}

double PerfectInfoSolver::AlphaBeta(const State& state, double alpha, double beta) {
  ++nodes_searched_;
  if (state.IsTerminal()) return state.Utility(0);

  std::string key = state.WorldKey();
  if (auto it = table_.find(key); it != table_.end()) {
    const Entry& e = it->second;
    if (e.bound == Bound::kExact) return e.value;
    if (e.bound == Bound::kLower) {
      if (e.value >= beta) return e.value;
      alpha = std::max(alpha, e.value);
    } else {
      if (e.value <= alpha) return e.value;
      beta = std::min(beta, e.value);
    }
  }

  if (state.IsChanceNode()) {
    double value = 0.0;
    for (const auto& [a, p] : state.ChanceOutcomes()) {
      value += p * AlphaBeta(*state.Child(a).first, -kInf, kInf);
    }
    Store(std::move(key), value, Bound::kExact);
    return value;
  }

  const double alpha0 = alpha, beta0 = beta;
  bool maximize = state.CurrentPlayer() == 0;
  double best = maximize ? -kInf : kInf;
  for (Action a : state.LegalActions()) {
    double v = AlphaBeta(*state.Child(a).first, alpha, beta);
    if (maximize) {
      best = std::max(best, v);
      alpha = std::max(alpha, best);
    } else {
      best = std::min(best, v);
      beta = std::min(beta, best);
    }
    if (alpha >= beta) break;
  }
  Bound bound = Bound::kExact;
  if (best <= alpha0) {
    bound = Bound::kUpper;
  } else if (best >= beta0) {
    bound = Bound::kLower;
  }
  Store(std::move(key), best, bound);
  return best;
}

}  // namespace beliefmix
