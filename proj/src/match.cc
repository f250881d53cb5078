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

#include "beliefmix/match.h"

#include <cmath>

#include "beliefmix/errors.h"
#include "beliefmix/rng.h"

namespace beliefmix {
namespace {

Action SampleFrom(const std::vector<Action>& actions, const std::vector<double>& probs,
                  Rng& rng) {
  double u = rng.Uniform01();
  double cumulative = 0.0;
  for (size_t k = 0; k < actions.size(); ++k) {
    cumulative += probs[k];
    if (u < cumulative) return actions[k];
  }
  // Rounding left u above the total: take the last action with mass.
  for (size_t k = actions.size(); k-- > 0;) {
    if (probs[k] > 0.0) return actions[k];
  }
  return actions.back();
}

}  // namespace

double WinRateHalfWidth(double p, int n) {
  if (n <= 0) throw DomainError("win rate over zero games");
  return 1.96 * std::sqrt(p * (1.0 - p) / n);
}

MatchReport PlayMatches(const Game& game, const TabularPolicy& policy, Player seat,
                        const TabularPolicy& opponent, const MatchOptions& options) {
  if (seat < 0 || seat >= kNumPlayers) throw DomainError("bad match seat");
  if (options.games < 1) throw DomainError("match needs at least one game");
  MatchReport report;
  report.games = options.games;
  for (int g = 0; g < options.games; ++g) {
    Rng rng(DeriveSeed(options.seed, {static_cast<uint64_t>(g)}));
    auto state = game.NewInitialState();
    while (!state->IsTerminal()) {
      Action a;
      if (state->IsChanceNode()) {
        std::vector<Action> outcomes;
        std::vector<double> probs;
        for (const auto& [o, p] : state->ChanceOutcomes()) {
          outcomes.push_back(o);
          probs.push_back(p);
        }
        a = SampleFrom(outcomes, probs, rng);
      } else {
        Player p = state->CurrentPlayer();
        const PolicyRow& row = (p == seat ? policy : opponent).Row(state->InfostateKey(p));
        a = SampleFrom(row.actions, row.probs, rng);
      }
      state->ApplyActionInPlace(a);
    }
    double u = state->Utility(seat);
    if (u > 0) {
      ++report.wins;
    } else if (u < 0) {
      ++report.losses;
    } else {
      ++report.draws;
    }
  }
  report.win_rate = (report.wins + options.draw_value * report.draws) / options.games;
  report.ci_halfwidth = WinRateHalfWidth(report.win_rate, options.games);
  return report;
}

}  // namespace beliefmix
