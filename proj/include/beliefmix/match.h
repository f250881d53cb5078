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

// Head-to-head simulation of two tabular policies with fixed seats.

#ifndef BELIEFMIX_MATCH_H_
#define BELIEFMIX_MATCH_H_

#include <cstdint>

#include "beliefmix/fosg.h"
#include "beliefmix/tabular_policy.h"

namespace beliefmix {

struct MatchReport {
  int games = 0;
  int wins = 0;
  int draws = 0;
  int losses = 0;
  double win_rate = 0.0;     // (wins + draw_value * draws) / games.
  double ci_halfwidth = 0.0; // 1.96 * sqrt(p (1 - p) / games).
};

struct MatchOptions {
  int games = 1000;
  uint64_t seed = 0;
  double draw_value = 0.5;
};

// 95% normal-approximation half-width for a rate p over n games.
double WinRateHalfWidth(double p, int n);

// `policy` plays `seat`, `opponent` the other seat. Game g draws its chance
// events and actions from an Rng seeded with DeriveSeed(seed, {g}).
MatchReport PlayMatches(const Game& game, const TabularPolicy& policy, Player seat,
                        const TabularPolicy& opponent, const MatchOptions& options);

}  // namespace beliefmix

#endif  // BELIEFMIX_MATCH_H_
