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

// True State Sampling Ratio: how well the opponent of seat i could guess
// seat i's infostate from seat i's observed play.
//
// At an opponent decision node h the candidates are the seat-i infostates of
// all histories in the opponent's infostate. Their posterior weights are the
// chance probability times seat i's action probabilities, summed per
// candidate; eta is the posterior of the true candidate and
// TSSR(h) = eta * |candidates|. The report averages TSSR(h) over nodes
// reached with positive probability, weighted by reach under both policies.

#ifndef BELIEFMIX_TSSR_H_
#define BELIEFMIX_TSSR_H_

#include <string>
#include <vector>

#include "beliefmix/game_tree.h"
#include "beliefmix/tabular_policy.h"

namespace beliefmix {

struct TssrRecord {
  std::string opponent_key;
  int candidates = 0;
  double eta = 0.0;
  double tssr = 0.0;
  double reach = 0.0;
};

struct TssrReport {
  Player seat = 0;  // Seat whose information leaks.
  std::vector<TssrRecord> records;
  double average = 0.0;
  double stddev = 0.0;  // Reach-weighted.
  double ci = 0.0;      // 1.96 * stddev / sqrt(samples).
  std::string lambda_schedule;
};

struct TssrOptions {
  bool first_decision_only = false;  // Only the opponent's first decision.
  int samples = 1000;                // Sample size behind the reported CI.
};

// `policy` belongs to `seat`; `opponent_policy` to the other seat.
TssrReport EvaluateTssr(const GameTree& tree, const TabularPolicy& policy, Player seat,
                        const TabularPolicy& opponent_policy, const TssrOptions& options = {});

}  // namespace beliefmix

#endif  // BELIEFMIX_TSSR_H_
