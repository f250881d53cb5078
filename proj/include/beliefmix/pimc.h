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

// Perfect Information Monte Carlo over a lambda-mixture belief.
//
// Each sampled world is routed to the score table of the acting seat's
// infostate in that world and every legal action of the world is scored by
// exact expectiminimax. The aggregated score of action a is
//   sum_j sums_j[a] / sum_{j : a legal in table j} visits_j,
// i.e. the visit-weighted mean over the tables where a is legal.

#ifndef BELIEFMIX_PIMC_H_
#define BELIEFMIX_PIMC_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "beliefmix/belief.h"
#include "beliefmix/decider.h"
#include "beliefmix/perfect_info.h"

namespace beliefmix {

struct ScoreTable {
  std::map<Action, double> sums;
  std::map<Action, int> legal_visits;  // Samples in which the action was legal.
  int visits = 0;
};

struct PimcReport {
  std::string infostate_key;
  double lambda = 0.0;
  std::map<std::string, ScoreTable> tables;  // Keyed by own infostate.
  std::vector<Action> actions;               // Legal at the true infostate.
  std::vector<double> scores;                // Aggregated, aligned with actions.
  Action recommended = -1;
  // Rows "infostate_key,action_label,score".
  std::string ToCsv(const Game& game) const;
};

class PimcDecider final : public Decider {
 public:
  PimcDecider(std::shared_ptr<const BeliefBuilder> beliefs, LambdaSchedule schedule,
              int budget);

  PimcReport Search(const DecisionPoint& point, uint64_t seed);
  // Point mass on the recommended action.
  std::vector<double> Decide(const DecisionPoint& point, uint64_t seed) override;

  PerfectInfoSolver& solver() { return solver_; }

 private:
  MixtureCache beliefs_;
  LambdaSchedule schedule_;
  int budget_;
  PerfectInfoSolver solver_;
};

}  // namespace beliefmix

#endif  // BELIEFMIX_PIMC_H_
