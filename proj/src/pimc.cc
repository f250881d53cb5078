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

#include "beliefmix/pimc.h"

#include <limits>
#include <optional>
#include <sstream>

#include "beliefmix/errors.h"
#include "beliefmix/rng.h"

namespace beliefmix {

PimcDecider::PimcDecider(std::shared_ptr<const BeliefBuilder> beliefs, LambdaSchedule schedule,
                         int budget)
    : beliefs_(std::move(beliefs)), schedule_(std::move(schedule)), budget_(budget) {
  if (budget_ < 1) throw DomainError("PIMC budget must be positive");
}

PimcReport PimcDecider::Search(const DecisionPoint& point, uint64_t seed) {
  PimcReport report;
  report.infostate_key = point.infostate_key;
  report.lambda = schedule_.At(DecisionIndexOf(point.infostate_key));
  const BeliefDistribution& belief = beliefs_.Get(point.infostate_key, report.lambda);

  std::vector<std::optional<std::vector<std::pair<Action, double>>>> values(belief.size());
  std::vector<ScoreTable*> routes(belief.size(), nullptr);
  Rng rng(seed);
  for (int j = 0; j < budget_; ++j) {
    size_t k = belief.SampleIndex(rng);
    const State& world = *belief.worlds()[k];
    if (world.CurrentPlayer() != point.seat) {
      throw DomainError("sampled world is not a decision of seat " + std::to_string(point.seat));
    }
    if (!values[k]) values[k] = solver_.ActionValues(world, point.seat);
    if (!routes[k]) routes[k] = &report.tables[world.InfostateKey(point.seat)];
    ScoreTable& table = *routes[k];
    ++table.visits;
    for (const auto& [a, v] : *values[k]) {
      table.sums[a] += v;
      ++table.legal_visits[a];
    }
  }

  report.actions = point.legal_actions;
  double best = -std::numeric_limits<double>::infinity();
  for (Action a : report.actions) {
    double num = 0.0;
    long long den = 0;
    for (const auto& [key, table] : report.tables) {
      if (auto it = table.sums.find(a); it != table.sums.end()) {
        num += it->second;
        den += table.legal_visits.at(a);
      }
    }
    double score = den > 0 ? num / static_cast<double>(den)
                           : -std::numeric_limits<double>::infinity();
    report.scores.push_back(score);
    if (report.recommended < 0 || score > best) {
      best = score;
      report.recommended = a;
    }
  }
  return report;
}

std::vector<double> PimcDecider::Decide(const DecisionPoint& point, uint64_t seed) {
  PimcReport report = Search(point, seed);
  std::vector<double> probs(point.legal_actions.size(), 0.0);
  for (size_t k = 0; k < point.legal_actions.size(); ++k) {
    if (point.legal_actions[k] == report.recommended) probs[k] = 1.0;
  }
  return probs;
}

std::string PimcReport::ToCsv(const Game& game) const {
  std::ostringstream out;
  out.precision(17);
  out << "infostate_key,action_label,score\n";
  for (size_t k = 0; k < actions.size(); ++k) {
    out << '"' << infostate_key << "\"," << game.ActionLabel(actions[k]) << ',' << scores[k]
        << '\n';
  }
  return out.str();
}

}  // namespace beliefmix
