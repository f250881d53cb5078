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

#include "beliefmix/tssr.h"

#include <cmath>
#include <map>

#include "beliefmix/best_response.h"
#include "beliefmix/errors.h"

namespace beliefmix {

TssrReport EvaluateTssr(const GameTree& tree, const TabularPolicy& policy, Player seat,
                        const TabularPolicy& opponent_policy, const TssrOptions& options) {
  if (seat < 0 || seat >= kNumPlayers) throw DomainError("bad TSSR seat");
  if (options.samples < 1) throw DomainError("TSSR sample size must be positive");
  const Player opponent = 1 - seat;
  const auto& nodes = tree.nodes();
  const auto own = PolicyTable(tree, policy, seat);
  const auto other = PolicyTable(tree, opponent_policy, opponent);

  // evidence: chance x seat policy; reach: additionally the opponent policy.
  std::vector<double> evidence(nodes.size(), 1.0), reach(nodes.size(), 1.0);
  for (size_t n = 1; n < nodes.size(); ++n) {
    const TreeNode& parent = nodes[nodes[n].parent];
    int k = static_cast<int>(n) - parent.first_child;
    double e = nodes[n].chance_prob, r = nodes[n].chance_prob;
    if (parent.player == seat) {
      e = r = own[parent.infostate[seat]][k];
    } else if (parent.player == opponent) {
      e = 1.0;
      r = other[parent.infostate[opponent]][k];
    }
    evidence[n] = evidence[nodes[n].parent] * e;
    reach[n] = reach[nodes[n].parent] * r;
  }

  TssrReport report;
  report.seat = seat;
  report.lambda_schedule = policy.metadata().lambda_schedule;
  double total_reach = 0.0, weighted = 0.0;
  for (int id : tree.DecisionInfostates(opponent)) {
    const TreeInfostate& info = tree.infostate(opponent, id);
    if (options.first_decision_only && Infostate::FromKey(info.key).DecisionCount() != 0) continue;
    std::map<int, double> posterior;
    double mass = 0.0;
    for (int h : info.nodes) {
      posterior[nodes[h].infostate[seat]] += evidence[h];
      mass += evidence[h];
    }
    for (int h : info.nodes) {
      if (reach[h] <= 0.0) continue;
      TssrRecord record;
      record.opponent_key = info.key;
      record.candidates = static_cast<int>(posterior.size());
      record.eta = posterior[nodes[h].infostate[seat]] / mass;
      record.tssr = record.eta * record.candidates;
      record.reach = reach[h];
      total_reach += record.reach;
      weighted += record.reach * record.tssr;
      report.records.push_back(std::move(record));
    }
  }
  if (total_reach <= 0.0) throw DomainError("no opponent decision is reachable");
  report.average = weighted / total_reach;
  double var = 0.0;
  for (const auto& r : report.records) {
    var += r.reach * (r.tssr - report.average) * (r.tssr - report.average);
  }
  report.stddev = std::sqrt(var / total_reach);
  report.ci = 1.96 * report.stddev / std::sqrt(static_cast<double>(options.samples));
  return report;
}

}  // namespace beliefmix
