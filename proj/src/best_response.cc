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

#include "beliefmix/best_response.h"

#include <algorithm>

#include "beliefmix/errors.h"

namespace beliefmix {

std::vector<std::vector<double>> PolicyTable(const GameTree& tree, const TabularPolicy& policy,
                                             Player seat) {
  std::vector<std::vector<double>> table(tree.infostates(seat).size());
  for (int id : tree.DecisionInfostates(seat)) {
    const TreeInfostate& info = tree.infostate(seat, id);
    const PolicyRow& row = policy.Row(info.key);
    for (Action a : row.actions) {
      if (std::find(info.legal_actions.begin(), info.legal_actions.end(), a) ==
          info.legal_actions.end()) {
        throw DomainError("policy row of " + info.key + " has an illegal action");
      }
    }
    for (Action a : info.legal_actions) table[id].push_back(policy.Prob(info.key, a));
  }
  return table;
}

BestResponseReport BestResponse(const GameTree& tree, const TabularPolicy& policy,
                                Player responder) {
  if (responder < 0 || responder >= kNumPlayers) throw DomainError("bad responder seat");
  const Player fixed = 1 - responder;
  const auto& nodes = tree.nodes();
  const auto probs = PolicyTable(tree, policy, fixed);

  // Counterfactual reach of the responder: chance and fixed-seat probabilities.
  std::vector<double> reach(nodes.size(), 1.0);
  for (size_t n = 1; n < nodes.size(); ++n) {
    const TreeNode& parent = nodes[nodes[n].parent];
    double w = nodes[n].chance_prob;
    if (parent.player == fixed) {
      w = probs[parent.infostate[fixed]][n - parent.first_child];
    }
    reach[n] = reach[nodes[n].parent] * w;
  }

  std::vector<std::vector<int>> by_depth(tree.max_depth() + 1);
  for (size_t n = 0; n < nodes.size(); ++n) by_depth[nodes[n].depth].push_back(static_cast<int>(n));
  std::vector<std::vector<int>> responder_infos(tree.max_depth() + 1);
  for (int id : tree.DecisionInfostates(responder)) {
    responder_infos[nodes[tree.infostate(responder, id).nodes.front()].depth].push_back(id);
  }

  BestResponseReport report;
  report.responder = responder;
  std::vector<int> best_child(tree.infostates(responder).size(), 0);
  std::vector<double> value(nodes.size(), 0.0);
  const double sign = responder == 0 ? 1.0 : -1.0;
  for (int d = tree.max_depth(); d >= 0; --d) {
    for (int id : responder_infos[d]) {
      const TreeInfostate& info = tree.infostate(responder, id);
      int best = 0;
      double best_q = 0.0;
      for (size_t k = 0; k < info.legal_actions.size(); ++k) {
        double q = 0.0;
        for (int h : info.nodes) q += reach[h] * value[nodes[h].first_child + k];
        if (k == 0 || q > best_q) {
          best_q = q;
          best = static_cast<int>(k);
        }
      }
      best_child[id] = best;
      report.actions[info.key] = info.legal_actions[best];
    }
    for (int n : by_depth[d]) {
      const TreeNode& node = nodes[n];
      if (node.player == kTerminalPlayerId) {
        value[n] = sign * node.utility0;
      } else if (node.player == responder) {
        value[n] = value[node.first_child + best_child[node.infostate[responder]]];
      } else {
        double v = 0.0;
        for (int k = 0; k < node.num_children; ++k) {
          int c = node.first_child + k;
          double w = node.player == kChancePlayerId ? nodes[c].chance_prob
                                                    : probs[node.infostate[fixed]][k];
          v += w * value[c];
        }
        value[n] = v;
      }
    }
  }
  report.utility = value[0];
  return report;
}

double ExpectedUtility(const GameTree& tree, const TabularPolicy& seat0_policy,
                       const TabularPolicy& seat1_policy) {
  const auto& nodes = tree.nodes();
  const std::array<std::vector<std::vector<double>>, kNumPlayers> probs = {
      PolicyTable(tree, seat0_policy, 0), PolicyTable(tree, seat1_policy, 1)};
  std::vector<double> value(nodes.size(), 0.0);
  for (int n = static_cast<int>(nodes.size()) - 1; n >= 0; --n) {
    const TreeNode& node = nodes[n];
    if (node.player == kTerminalPlayerId) {
      value[n] = node.utility0;
      continue;
    }
    double v = 0.0;
    for (int k = 0; k < node.num_children; ++k) {
      int c = node.first_child + k;
      double w = node.player == kChancePlayerId
                     ? nodes[c].chance_prob
                     : probs[node.player][node.infostate[node.player]][k];
      v += w * value[c];
    }
    value[n] = v;
  }
  return value[0];
}

}  // namespace beliefmix
