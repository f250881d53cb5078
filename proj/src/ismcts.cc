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

#include "beliefmix/ismcts.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "beliefmix/errors.h"

namespace beliefmix {
namespace {

Action SampleChance(const State& state, Rng& rng) {
  auto outcomes = state.ChanceOutcomes();
  double u = rng.Uniform01();
  double cumulative = 0.0;
  for (const auto& [a, p] : outcomes) {
    cumulative += p;
    if (u < cumulative) return a;
  }
  return outcomes.back().first;
}

}  // namespace

Action UctSelect(const std::vector<EdgeStats>& edges, std::span<const Action> legal, double c) {
  if (legal.empty()) throw DomainError("UCT selection without legal actions");
  long long parent_visits = 0;
  for (Action a : legal) {
    if (edges[a].visits == 0) throw DomainError("UCT selection over an unvisited edge");
    parent_visits += edges[a].visits;
  }
  double log_parent = std::log(static_cast<double>(parent_visits));
  Action choice = legal.front();
  double best = -std::numeric_limits<double>::infinity();
  for (Action a : legal) {
    const EdgeStats& e = edges[a];
    double ucb = e.total / e.visits + c * std::sqrt(log_parent / e.visits);
    if (ucb > best) {
      best = ucb;
      choice = a;
    }
  }
  return choice;
}

IsmctsDecider::IsmctsDecider(std::shared_ptr<const BeliefBuilder> beliefs,
                             LambdaSchedule schedule, int budget, double uct_c)
    : beliefs_(std::move(beliefs)), schedule_(std::move(schedule)), budget_(budget), uct_c_(uct_c) {
  if (budget_ < 1) throw DomainError("IS-MCTS budget must be positive");
}

IsmctsReport IsmctsDecider::Search(const DecisionPoint& point, uint64_t seed) {
  IsmctsReport report;
  report.infostate_key = point.infostate_key;
  report.lambda = schedule_.At(DecisionIndexOf(point.infostate_key));
  const BeliefDistribution& belief = beliefs_.Get(point.infostate_key, report.lambda);
  const int num_actions = beliefs_.builder().game().NumDistinctActions();
  auto& tree = report.tree;

  Rng rng(seed);
  std::vector<std::pair<IsmctsNode*, Action>> path;
  for (int iteration = 0; iteration < budget_; ++iteration) {
    std::unique_ptr<State> state = belief.Sample(rng)->Clone();
    if (state->CurrentPlayer() != point.seat) {
      throw DomainError("sampled world is not a decision of seat " + std::to_string(point.seat));
    }
    path.clear();
    // Selection and expansion.
    while (!state->IsTerminal()) {
      if (state->IsChanceNode()) {
        state->ApplyActionUntracked(SampleChance(*state, rng));
        continue;
      }
      Player player = state->CurrentPlayer();
      auto [it, inserted] = tree.try_emplace(state->InfostateHash(player));
      IsmctsNode& node = it->second;
      if (inserted) {
        node.player = player;
        node.edges.assign(num_actions, EdgeStats{});
      }
      std::vector<Action> legal = state->LegalActions();
      Action untried = -1;
      for (Action a : legal) {
        if (node.edges[a].visits == 0) {
          untried = a;
          break;
        }
      }
      Action a = untried >= 0 ? untried : UctSelect(node.edges, legal, uct_c_);
      path.emplace_back(&node, a);
      state->ApplyActionUntracked(a);
      if (untried >= 0) break;
    }
    // Uniform random rollout.
    while (!state->IsTerminal()) {
      if (state->IsChanceNode()) {
        state->ApplyActionUntracked(SampleChance(*state, rng));
      } else {
        std::vector<Action> legal = state->LegalActions();
        state->ApplyActionUntracked(legal[rng.UniformInt(static_cast<int>(legal.size()))]);
      }
    }
    double u0 = state->Utility(0);
    for (auto& [node, a] : path) {
      EdgeStats& e = node->edges[a];
      ++e.visits;
      e.total += node->player == 0 ? u0 : -u0;
    }
  }

  for (const auto& [key, mass] : belief.Marginal(point.seat)) {
    if (const IsmctsNode* node = report.Node(key)) {
      for (const EdgeStats& e : node->edges) report.root_visits += e.visits;
    }
  }

  report.actions = point.legal_actions;
  int total = 0;
  const IsmctsNode* root = report.Node(point.infostate_key);
  for (Action a : report.actions) {
    int v = root == nullptr ? 0 : root->edges[a].visits;
    report.visits.push_back(v);
    total += v;
  }
  for (int v : report.visits) {
    report.shares.push_back(total > 0 ? static_cast<double>(v) / total
                                      : 1.0 / static_cast<double>(report.visits.size()));
  }
  return report;
}

const IsmctsNode* IsmctsReport::Node(std::string_view key) const {
  auto it = tree.find(Fnv1a64(key));
  return it == tree.end() ? nullptr : &it->second;
}

std::vector<double> IsmctsDecider::Decide(const DecisionPoint& point, uint64_t seed) {
  return Search(point, seed).shares;
}

std::string IsmctsReport::ToCsv(const Game& game) const {
  std::ostringstream out;
  out.precision(17);
  out << "infostate_key,action_label,visit_share\n";
  for (size_t k = 0; k < actions.size(); ++k) {
    out << '"' << infostate_key << "\"," << game.ActionLabel(actions[k]) << ',' << shares[k]
        << '\n';
  }
  return out.str();
}

}  // namespace beliefmix
