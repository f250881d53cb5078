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

// Single-observer Information Set MCTS over a lambda-mixture belief.
//
// Tree nodes are keyed by the infostate of the seat to act, identified by the
// 64-bit FNV-1a hash of its key. Every iteration
// samples a world from the mixture, which selects the root node among the
// acting seat's possible infostates, then descends with UCT restricted to
// the world's legal actions. The first edge not yet tried ends the descent;
// a uniform random rollout follows and the terminal payoff is credited to
// each traversed edge from its owner's perspective. Chance events met during
// the descent are sampled from their distribution.

#ifndef BELIEFMIX_ISMCTS_H_
#define BELIEFMIX_ISMCTS_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "beliefmix/belief.h"
#include "beliefmix/decider.h"
#include "beliefmix/rng.h"

namespace beliefmix {

struct EdgeStats {
  int visits = 0;
  double total = 0.0;  // Sum of payoffs to the node's acting seat.
};

struct IsmctsNode {
  Player player = 0;
  std::vector<EdgeStats> edges;  // Indexed by action id.
};

// UCB1 choice among `legal` edges; all must have been visited. The parent
// count is the sum of the legal edges' visits. Ties go to the lowest id.
Action UctSelect(const std::vector<EdgeStats>& edges, std::span<const Action> legal,
                 double c);

struct IsmctsReport {
  std::string infostate_key;
  double lambda = 0.0;
  std::vector<Action> actions;
  std::vector<int> visits;       // At the true infostate's node.
  std::vector<double> shares;    // Normalized visits; uniform if unvisited.
  int root_visits = 0;           // Iterations credited at root-level nodes.
  // Keyed by State::InfostateHash() of the node's acting seat.
  std::unordered_map<uint64_t, IsmctsNode> tree;
  // Node of an infostate key, nullptr if the search never reached it.
  const IsmctsNode* Node(std::string_view key) const;
  std::string ToCsv(const Game& game) const;
};

class IsmctsDecider final : public Decider {
 public:
  IsmctsDecider(std::shared_ptr<const BeliefBuilder> beliefs, LambdaSchedule schedule,
                int budget, double uct_c);

  IsmctsReport Search(const DecisionPoint& point, uint64_t seed);
  std::vector<double> Decide(const DecisionPoint& point, uint64_t seed) override;

 private:
  MixtureCache beliefs_;
  LambdaSchedule schedule_;
  int budget_;
  double uct_c_;
};

}  // namespace beliefmix

#endif  // BELIEFMIX_ISMCTS_H_
