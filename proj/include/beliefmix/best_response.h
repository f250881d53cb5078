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

// Exact best response against a fixed tabular policy, and exact expected
// payoffs of policy profiles, by backward induction over a GameTree.

#ifndef BELIEFMIX_BEST_RESPONSE_H_
#define BELIEFMIX_BEST_RESPONSE_H_

#include <map>
#include <string>
#include <vector>

#include "beliefmix/game_tree.h"
#include "beliefmix/tabular_policy.h"

namespace beliefmix {

struct BestResponseReport {
  Player responder = 1;
  double utility = 0.0;  // Expected payoff of the responder.
  std::map<std::string, Action> actions;  // Best action per responder infostate.
};

// `policy` fixes the play of seat 1 - responder. At each responder infostate
// the chosen action maximizes the sum over its histories of counterfactual
// reach (chance times policy) times continuation value; ties go to the lowest
// action id. Throws DomainError if the policy misses a decision infostate.
BestResponseReport BestResponse(const GameTree& tree, const TabularPolicy& policy,
                                Player responder);

// Expected seat-0 payoff when each seat follows its own policy.
double ExpectedUtility(const GameTree& tree, const TabularPolicy& seat0_policy,
                       const TabularPolicy& seat1_policy);

// Per-infostate action probabilities of `seat` laid out as
// probs[infostate id][child index]; throws DomainError on missing rows.
std::vector<std::vector<double>> PolicyTable(const GameTree& tree, const TabularPolicy& policy,
                                             Player seat);

}  // namespace beliefmix

#endif  // BELIEFMIX_BEST_RESPONSE_H_
