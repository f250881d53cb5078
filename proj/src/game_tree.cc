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

#include "beliefmix/game_tree.h"

#include <algorithm>

#include "beliefmix/errors.h"

namespace beliefmix {

GameTree::GameTree(std::shared_ptr<const Game> game, size_t node_limit)
    : game_(std::move(game)) {
  struct Frame {
    std::unique_ptr<State> state;
    int id;
  };
  std::vector<Frame> stack;
  nodes_.emplace_back();
  stack.push_back({game_->NewInitialState(), 0});
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    const State& state = *frame.state;
    TreeNode& node = nodes_[frame.id];
    node.player = state.CurrentPlayer();
    max_depth_ = std::max(max_depth_, node.depth);
    if (state.IsTerminal()) {
      node.utility0 = state.Utility(0);
      continue;
    }
    if (state.IsPlayerNode()) {
      for (Player p = 0; p < kNumPlayers; ++p) {
        node.infostate[p] = Intern(p, state.InfostateKey(p));
      }
      TreeInfostate& info = infostates_[node.player][node.infostate[node.player]];
      if (info.nodes.empty()) info.legal_actions = state.LegalActions();
      info.nodes.push_back(frame.id);
    }
    std::vector<std::pair<Action, double>> edges;
    if (state.IsChanceNode()) {
      edges = state.ChanceOutcomes();
    } else {
      for (Action a : state.LegalActions()) edges.emplace_back(a, 1.0);
    }
    int first = static_cast<int>(nodes_.size());
    if (nodes_.size() + edges.size() > node_limit) {
      throw DomainError("game tree of " + game_->ToString() + " exceeds " +
                        std::to_string(node_limit) + " nodes");
    }
    int parent_depth = node.depth;
    bool chance = state.IsChanceNode();
    nodes_[frame.id].first_child = first;
    nodes_[frame.id].num_children = static_cast<int>(edges.size());
    for (const auto& [a, p] : edges) {
      TreeNode child;
      child.parent = frame.id;
      child.action = a;
      child.depth = parent_depth + 1;
      child.chance_prob = chance ? p : 1.0;
      nodes_.push_back(child);
    }
    // Push in reverse so children are expanded in action order.
    for (int k = static_cast<int>(edges.size()) - 1; k >= 0; --k) {
      auto [child, obs] = state.Child(edges[k].first);
      stack.push_back({std::move(child), first + k});
    }
  }
}

int GameTree::Intern(Player seat, const std::string& key) {
  auto [it, inserted] = index_[seat].emplace(key, static_cast<int>(infostates_[seat].size()));
  if (inserted) infostates_[seat].push_back(TreeInfostate{key, {}, {}});
  return it->second;
}

int GameTree::FindInfostate(Player seat, const std::string& key) const {
  auto it = index_[seat].find(key);
  return it == index_[seat].end() ? -1 : it->second;
}

std::vector<int> GameTree::DecisionInfostates(Player seat) const {
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(infostates_[seat].size()); ++i) {
    if (!infostates_[seat][i].nodes.empty()) ids.push_back(i);
  }
  return ids;
}

std::vector<Action> GameTree::HistoryOf(int id) const {
  std::vector<Action> history;
  for (int n = id; nodes_[n].parent >= 0; n = nodes_[n].parent) history.push_back(nodes_[n].action);
  std::reverse(history.begin(), history.end());
  return history;
}

}  // namespace beliefmix
