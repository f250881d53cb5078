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

// Fully enumerated game tree with interned infostate keys.
//
// Nodes are stored in a flat array in depth-first order: a node's children
// occupy a contiguous index range and every child index exceeds its parent's.
// All nodes of one infostate lie at the same depth because keys carry one
// entry per transition.

#ifndef BELIEFMIX_GAME_TREE_H_
#define BELIEFMIX_GAME_TREE_H_

#include <array>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "beliefmix/fosg.h"

namespace beliefmix {

inline constexpr size_t kDefaultTreeNodeLimit = 4'000'000;

struct TreeNode {
  int parent = -1;
  Action action = -1;  // Edge from the parent.
  Player player = kTerminalPlayerId;
  int depth = 0;
  double chance_prob = 1.0;  // Probability of `action` when the parent is chance.
  int first_child = -1;
  int num_children = 0;
  // Interned infostate ids of both seats; set at player nodes only.
  std::array<int, kNumPlayers> infostate = {-1, -1};
  double utility0 = 0.0;  // Seat-0 payoff at terminals.
};

// Infostate of one seat, with the decision nodes that belong to it.
struct TreeInfostate {
  std::string key;
  std::vector<Action> legal_actions;  // Empty unless the seat acts here.
  std::vector<int> nodes;             // Nodes where this seat acts.
};

class GameTree {
 public:
  // Throws DomainError when the tree has more than `node_limit` nodes.
  explicit GameTree(std::shared_ptr<const Game> game, size_t node_limit = kDefaultTreeNodeLimit);

  const Game& game() const { return *game_; }
  const std::shared_ptr<const Game>& game_ptr() const { return game_; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const TreeNode& node(int id) const { return nodes_[id]; }
  int max_depth() const { return max_depth_; }

  // Infostates of `seat` observed at any player node, in first-visit order.
  const std::vector<TreeInfostate>& infostates(Player seat) const { return infostates_[seat]; }
  const TreeInfostate& infostate(Player seat, int id) const { return infostates_[seat][id]; }
  // -1 when the key never occurs.
  int FindInfostate(Player seat, const std::string& key) const;

  // Ids of the decision infostates of `seat` (those with legal actions).
  std::vector<int> DecisionInfostates(Player seat) const;

  // Action sequence from the root to `id`.
  std::vector<Action> HistoryOf(int id) const;

 private:
  int Intern(Player seat, const std::string& key);

  std::shared_ptr<const Game> game_;
  std::vector<TreeNode> nodes_;
  std::array<std::vector<TreeInfostate>, kNumPlayers> infostates_;
  std::array<std::unordered_map<std::string, int>, kNumPlayers> index_;
  int max_depth_ = 0;
};

}  // namespace beliefmix

#endif  // BELIEFMIX_GAME_TREE_H_
