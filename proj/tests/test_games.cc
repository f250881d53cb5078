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

#include "test_games.h"

#include <algorithm>
#include <functional>
#include <set>

#include "beliefmix/errors.h"
#include "beliefmix/perfect_info.h"
#include "beliefmix/rng.h"

namespace beliefmix::testing {
namespace {

class OneShotState final : public State {
 public:
  using State::State;
  Player CurrentPlayer() const override { return choice_ < 0 ? 0 : kTerminalPlayerId; }
  std::string ActionToString(Action a) const override { return GetGame().ActionLabel(a); }
  std::string WorldKey() const override { return "os" + std::to_string(choice_); }
  std::string ToString() const override { return WorldKey(); }
  std::unique_ptr<State> Clone() const override {
    return std::unique_ptr<State>(new OneShotState(*this));
  }

 protected:
  std::vector<Action> DoLegalActions() const override { return {0, 1}; }
  Observation DoApplyAction(Action a) override {
    choice_ = a;
    Observation obs;
    obs.public_part = GetGame().ActionLabel(a);
    return obs;
  }
  double DoUtility(Player seat) const override {
    double u0 = choice_ == 0 ? 1.0 : -1.0;
    return seat == 0 ? u0 : -u0;
  }

 private:
  Action choice_ = -1;
};

class RelabeledState final : public State {
 public:
  RelabeledState(std::shared_ptr<const Game> game, std::unique_ptr<State> inner)
      : State(std::move(game)), inner_(std::move(inner)) {}
  RelabeledState(const RelabeledState& other) : State(other), inner_(other.inner_->Clone()) {}

  Player CurrentPlayer() const override { return inner_->CurrentPlayer(); }
  std::string ActionToString(Action a) const override { return inner_->ActionToString(a); }
  std::string WorldKey() const override { return "r" + inner_->WorldKey(); }
  std::string ToString() const override { return inner_->ToString(); }
  std::unique_ptr<State> Clone() const override {
    return std::unique_ptr<State>(new RelabeledState(*this));
  }

 protected:
  std::vector<Action> DoLegalActions() const override { return inner_->LegalActions(); }
  std::vector<std::pair<Action, double>> DoChanceOutcomes() const override {
    return inner_->ChanceOutcomes();
  }
  bool DoIsLegal(Action a) const override { return inner_->IsLegal(a); }
  Observation DoApplyAction(Action a) override {
    Observation obs = inner_->ApplyActionInPlace(a);
    obs.public_part = RelabelObservation(obs.public_part);
    for (auto& part : obs.private_parts) part = RelabelObservation(part);
    return obs;
  }
  double DoUtility(Player seat) const override { return inner_->Utility(seat); }

 private:
  std::unique_ptr<State> inner_;
};

}  // namespace

std::unique_ptr<State> OneShotGame::NewInitialState() const {
  return std::make_unique<OneShotState>(shared_from_this());
}

std::unique_ptr<State> RelabeledGame::NewInitialState() const {
  return std::make_unique<RelabeledState>(shared_from_this(), inner_->NewInitialState());
}

std::string RelabelObservation(const std::string& obs) {
  std::string out = "~";
  for (auto it = obs.rbegin(); it != obs.rend(); ++it) out.push_back(*it);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::vector<Action>, double>> NaiveConsistentHistories(
    const Game& game, const std::string& key) {
  const bool is_public = key.front() == 'p';
  std::vector<std::string> public_obs;
  std::vector<InfostateEntry> entries;
  Player seat = -1;
  if (is_public) {
    public_obs = PublicInfostate::FromKey(key).observations();
  } else {
    Infostate info = Infostate::FromKey(key);
    seat = info.seat();
    entries = info.entries();
  }
  const size_t length = is_public ? public_obs.size() : entries.size();

  std::vector<std::pair<std::vector<Action>, double>> out;
  std::vector<Action> history;
  std::function<void(const State&, double)> visit = [&](const State& state, double prob) {
    size_t depth = history.size();
    if (depth == length) {
      out.emplace_back(history, prob);
      return;
    }
    if (state.IsTerminal()) return;
    std::vector<std::pair<Action, double>> edges;
    if (state.IsChanceNode()) {
      edges = state.ChanceOutcomes();
    } else {
      for (Action a : state.LegalActions()) edges.emplace_back(a, 1.0);
    }
    Player actor = state.CurrentPlayer();
    for (const auto& [a, p] : edges) {
      auto [child, obs] = state.Child(a);
      bool match;
      if (is_public) {
        match = obs.public_part == public_obs[depth];
      } else {
        const InfostateEntry& e = entries[depth];
        std::optional<Action> own;
        if (actor == seat) own = a;
        match = obs.public_part == e.public_obs && obs.private_parts[seat] == e.private_obs &&
                own == e.own_action;
      }
      if (!match) continue;
      history.push_back(a);
      visit(*child, prob * p);
      history.pop_back();
    }
  };
  visit(*game.NewInitialState(), 1.0);
  return out;
}

std::vector<double> DirectPimc(const Game& game, const std::string& infostate_key,
                               const std::vector<Action>& legal, int budget, uint64_t seed) {
  Player seat = Infostate::FromKey(infostate_key).seat();
  auto histories = NaiveConsistentHistories(game, infostate_key);
  double total = 0.0;
  for (const auto& h : histories) total += h.second;
  std::vector<double> cumulative;
  double running = 0.0;
  for (const auto& h : histories) {
    running += h.second / total;
    cumulative.push_back(running);
  }
  std::vector<std::map<Action, double>> values(histories.size());
  std::map<Action, double> score;
  Rng rng(seed);
  for (int j = 0; j < budget; ++j) {
    double u = rng.Uniform01() * cumulative.back();
    size_t k = std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
    k = std::min(k, histories.size() - 1);
    if (values[k].empty()) {
      auto world = ReplayHistory(game, histories[k].first);
      for (Action a : world->LegalActions()) {
        values[k][a] = UnprunedMinimax(*world->Child(a).first, seat);
      }
    }
    for (const auto& [a, v] : values[k]) score[a] += v;
  }
  std::vector<double> out;
  for (Action a : legal) out.push_back(score[a] / budget);
  return out;
}

// ---------------------------------------------------------------------------

double BruteForceBestResponse(const GameTree& tree, const TabularPolicy& policy,
                              Player responder) {
  const auto& nodes = tree.nodes();
  const Player fixed = 1 - responder;
  using Assignment = std::map<int, int>;  // Responder infostate id -> child index.

  // Child responder infostates reached after (infostate, child index).
  std::map<std::pair<int, int>, std::set<int>> children;
  std::set<int> roots;
  for (size_t n = 0; n < nodes.size(); ++n) {
    if (nodes[n].player != responder) continue;
    int id = nodes[n].infostate[responder];
    int prev = -1, via = -1;
    for (int m = static_cast<int>(n), up = nodes[n].parent; up >= 0; m = up, up = nodes[up].parent) {
      if (nodes[up].player == responder) {
        prev = up;
        via = m - nodes[up].first_child;
        break;
      }
    }
    if (prev < 0) {
      roots.insert(id);
    } else {
      children[{nodes[prev].infostate[responder], via}].insert(id);
    }
  }

  std::function<std::vector<Assignment>(int)> strategies = [&](int id) {
    std::vector<Assignment> out;
    const auto& legal = tree.infostate(responder, id).legal_actions;
    for (int k = 0; k < static_cast<int>(legal.size()); ++k) {
      std::vector<Assignment> partial = {Assignment{{id, k}}};
      auto it = children.find({id, k});
      if (it != children.end()) {
        for (int child : it->second) {
          auto sub = strategies(child);
          std::vector<Assignment> next;
          for (const auto& p : partial) {
            for (const auto& s : sub) {
              Assignment merged = p;
              merged.insert(s.begin(), s.end());
              next.push_back(std::move(merged));
            }
          }
          partial = std::move(next);
        }
      }
      out.insert(out.end(), partial.begin(), partial.end());
    }
    return out;
  };

  const double sign = responder == 0 ? 1.0 : -1.0;
  auto evaluate = [&](const Assignment& assignment) {
    std::vector<double> value(nodes.size(), 0.0);
    for (int n = static_cast<int>(nodes.size()) - 1; n >= 0; --n) {
      const TreeNode& node = nodes[n];
      if (node.player == kTerminalPlayerId) {
        value[n] = sign * node.utility0;
      } else if (node.player == responder) {
        auto it = assignment.find(node.infostate[responder]);
        value[n] = value[node.first_child + (it == assignment.end() ? 0 : it->second)];
      } else {
        double v = 0.0;
        for (int k = 0; k < node.num_children; ++k) {
          int c = node.first_child + k;
          double w = node.player == kChancePlayerId
                         ? nodes[c].chance_prob
                         : policy.Prob(tree.infostate(fixed, node.infostate[fixed]).key,
                                       nodes[c].action);
          v += w * value[c];
        }
        value[n] = v;
      }
    }
    return value[0];
  };

  Assignment best_total;
  for (int root : roots) {
    double best = -1e300;
    Assignment best_sub;
    for (const auto& s : strategies(root)) {
      double v = evaluate(s);
      if (v > best) {
        best = v;
        best_sub = s;
      }
    }
    best_total.insert(best_sub.begin(), best_sub.end());
  }
  return evaluate(best_total);
}

TabularPolicy RandomPolicy(const GameTree& tree, Player seat, uint64_t seed) {
  Rng rng(seed);
  TabularPolicy policy;
  for (int id : tree.DecisionInfostates(seat)) {
    const auto& info = tree.infostate(seat, id);
    std::vector<double> w;
    double total = 0.0;
    for (size_t k = 0; k < info.legal_actions.size(); ++k) {
      w.push_back(rng.Uniform01() + 1e-3);
      total += w.back();
    }
    for (double& x : w) x /= total;
    policy.SetRow(info.key, PolicyRow{info.legal_actions, w});
  }
  return policy;
}

TabularPolicy UniformPolicy(const GameTree& tree, Player seat) {
  TabularPolicy policy;
  for (int id : tree.DecisionInfostates(seat)) {
    const auto& info = tree.infostate(seat, id);
    policy.SetRow(info.key, UniformRow(info.legal_actions));
  }
  return policy;
}

TabularPolicy PurePolicy(const GameTree& tree, Player seat,
                         const std::map<std::string, Action>& choice) {
  TabularPolicy policy;
  for (int id : tree.DecisionInfostates(seat)) {
    const auto& info = tree.infostate(seat, id);
    PolicyRow row{info.legal_actions, std::vector<double>(info.legal_actions.size(), 0.0)};
    Action a = choice.count(info.key) ? choice.at(info.key) : info.legal_actions.front();
    for (size_t k = 0; k < row.actions.size(); ++k) row.probs[k] = row.actions[k] == a ? 1.0 : 0.0;
    policy.SetRow(info.key, row);
  }
  return policy;
}

}  // namespace beliefmix::testing
