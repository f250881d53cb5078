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

#include "beliefmix/liars_dice.h"

#include <algorithm>

#include "beliefmix/errors.h"

namespace beliefmix::liars_dice {

Action BidToAction(const LiarsDiceConfig& config, Bid bid) {
  if (bid.count < 1 || bid.count > config.TotalDice() || bid.face < 1 ||
      bid.face > config.faces) {
    throw DomainError("bid out of range");
  }
  return (bid.count - 1) * config.faces + (bid.face - 1);
}

Bid ActionToBid(const LiarsDiceConfig& config, Action action) {
  if (action < 0 || action >= config.NumBids()) throw DomainError("action is not a bid");
  return Bid{action / config.faces + 1, action % config.faces + 1};
}

std::vector<Action> LegalBids(const LiarsDiceConfig& config, std::optional<Bid> current) {
  std::vector<Action> actions;
  Action first = current ? BidToAction(config, *current) + 1 : 0;
  for (Action a = first; a < config.NumBids(); ++a) actions.push_back(a);
  if (current) actions.push_back(ChallengeAction(config));
  return actions;
}

int CountMatchingDice(const LiarsDiceConfig& config, std::span<const int> dice, int face) {
  return static_cast<int>(std::count_if(dice.begin(), dice.end(), [&](int d) {
    return d == face || d == config.faces;
  }));
}

Player ResolveChallenge(const LiarsDiceConfig& config,
                        const std::array<std::vector<int>, kNumPlayers>& dice, Bid bid,
                        Player bidder) {
  int count = CountMatchingDice(config, dice[0], bid.face) +
              CountMatchingDice(config, dice[1], bid.face);
  return count >= bid.count ? bidder : 1 - bidder;
}

// ---------------------------------------------------------------------------

LiarsDiceGame::LiarsDiceGame(LiarsDiceConfig config) : config_(config), num_roll_outcomes_(1) {
  if (config_.dice_per_player < 1 || config_.faces < 1) {
    throw DomainError("liars_dice needs at least one die and one face");
  }
  for (int i = 0; i < config_.dice_per_player; ++i) num_roll_outcomes_ *= config_.faces;
}

std::string LiarsDiceGame::ToString() const {
  return "liars_dice(dice=" + std::to_string(config_.dice_per_player) +
         ",faces=" + std::to_string(config_.faces) + ")";
}

std::unique_ptr<State> LiarsDiceGame::NewInitialState() const {
  return std::make_unique<LiarsDiceState>(shared_from_this());
}

std::string LiarsDiceGame::ActionLabel(Action action) const {
  if (action == ChallengeAction(config_)) return "challenge";
  Bid bid = ActionToBid(config_, action);
  return std::to_string(bid.count) + "x" + std::to_string(bid.face);
}

std::vector<int> LiarsDiceGame::OutcomeToDice(Action outcome) const {
  if (outcome < 0 || outcome >= num_roll_outcomes_) throw DomainError("bad roll outcome");
  std::vector<int> dice(config_.dice_per_player);
  for (int i = config_.dice_per_player - 1; i >= 0; --i) {
    dice[i] = outcome % config_.faces + 1;
    outcome /= config_.faces;
  }
  return dice;
}

// ---------------------------------------------------------------------------

LiarsDiceState::LiarsDiceState(std::shared_ptr<const Game> game) : State(std::move(game)) {}

const LiarsDiceGame& LiarsDiceState::game() const {
  return static_cast<const LiarsDiceGame&>(GetGame());
}

Player LiarsDiceState::CurrentPlayer() const {
  if (rolled_ < kNumPlayers) return kChancePlayerId;
  if (winner_ >= 0) return kTerminalPlayerId;
  return num_bids_ % 2;
}

std::optional<Bid> LiarsDiceState::CurrentBid() const {
  if (last_bid_ < 0) return std::nullopt;
  return ActionToBid(game().config(), last_bid_);
}

std::vector<Action> LiarsDiceState::DoLegalActions() const {
  if (IsChanceNode()) {
    std::vector<Action> outcomes(game().NumRollOutcomes());
    for (int i = 0; i < game().NumRollOutcomes(); ++i) outcomes[i] = i;
    return outcomes;
  }
  return LegalBids(game().config(), CurrentBid());
}

std::vector<std::pair<Action, double>> LiarsDiceState::DoChanceOutcomes() const {
  std::vector<std::pair<Action, double>> outcomes;
  double p = 1.0 / game().NumRollOutcomes();
  for (int i = 0; i < game().NumRollOutcomes(); ++i) outcomes.emplace_back(i, p);
  return outcomes;
}

bool LiarsDiceState::DoIsLegal(Action action) const {
  if (IsChanceNode()) return action >= 0 && action < game().NumRollOutcomes();
  const auto& config = game().config();
  if (action == ChallengeAction(config)) return last_bid_ >= 0;
  return action > last_bid_ && action < config.NumBids();
}

Observation LiarsDiceState::DoApplyAction(Action action) {
  Observation obs;
  if (IsChanceNode()) {
    dice_[rolled_] = game().OutcomeToDice(action);
    obs.private_parts[rolled_] = ActionToString(action);
    ++rolled_;
    return obs;
  }
  const auto& config = game().config();
  obs.public_part = game().ActionLabel(action);
  if (action == ChallengeAction(config)) {
    winner_ = ResolveChallenge(config, dice_, *CurrentBid(), last_bidder_);
  } else {
    last_bid_ = action;
    last_bidder_ = CurrentPlayer();
    ++num_bids_;
  }
  return obs;
}

double LiarsDiceState::DoUtility(Player seat) const { return seat == winner_ ? 1.0 : -1.0; }

std::string LiarsDiceState::ActionToString(Action action) const {
  if (IsChanceNode()) {
    std::string label;
    for (int d : game().OutcomeToDice(action)) {
      if (!label.empty()) label.push_back(',');
      label += std::to_string(d);
    }
    return label;
  }
  return game().ActionLabel(action);
}

std::string LiarsDiceState::WorldKey() const {
  std::string key = "ld";
  for (const auto& seat_dice : dice_) {
    key.push_back('/');
    for (int d : seat_dice) key += std::to_string(d) + ",";
  }
  key += "b" + std::to_string(last_bid_) + "n" + std::to_string(num_bids_ % 2) + "w" +
         std::to_string(winner_);
  return key;
}

std::string LiarsDiceState::ToString() const {
  std::string out;
  for (Player p = 0; p < kNumPlayers; ++p) {
    out += "P" + std::to_string(p) + ":";
    for (int d : dice_[p]) out += std::to_string(d);
    out += " ";
  }
  out += "bid=" + (last_bid_ >= 0 ? game().ActionLabel(last_bid_) : std::string("-"));
  if (winner_ >= 0) out += " winner=" + std::to_string(winner_);
  return out;
}

std::unique_ptr<State> LiarsDiceState::Clone() const {
  return std::unique_ptr<State>(new LiarsDiceState(*this));
}

}  // namespace beliefmix::liars_dice
