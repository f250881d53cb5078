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

// Two-player Liar's Dice with a wild highest face.
//
// Each seat rolls `dice_per_player` dice of `faces` sides (one chance event
// per seat, observed privately by its owner). Seats then alternate bids
// (count, face), seat 0 first; every bid must raise the previous one in
// (count, face) order. Instead of bidding a seat may challenge the last bid;
// the bid stands when the dice showing its face, plus the dice showing the
// wild face `faces`, number at least `count`.
//
// Action ids: bid (c, f) -> (c - 1) * faces + (f - 1); challenge -> the id
// after the last bid. Roll outcomes are the base-`faces` encoding of the
// ordered dice tuple.

#ifndef BELIEFMIX_LIARS_DICE_H_
#define BELIEFMIX_LIARS_DICE_H_

#include <array>
#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "beliefmix/fosg.h"

namespace beliefmix::liars_dice {

struct LiarsDiceConfig {
  int dice_per_player = 1;
  int faces = 2;

  int TotalDice() const { return 2 * dice_per_player; }
  int NumBids() const { return TotalDice() * faces; }
};

struct Bid {
  int count = 0;
  int face = 0;

  friend auto operator<=>(const Bid&, const Bid&) = default;
};

Action BidToAction(const LiarsDiceConfig& config, Bid bid);
Bid ActionToBid(const LiarsDiceConfig& config, Action action);
inline Action ChallengeAction(const LiarsDiceConfig& config) { return config.NumBids(); }

// Legal moves given the standing bid: every strictly higher bid, plus the
// challenge when a bid exists.
std::vector<Action> LegalBids(const LiarsDiceConfig& config, std::optional<Bid> current);

// Dice showing `face` plus wild dice.
int CountMatchingDice(const LiarsDiceConfig& config, std::span<const int> dice, int face);

// Winner of a challenge against `bid`, which `bidder` made.
Player ResolveChallenge(const LiarsDiceConfig& config,
                        const std::array<std::vector<int>, kNumPlayers>& dice, Bid bid,
                        Player bidder);

class LiarsDiceGame final : public Game {
 public:
  explicit LiarsDiceGame(LiarsDiceConfig config);

  std::string Name() const override { return "liars_dice"; }
  std::string ToString() const override;
  std::unique_ptr<State> NewInitialState() const override;
  int NumDistinctActions() const override { return config_.NumBids() + 1; }
  std::string ActionLabel(Action action) const override;
  double MinUtility() const override { return -1; }
  double MaxUtility() const override { return 1; }

  const LiarsDiceConfig& config() const { return config_; }
  int NumRollOutcomes() const { return num_roll_outcomes_; }
  std::vector<int> OutcomeToDice(Action outcome) const;

 private:
  LiarsDiceConfig config_;
  int num_roll_outcomes_;
};

class LiarsDiceState final : public State {
 public:
  explicit LiarsDiceState(std::shared_ptr<const Game> game);

  Player CurrentPlayer() const override;
  std::string ActionToString(Action action) const override;
  std::string WorldKey() const override;
  std::string ToString() const override;
  std::unique_ptr<State> Clone() const override;

  const std::array<std::vector<int>, kNumPlayers>& dice() const { return dice_; }
  std::optional<Bid> CurrentBid() const;
  int NumBids() const { return num_bids_; }

 protected:
  std::vector<Action> DoLegalActions() const override;
  std::vector<std::pair<Action, double>> DoChanceOutcomes() const override;
  bool DoIsLegal(Action action) const override;
  Observation DoApplyAction(Action action) override;
  double DoUtility(Player seat) const override;

 private:
  const LiarsDiceGame& game() const;

  std::array<std::vector<int>, kNumPlayers> dice_;
  int rolled_ = 0;
  Action last_bid_ = -1;
  Player last_bidder_ = -1;
  int num_bids_ = 0;
  Player winner_ = -1;
};

}  // namespace beliefmix::liars_dice

#endif  // BELIEFMIX_LIARS_DICE_H_
