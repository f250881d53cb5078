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

// Miniature trick-taking card game.
//
// `cards` cards in `suits` suits of equal length; card id = suit * ranks +
// rank. `hidden` cards are set aside unseen for the whole game and the rest
// are dealt evenly: seat 0's hand by the first chance event, seat 1's by the
// second, each observed only by its owner. Seat 0 leads the first trick and
// each trick winner leads the next. The second player must follow the lead
// suit when able; an off-suit card never wins. Played cards are public.
//
// Winning more than half the tricks pays +1, exactly half is a draw.

#ifndef BELIEFMIX_TRICK_GAME_H_
#define BELIEFMIX_TRICK_GAME_H_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "beliefmix/fosg.h"

namespace beliefmix::trick_game {

using CardMask = uint32_t;

struct TrickGameConfig {
  int cards = 10;
  int hidden = 2;
  int suits = 2;

  int Ranks() const { return cards / suits; }
  int HandSize() const { return (cards - hidden) / 2; }
};

int CardSuit(const TrickGameConfig& config, int card);
int CardRank(const TrickGameConfig& config, int card);
std::string CardLabel(const TrickGameConfig& config, int card);

// Seat taking a trick: the replier wins only with a higher card of the lead
// suit.
Player TrickWinner(const TrickGameConfig& config, Player leader, int lead_card,
                   int reply_card);

// Cards the next player may play given `hand`; `lead_card` < 0 when leading.
std::vector<int> FollowSuitOptions(const TrickGameConfig& config, CardMask hand,
                                   int lead_card);

class TrickGame final : public Game {
 public:
  explicit TrickGame(TrickGameConfig config);

  std::string Name() const override { return "trick_game"; }
  std::string ToString() const override;
  std::unique_ptr<State> NewInitialState() const override;
  int NumDistinctActions() const override { return config_.cards; }
  std::string ActionLabel(Action action) const override;
  double MinUtility() const override { return -1; }
  double MaxUtility() const override { return 1; }

  const TrickGameConfig& config() const { return config_; }
  // All hand masks for seat 0, in lexicographic order of card ids.
  const std::vector<CardMask>& FirstHands() const { return first_hands_; }
  // Index combinations (into the cards left after seat 0's deal) for seat 1.
  const std::vector<std::vector<int>>& SecondHandPatterns() const { return second_patterns_; }
  std::string HandLabel(CardMask hand) const;

 private:
  TrickGameConfig config_;
  std::vector<CardMask> first_hands_;
  std::vector<std::vector<int>> second_patterns_;
};

class TrickState final : public State {
 public:
  explicit TrickState(std::shared_ptr<const Game> game);

  Player CurrentPlayer() const override;
  std::string ActionToString(Action action) const override;
  std::string WorldKey() const override;
  std::string ToString() const override;
  std::unique_ptr<State> Clone() const override;

  CardMask Hand(Player seat) const { return hands_[seat]; }
  CardMask Played() const { return played_; }
  // Cards neither in a hand nor played; constant after the deal.
  CardMask Hidden() const;
  int TricksWon(Player seat) const { return tricks_[seat]; }

 protected:
  std::vector<Action> DoLegalActions() const override;
  std::vector<std::pair<Action, double>> DoChanceOutcomes() const override;
  bool DoIsLegal(Action action) const override;
  Observation DoApplyAction(Action action) override;
  double DoUtility(Player seat) const override;

 private:
  const TrickGame& game() const;
  CardMask SecondHandFromOutcome(Action outcome) const;
  int NumChanceOutcomes() const;

  std::array<CardMask, kNumPlayers> hands_ = {0, 0};
  CardMask played_ = 0;
  int dealt_ = 0;
  Player leader_ = 0;
  Player to_act_ = 0;
  int lead_card_ = -1;
  std::array<int, kNumPlayers> tricks_ = {0, 0};
};

}  // namespace beliefmix::trick_game

#endif  // BELIEFMIX_TRICK_GAME_H_
