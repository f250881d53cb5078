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

// Two-player Leduc Hold'em.
//
// Deck of 6 cards: ranks J < Q < K in two suits; card id = 2 * rank + suit.
// Each seat antes 1 and receives one private card. Two betting rounds, seat 0
// opening both; raises are 2 in the first round and 4 in the second, at most
// two raises per round. A single public board card is dealt between rounds.
// At showdown a card pairing the board wins, otherwise the higher rank; equal
// ranks split the pot.

#ifndef BELIEFMIX_LEDUC_POKER_H_
#define BELIEFMIX_LEDUC_POKER_H_

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "beliefmix/fosg.h"

namespace beliefmix::leduc_poker {

inline constexpr int kDeckSize = 6;
inline constexpr int kNumRanks = 3;
inline constexpr int kAnte = 1;
inline constexpr int kMaxRaisesPerRound = 2;
inline constexpr std::array<int, 2> kRaiseSize = {2, 4};
// Notional starting stack; only used to check chip conservation.
inline constexpr int kStartingStack = 100;

enum LeducAction : Action { kFold = 0, kCall = 1, kRaise = 2 };

inline int CardRank(int card) { return card / 2; }
inline int CardSuit(int card) { return card % 2; }
std::string CardLabel(int card);

// Showdown winner (0 or 1), or -1 for a split pot.
int ShowdownWinner(std::array<int, kNumPlayers> cards, int board);

class LeducGame final : public Game {
 public:
  LeducGame() = default;

  std::string Name() const override { return "leduc_poker"; }
  std::string ToString() const override { return "leduc_poker()"; }
  std::unique_ptr<State> NewInitialState() const override;
  int NumDistinctActions() const override { return 3; }
  std::string ActionLabel(Action action) const override;
  double MinUtility() const override;
  double MaxUtility() const override;
};

class LeducState final : public State {
 public:
  explicit LeducState(std::shared_ptr<const Game> game);

  Player CurrentPlayer() const override;
  std::string ActionToString(Action action) const override;
  std::string WorldKey() const override;
  std::string ToString() const override;
  std::unique_ptr<State> Clone() const override;

  const std::array<int, kNumPlayers>& cards() const { return cards_; }
  int board() const { return board_; }
  int round() const { return round_; }
  int Contribution(Player seat) const { return contributions_[seat]; }
  int Pot() const { return contributions_[0] + contributions_[1]; }
  int Stack(Player seat) const { return kStartingStack - contributions_[seat]; }
  int RaisesThisRound() const { return raises_in_round_; }

 protected:
  std::vector<Action> DoLegalActions() const override;
  std::vector<std::pair<Action, double>> DoChanceOutcomes() const override;
  bool DoIsLegal(Action action) const override;
  Observation DoApplyAction(Action action) override;
  double DoUtility(Player seat) const override;

 private:
  std::vector<int> RemainingCards() const;
  bool NeedsDeal() const;

  std::array<int, kNumPlayers> cards_ = {-1, -1};
  int board_ = -1;
  int round_ = 0;
  std::array<int, kNumPlayers> contributions_ = {kAnte, kAnte};
  int raises_in_round_ = 0;
  int actions_in_round_ = 0;
  Player to_act_ = 0;
  Player folded_ = -1;
  bool finished_ = false;
};

}  // namespace beliefmix::leduc_poker

#endif  // BELIEFMIX_LEDUC_POKER_H_
