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

#include "beliefmix/leduc_poker.h"

#include <algorithm>

#include "beliefmix/errors.h"

namespace beliefmix::leduc_poker {

std::string CardLabel(int card) {
  static constexpr char kRanks[] = "JQK";
  static constexpr char kSuits[] = "sh";
  if (card < 0 || card >= kDeckSize) throw DomainError("bad Leduc card");
  return std::string{kRanks[CardRank(card)], kSuits[CardSuit(card)]};
}

int ShowdownWinner(std::array<int, kNumPlayers> cards, int board) {
  bool pair0 = CardRank(cards[0]) == CardRank(board);
  bool pair1 = CardRank(cards[1]) == CardRank(board);
  if (pair0 != pair1) return pair0 ? 0 : 1;
  if (CardRank(cards[0]) == CardRank(cards[1])) return -1;
  return CardRank(cards[0]) > CardRank(cards[1]) ? 0 : 1;
}

std::unique_ptr<State> LeducGame::NewInitialState() const {
  return std::make_unique<LeducState>(shared_from_this());
}

std::string LeducGame::ActionLabel(Action action) const {
  switch (action) {
    case kFold: return "fold";
    case kCall: return "call";
    case kRaise: return "raise";
    default: throw DomainError("bad Leduc action");
  }
}

// Largest contribution: ante, two raises of 2 and two raises of 4.
double LeducGame::MinUtility() const {
  return -(kAnte + kMaxRaisesPerRound * (kRaiseSize[0] + kRaiseSize[1]));
}
double LeducGame::MaxUtility() const { return -MinUtility(); }

// ---------------------------------------------------------------------------

LeducState::LeducState(std::shared_ptr<const Game> game) : State(std::move(game)) {}

bool LeducState::NeedsDeal() const {
  return cards_[1] < 0 || (round_ == 1 && board_ < 0);
}

Player LeducState::CurrentPlayer() const {
  if (finished_) return kTerminalPlayerId;
  if (NeedsDeal()) return kChancePlayerId;
  return to_act_;
}

std::vector<int> LeducState::RemainingCards() const {
  std::vector<int> remaining;
  for (int c = 0; c < kDeckSize; ++c) {
    if (c != cards_[0] && c != cards_[1] && c != board_) remaining.push_back(c);
  }
  return remaining;
}

std::vector<Action> LeducState::DoLegalActions() const {
  if (IsChanceNode()) return RemainingCards();
  std::vector<Action> actions = {kFold, kCall};
  if (raises_in_round_ < kMaxRaisesPerRound) actions.push_back(kRaise);
  return actions;
}

std::vector<std::pair<Action, double>> LeducState::DoChanceOutcomes() const {
  auto remaining = RemainingCards();
  std::vector<std::pair<Action, double>> outcomes;
  for (int c : remaining) outcomes.emplace_back(c, 1.0 / remaining.size());
  return outcomes;
}

bool LeducState::DoIsLegal(Action action) const {
  if (IsChanceNode()) {
    auto remaining = RemainingCards();
    return std::find(remaining.begin(), remaining.end(), action) != remaining.end();
  }
  if (action == kRaise) return raises_in_round_ < kMaxRaisesPerRound;
  return action == kFold || action == kCall;
}

Observation LeducState::DoApplyAction(Action action) {
  Observation obs;
  if (IsChanceNode()) {
    if (cards_[0] < 0) {
      cards_[0] = action;
      obs.private_parts[0] = CardLabel(action);
    } else if (cards_[1] < 0) {
      cards_[1] = action;
      obs.private_parts[1] = CardLabel(action);
    } else {
      board_ = action;
      obs.public_part = CardLabel(action);
    }
    return obs;
  }
  obs.public_part = GetGame().ActionLabel(action);
  Player me = to_act_;
  Player other = 1 - me;
  switch (action) {
    case kFold:
      folded_ = me;
      finished_ = true;
      return obs;
    case kCall:
      contributions_[me] = contributions_[other];
      if (actions_in_round_ > 0) {
        if (round_ == 1) {
          finished_ = true;
          return obs;
        }
        round_ = 1;
        raises_in_round_ = 0;
        actions_in_round_ = 0;
        to_act_ = 0;
        return obs;
      }
      break;
    case kRaise:
      contributions_[me] = contributions_[other] + kRaiseSize[round_];
      ++raises_in_round_;
      break;
  }
  ++actions_in_round_;
  to_act_ = other;
  return obs;
}

double LeducState::DoUtility(Player seat) const {
  Player winner;
  if (folded_ >= 0) {
    winner = 1 - folded_;
  } else {
    winner = ShowdownWinner(cards_, board_);
    if (winner < 0) return 0.0;
  }
  return seat == winner ? contributions_[1 - seat] : -contributions_[seat];
}

std::string LeducState::ActionToString(Action action) const {
  if (IsChanceNode()) return CardLabel(action);
  return GetGame().ActionLabel(action);
}

std::string LeducState::WorldKey() const {
  std::string key = "lp";
  for (int v : {cards_[0], cards_[1], board_, round_, contributions_[0], contributions_[1],
                raises_in_round_, actions_in_round_, to_act_, folded_,
                static_cast<int>(finished_)}) {
    key += std::to_string(v);
    key.push_back(',');
  }
  return key;
}

std::string LeducState::ToString() const {
  auto card = [](int c) { return c >= 0 ? CardLabel(c) : std::string("--"); };
  return "P0:" + card(cards_[0]) + " P1:" + card(cards_[1]) + " board:" + card(board_) +
         " round:" + std::to_string(round_) + " pot:" + std::to_string(contributions_[0]) +
         "/" + std::to_string(contributions_[1]) + " history:" + HistoryString();
}

std::unique_ptr<State> LeducState::Clone() const {
  return std::unique_ptr<State>(new LeducState(*this));
}

}  // namespace beliefmix::leduc_poker
