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

#include "beliefmix/trick_game.h"

#include "beliefmix/errors.h"

namespace beliefmix::trick_game {
namespace {

// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> Combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(k);
  for (int i = 0; i < k; ++i) current[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == n - k + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

bool HasCard(CardMask mask, int card) { return (mask >> card) & 1u; }

}  // namespace

int CardSuit(const TrickGameConfig& config, int card) { return card / config.Ranks(); }
int CardRank(const TrickGameConfig& config, int card) { return card % config.Ranks(); }

std::string CardLabel(const TrickGameConfig& config, int card) {
  static constexpr char kSuitLetters[] = "shdc";
  int suit = CardSuit(config, card);
  std::string label = suit < 4 ? std::string(1, kSuitLetters[suit]) : "x" + std::to_string(suit);
  return label + std::to_string(CardRank(config, card) + 1);
}

Player TrickWinner(const TrickGameConfig& config, Player leader, int lead_card,
                   int reply_card) {
  if (CardSuit(config, reply_card) == CardSuit(config, lead_card) &&
      CardRank(config, reply_card) > CardRank(config, lead_card)) {
    return 1 - leader;
  }
  return leader;
}

std::vector<int> FollowSuitOptions(const TrickGameConfig& config, CardMask hand,
                                   int lead_card) {
  std::vector<int> all, following;
  for (int c = 0; c < config.cards; ++c) {
    if (!HasCard(hand, c)) continue;
    all.push_back(c);
    if (lead_card >= 0 && CardSuit(config, c) == CardSuit(config, lead_card)) {
      following.push_back(c);
    }
  }
  return following.empty() ? all : following;
}

// ---------------------------------------------------------------------------

TrickGame::TrickGame(TrickGameConfig config) : config_(config) {
  if (config_.cards < 2 || config_.cards > 32 || config_.suits < 1 ||
      config_.cards % config_.suits != 0 || config_.hidden < 0 ||
      config_.hidden >= config_.cards || (config_.cards - config_.hidden) % 2 != 0) {
    throw DomainError("invalid trick_game configuration");
  }
  for (const auto& combo : Combinations(config_.cards, config_.HandSize())) {
    CardMask mask = 0;
    for (int c : combo) mask |= CardMask{1} << c;
    first_hands_.push_back(mask);
  }
  second_patterns_ = Combinations(config_.cards - config_.HandSize(), config_.HandSize());
}

std::string TrickGame::ToString() const {
  return "trick_game(cards=" + std::to_string(config_.cards) +
         ",hidden=" + std::to_string(config_.hidden) +
         ",suits=" + std::to_string(config_.suits) + ")";
}

std::unique_ptr<State> TrickGame::NewInitialState() const {
  return std::make_unique<TrickState>(shared_from_this());
}

std::string TrickGame::ActionLabel(Action action) const {
  if (action < 0 || action >= config_.cards) throw DomainError("bad card action");
  return CardLabel(config_, action);
}

std::string TrickGame::HandLabel(CardMask hand) const {
  std::string label;
  for (int c = 0; c < config_.cards; ++c) {
    if (!HasCard(hand, c)) continue;
    if (!label.empty()) label.push_back(',');
    label += CardLabel(config_, c);
  }
  return label;
}

// ---------------------------------------------------------------------------

TrickState::TrickState(std::shared_ptr<const Game> game) : State(std::move(game)) {}

const TrickGame& TrickState::game() const { return static_cast<const TrickGame&>(GetGame()); }

Player TrickState::CurrentPlayer() const {
  if (dealt_ < kNumPlayers) return kChancePlayerId;
  if (hands_[0] == 0 && hands_[1] == 0) return kTerminalPlayerId;
  return to_act_;
}

CardMask TrickState::Hidden() const {
  const auto& config = game().config();
  CardMask deck = config.cards == 32 ? ~CardMask{0} : (CardMask{1} << config.cards) - 1;
  if (dealt_ < kNumPlayers) return 0;
  return deck & ~(hands_[0] | hands_[1] | played_);
}

int TrickState::NumChanceOutcomes() const {
  return dealt_ == 0 ? static_cast<int>(game().FirstHands().size())
                     : static_cast<int>(game().SecondHandPatterns().size());
}

CardMask TrickState::SecondHandFromOutcome(Action outcome) const {
  const auto& config = game().config();
  std::vector<int> remaining;
  for (int c = 0; c < config.cards; ++c) {
    if (!HasCard(hands_[0], c)) remaining.push_back(c);
  }
  CardMask mask = 0;
  for (int i : game().SecondHandPatterns()[outcome]) mask |= CardMask{1} << remaining[i];
  return mask;
}

std::vector<Action> TrickState::DoLegalActions() const {
  if (IsChanceNode()) {
    std::vector<Action> outcomes(NumChanceOutcomes());
    for (int i = 0; i < NumChanceOutcomes(); ++i) outcomes[i] = i;
    return outcomes;
  }
  return FollowSuitOptions(game().config(), hands_[to_act_], lead_card_);
}

std::vector<std::pair<Action, double>> TrickState::DoChanceOutcomes() const {
  int n = NumChanceOutcomes();
  std::vector<std::pair<Action, double>> outcomes;
  outcomes.reserve(n);
  for (int i = 0; i < n; ++i) outcomes.emplace_back(i, 1.0 / n);
  return outcomes;
}

bool TrickState::DoIsLegal(Action action) const {
  if (IsChanceNode()) return action >= 0 && action < NumChanceOutcomes();
  const auto& config = game().config();
  if (action < 0 || action >= config.cards || !HasCard(hands_[to_act_], action)) return false;
  if (lead_card_ < 0 || CardSuit(config, action) == CardSuit(config, lead_card_)) return true;
  for (int c = 0; c < config.cards; ++c) {
    if (HasCard(hands_[to_act_], c) && CardSuit(config, c) == CardSuit(config, lead_card_)) {
      return false;
    }
  }
  return true;
}

Observation TrickState::DoApplyAction(Action action) {
  Observation obs;
  if (IsChanceNode()) {
    CardMask hand = dealt_ == 0 ? game().FirstHands()[action] : SecondHandFromOutcome(action);
    hands_[dealt_] = hand;
    obs.private_parts[dealt_] = game().HandLabel(hand);
    ++dealt_;
    return obs;
  }
  const auto& config = game().config();
  obs.public_part = CardLabel(config, action);
  hands_[to_act_] &= ~(CardMask{1} << action);
  played_ |= CardMask{1} << action;
  if (lead_card_ < 0) {
    lead_card_ = action;
    to_act_ = 1 - to_act_;
  } else {
    Player winner = TrickWinner(config, leader_, lead_card_, action);
    ++tricks_[winner];
    leader_ = winner;
    to_act_ = winner;
    lead_card_ = -1;
  }
  return obs;
}

double TrickState::DoUtility(Player seat) const {
  int diff = tricks_[seat] - tricks_[1 - seat];
  return diff > 0 ? 1.0 : (diff < 0 ? -1.0 : 0.0);
}

std::string TrickState::ActionToString(Action action) const {
  if (IsChanceNode()) {
    return game().HandLabel(dealt_ == 0 ? game().FirstHands()[action]
                                        : SecondHandFromOutcome(action));
  }
  return game().ActionLabel(action);
}

std::string TrickState::WorldKey() const {
  return "tg" + std::to_string(hands_[0]) + "," + std::to_string(hands_[1]) + "," +
         std::to_string(lead_card_) + "," + std::to_string(to_act_) + "," +
         std::to_string(tricks_[0]) + "," + std::to_string(tricks_[1]) + "," +
         std::to_string(dealt_);
}

std::string TrickState::ToString() const {
  return "P0:[" + game().HandLabel(hands_[0]) + "] P1:[" + game().HandLabel(hands_[1]) +
         "] tricks:" + std::to_string(tricks_[0]) + "-" + std::to_string(tricks_[1]) +
         " lead:" +
         (lead_card_ >= 0 ? CardLabel(game().config(), lead_card_) : std::string("-"));
}

std::unique_ptr<State> TrickState::Clone() const {
  return std::unique_ptr<State>(new TrickState(*this));
}

}  // namespace beliefmix::trick_game
