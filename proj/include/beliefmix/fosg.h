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

// Factored-observation game abstraction shared by every other module.
//
// A transition (w, a) -> w' emits one public observation and one private
// observation per seat. Infostates and public infostates are sequences of
// those observations and are identified by canonical, length-prefixed keys:
//
//   infostate  "s<seat>" followed by one "[<n>:<pub>|<m>:<priv>|<own>]" per
//              transition, where <own> is the seat's action id when the seat
//              acted on that transition and empty otherwise;
//   public     "p" followed by one "[<n>:<pub>]" per transition.
//
// Two infostates are equal iff their keys are byte-equal, and every key can
// be parsed back into its entries.

#ifndef BELIEFMIX_FOSG_H_
#define BELIEFMIX_FOSG_H_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace beliefmix {

using Action = int;
using Player = int;

inline constexpr int kNumPlayers = 2;
inline constexpr Player kChancePlayerId = -1;
inline constexpr Player kTerminalPlayerId = -4;

struct Observation {
  std::string public_part;
  std::array<std::string, kNumPlayers> private_parts;
};

struct InfostateEntry {
  std::string public_obs;
  std::string private_obs;
  std::optional<Action> own_action;

  bool operator==(const InfostateEntry&) const = default;
};

void AppendInfostateEntryKey(std::string* key, std::string_view public_obs,
                             std::string_view private_obs,
                             std::optional<Action> own_action);
void AppendPublicEntryKey(std::string* key, std::string_view public_obs);

std::string EmptyInfostateKey(Player seat);
inline constexpr std::string_view kEmptyPublicKey = "p";

class PublicInfostate {
 public:
  PublicInfostate();
  explicit PublicInfostate(std::vector<std::string> observations);
  static PublicInfostate FromKey(std::string_view key);

  const std::vector<std::string>& observations() const { return observations_; }
  const std::string& key() const { return key_; }
  size_t size() const { return observations_.size(); }
  PublicInfostate Prefix(size_t length) const;

  bool operator==(const PublicInfostate& other) const { return key_ == other.key_; }

 private:
  std::vector<std::string> observations_;
  std::string key_;
};

class Infostate {
 public:
  Infostate(Player seat, std::vector<InfostateEntry> entries);
  static Infostate FromKey(std::string_view key);

  Player seat() const { return seat_; }
  const std::vector<InfostateEntry>& entries() const { return entries_; }
  const std::string& key() const { return key_; }
  size_t size() const { return entries_.size(); }

  // Number of actions this seat has taken so far; indexes lambda schedules.
  int DecisionCount() const;
  PublicInfostate PublicProjection() const;

  bool operator==(const Infostate& other) const { return key_ == other.key_; }

 private:
  Player seat_;
  std::vector<InfostateEntry> entries_;
  std::string key_;
};

class Game;

// A world state: the full configuration including hidden information, plus
// the observation keys accumulated since the initial state. Copies are
// independent; the pure transition is Child(), search code mutates private
// working copies via ApplyActionInPlace().
class State {
 public:
  explicit State(std::shared_ptr<const Game> game);
  virtual ~State() = default;

  virtual Player CurrentPlayer() const = 0;
  bool IsTerminal() const { return CurrentPlayer() == kTerminalPlayerId; }
  bool IsChanceNode() const { return CurrentPlayer() == kChancePlayerId; }
  bool IsPlayerNode() const { return CurrentPlayer() >= 0; }

  // Sorted, non-empty. At chance nodes these are the outcome ids.
  std::vector<Action> LegalActions() const;
  std::vector<std::pair<Action, double>> ChanceOutcomes() const;
  bool IsLegal(Action action) const;

  std::pair<std::unique_ptr<State>, Observation> Child(Action action) const;
  Observation ApplyActionInPlace(Action action);
  // Advances without building key strings; only the key hashes stay
  // current. Afterwards the key accessors throw DomainError.
  void ApplyActionUntracked(Action action);
  bool HasKeys() const { return keys_valid_; }

  // Terminal payoff for `seat`; the two seats sum to zero.
  double Utility(Player seat) const;

  // Label of `action` at this node (chance outcomes get their own labels).
  virtual std::string ActionToString(Action action) const = 0;
  // Canonical encoding of everything that determines future play and
  // payoffs; keys transposition tables.
  virtual std::string WorldKey() const = 0;
  virtual std::string ToString() const = 0;
  virtual std::unique_ptr<State> Clone() const = 0;

  const std::vector<Action>& History() const { return history_; }
  std::string HistoryString() const;
  int MoveNumber() const { return static_cast<int>(history_.size()); }
  int DecisionCount(Player seat) const { return decisions_[seat]; }

  const std::string& InfostateKey(Player seat) const {
    if (!keys_valid_) ThrowUntracked();
    return info_keys_[seat];
  }
  const std::string& PublicKey() const {
    if (!keys_valid_) ThrowUntracked();
    return public_key_;
  }
  // Fnv1a64 of InfostateKey(seat) and of PublicKey(), maintained
  // incrementally by both transition kinds.
  uint64_t InfostateHash(Player seat) const { return info_hashes_[seat]; }
  uint64_t PublicHash() const { return public_hash_; }
  Infostate GetInfostate(Player seat) const { return Infostate::FromKey(InfostateKey(seat)); }
  PublicInfostate GetPublicInfostate() const { return PublicInfostate::FromKey(PublicKey()); }

  const Game& GetGame() const { return *game_; }
  const std::shared_ptr<const Game>& GamePtr() const { return game_; }

 protected:
  State(const State&) = default;
  State& operator=(const State&) = default;

  virtual std::vector<Action> DoLegalActions() const = 0;
  virtual std::vector<std::pair<Action, double>> DoChanceOutcomes() const;
  virtual bool DoIsLegal(Action action) const;
  virtual Observation DoApplyAction(Action action) = 0;
  virtual double DoUtility(Player seat) const = 0;

 private:
  [[noreturn]] static void ThrowUntracked();
  Player CheckedActor(Action action) const;

  std::shared_ptr<const Game> game_;
  std::vector<Action> history_;
  std::array<std::string, kNumPlayers> info_keys_;
  std::array<int, kNumPlayers> decisions_{};
  std::string public_key_;
  std::array<uint64_t, kNumPlayers> info_hashes_{};
  uint64_t public_hash_;
  bool keys_valid_ = true;
};

class Game : public std::enable_shared_from_this<Game> {
 public:
  virtual ~Game() = default;

  virtual std::string Name() const = 0;
  // Canonical "name(k=v,...)" string accepted by LoadGame().
  virtual std::string ToString() const = 0;
  virtual std::unique_ptr<State> NewInitialState() const = 0;

  // Player actions are the dense ids [0, NumDistinctActions()).
  virtual int NumDistinctActions() const = 0;
  virtual std::string ActionLabel(Action action) const = 0;
  std::optional<Action> ActionFromLabel(std::string_view label) const;

  virtual double MinUtility() const = 0;
  virtual double MaxUtility() const = 0;
};

using WorldPtr = std::shared_ptr<const State>;

// All worlds reachable through the initial chance events, in outcome order,
// stopping at the first player node. Probabilities are exact products of
// chance probabilities.
std::vector<std::pair<WorldPtr, double>> EnumerateInitialWorlds(const Game& game);

std::unique_ptr<State> ReplayHistory(const Game& game, std::span<const Action> history);

}  // namespace beliefmix

#endif  // BELIEFMIX_FOSG_H_
