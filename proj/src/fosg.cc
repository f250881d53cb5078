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

#include "beliefmix/fosg.h"

#include <algorithm>
#include <charconv>

#include "beliefmix/errors.h"
#include "beliefmix/rng.h"

namespace beliefmix {
namespace {

// Byte sinks for key construction: a string, or the running FNV-1a state of
// the same bytes.
class HashSink {
 public:
  explicit HashSink(uint64_t* hash) : hash_(hash) {}
  void push_back(char c) {
    *hash_ ^= static_cast<unsigned char>(c);
    *hash_ *= 0x100000001b3ULL;
  }
  void append(std::string_view bytes) {
    for (char c : bytes) push_back(c);
  }

 private:
  uint64_t* hash_;
};

class StringSink {
 public:
  explicit StringSink(std::string* out) : out_(out) {}
  void push_back(char c) { out_->push_back(c); }
  void append(std::string_view bytes) { out_->append(bytes); }

 private:
  std::string* out_;
};

template <typename Sink>
void WriteNumber(Sink& out, long long value) {
  char buf[24];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(std::string_view(buf, end - buf));
}

template <typename Sink>
void WriteLengthPrefixed(Sink& out, std::string_view bytes) {
  WriteNumber(out, static_cast<long long>(bytes.size()));
  out.push_back(':');
  out.append(bytes);
}

template <typename Sink>
void WriteInfostateEntry(Sink& out, std::string_view public_obs, std::string_view private_obs,
                         std::optional<Action> own_action) {
  out.push_back('[');
  WriteLengthPrefixed(out, public_obs);
  out.push_back('|');
  WriteLengthPrefixed(out, private_obs);
  out.push_back('|');
  if (own_action) WriteNumber(out, *own_action);
  out.push_back(']');
}

template <typename Sink>
void WritePublicEntry(Sink& out, std::string_view public_obs) {
  out.push_back('[');
  WriteLengthPrefixed(out, public_obs);
  out.push_back(']');
}

// Cursor over a key string; every Read* throws ParseError on malformed input.
class KeyReader {
 public:
  explicit KeyReader(std::string_view text) : text_(text) {}

  bool AtEnd() const { return pos_ == text_.size(); }

  void Expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError("malformed key '" + std::string(text_) + "': expected '" +
                           std::string(1, c) + "'",
                       0);
    }
    ++pos_;
  }

  bool Peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  long long ReadNumber() {
    long long value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + pos_) {
      throw ParseError("malformed key '" + std::string(text_) + "': expected number", 0);
    }
    pos_ = static_cast<size_t>(ptr - text_.data());
    return value;
  }

  std::string ReadLengthPrefixed() {
    long long n = ReadNumber();
    Expect(':');
    if (n < 0 || pos_ + static_cast<size_t>(n) > text_.size()) {
      throw ParseError("malformed key '" + std::string(text_) + "': bad length", 0);
    }
    std::string out(text_.substr(pos_, static_cast<size_t>(n)));
    pos_ += static_cast<size_t>(n);
    return out;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

void AppendInfostateEntryKey(std::string* key, std::string_view public_obs,
                             std::string_view private_obs,
                             std::optional<Action> own_action) {
  StringSink sink(key);
  WriteInfostateEntry(sink, public_obs, private_obs, own_action);
}

void AppendPublicEntryKey(std::string* key, std::string_view public_obs) {
  StringSink sink(key);
  WritePublicEntry(sink, public_obs);
}

std::string EmptyInfostateKey(Player seat) { return "s" + std::to_string(seat); }

// ---------------------------------------------------------------------------
// PublicInfostate / Infostate

PublicInfostate::PublicInfostate() : key_(kEmptyPublicKey) {}

PublicInfostate::PublicInfostate(std::vector<std::string> observations)
    : observations_(std::move(observations)), key_(kEmptyPublicKey) {
  for (const auto& obs : observations_) AppendPublicEntryKey(&key_, obs);
}

PublicInfostate PublicInfostate::FromKey(std::string_view key) {
  KeyReader reader(key);
  reader.Expect('p');
  std::vector<std::string> observations;
  while (!reader.AtEnd()) {
    reader.Expect('[');
    observations.push_back(reader.ReadLengthPrefixed());
    reader.Expect(']');
  }
  return PublicInfostate(std::move(observations));
}

PublicInfostate PublicInfostate::Prefix(size_t length) const {
  length = std::min(length, observations_.size());
  return PublicInfostate(
      std::vector<std::string>(observations_.begin(), observations_.begin() + length));
}

Infostate::Infostate(Player seat, std::vector<InfostateEntry> entries)
    : seat_(seat), entries_(std::move(entries)), key_(EmptyInfostateKey(seat)) {
  if (seat < 0 || seat >= kNumPlayers) throw DomainError("infostate seat out of range");
  for (const auto& e : entries_) {
    AppendInfostateEntryKey(&key_, e.public_obs, e.private_obs, e.own_action);
  }
}

Infostate Infostate::FromKey(std::string_view key) {
  KeyReader reader(key);
  reader.Expect('s');
  Player seat = static_cast<Player>(reader.ReadNumber());
  std::vector<InfostateEntry> entries;
  while (!reader.AtEnd()) {
    InfostateEntry entry;
    reader.Expect('[');
    entry.public_obs = reader.ReadLengthPrefixed();
    reader.Expect('|');
    entry.private_obs = reader.ReadLengthPrefixed();
    reader.Expect('|');
    if (!reader.Peek(']')) entry.own_action = static_cast<Action>(reader.ReadNumber());
    reader.Expect(']');
    entries.push_back(std::move(entry));
  }
  return Infostate(seat, std::move(entries));
}

int Infostate::DecisionCount() const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                        [](const auto& e) { return e.own_action.has_value(); }));
}

PublicInfostate Infostate::PublicProjection() const {
  std::vector<std::string> observations;
  observations.reserve(entries_.size());
  for (const auto& e : entries_) observations.push_back(e.public_obs);
  return PublicInfostate(std::move(observations));
}

// ---------------------------------------------------------------------------
// State

State::State(std::shared_ptr<const Game> game)
    : game_(std::move(game)), public_key_(kEmptyPublicKey), public_hash_(Fnv1a64(kEmptyPublicKey)) {
  for (Player p = 0; p < kNumPlayers; ++p) {
    info_keys_[p] = EmptyInfostateKey(p);
    info_hashes_[p] = Fnv1a64(info_keys_[p]);
  }
}

std::vector<Action> State::LegalActions() const {
  if (IsTerminal()) throw DomainError("legal actions requested at a terminal state");
  return DoLegalActions();
}

std::vector<std::pair<Action, double>> State::ChanceOutcomes() const {
  if (!IsChanceNode()) throw DomainError("chance outcomes requested at a non-chance node");
  return DoChanceOutcomes();
}

std::vector<std::pair<Action, double>> State::DoChanceOutcomes() const { return {}; }

bool State::DoIsLegal(Action action) const {
  auto legal = DoLegalActions();
  return std::binary_search(legal.begin(), legal.end(), action);
}

bool State::IsLegal(Action action) const {
  if (IsTerminal()) return false;
  return DoIsLegal(action);
}

Player State::CheckedActor(Action action) const {
  Player actor = CurrentPlayer();
  if (actor == kTerminalPlayerId) throw DomainError("cannot apply an action at a terminal state");
  if (!DoIsLegal(action)) {
    throw DomainError("illegal action " + std::to_string(action) + " at " + ToString());
  }
  return actor;
}

void State::ThrowUntracked() {
  throw DomainError("observation keys are not tracked for this state");
}

void State::ApplyActionUntracked(Action action) {
  Player actor = CheckedActor(action);
  Observation obs = DoApplyAction(action);
  history_.push_back(action);
  for (Player p = 0; p < kNumPlayers; ++p) {
    std::optional<Action> own;
    if (actor == p) {
      own = action;
      ++decisions_[p];
    }
    HashSink sink(&info_hashes_[p]);
    WriteInfostateEntry(sink, obs.public_part, obs.private_parts[p], own);
  }
  HashSink sink(&public_hash_);
  WritePublicEntry(sink, obs.public_part);
  keys_valid_ = false;
}

Observation State::ApplyActionInPlace(Action action) {
  if (!keys_valid_) ThrowUntracked();
  Player actor = CheckedActor(action);
  Observation obs = DoApplyAction(action);
  history_.push_back(action);
  for (Player p = 0; p < kNumPlayers; ++p) {
    std::optional<Action> own;
    if (actor == p) {
      own = action;
      ++decisions_[p];
    }
    AppendInfostateEntryKey(&info_keys_[p], obs.public_part, obs.private_parts[p], own);
    HashSink sink(&info_hashes_[p]);
    WriteInfostateEntry(sink, obs.public_part, obs.private_parts[p], own);
  }
  AppendPublicEntryKey(&public_key_, obs.public_part);
  HashSink sink(&public_hash_);
  WritePublicEntry(sink, obs.public_part);
  return obs;
}

std::pair<std::unique_ptr<State>, Observation> State::Child(Action action) const {
  auto child = Clone();
  Observation obs = child->ApplyActionInPlace(action);
  return {std::move(child), std::move(obs)};
}

double State::Utility(Player seat) const {
  if (!IsTerminal()) throw DomainError("utility requested at a non-terminal state");
  if (seat < 0 || seat >= kNumPlayers) throw DomainError("utility seat out of range");
  return DoUtility(seat);
}

std::string State::HistoryString() const {
  std::string out;
  for (size_t i = 0; i < history_.size(); ++i) {
    if (i > 0) out.push_back('.');
    out += std::to_string(history_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<Action> Game::ActionFromLabel(std::string_view label) const {
  for (Action a = 0; a < NumDistinctActions(); ++a) {
    if (ActionLabel(a) == label) return a;
  }
  return std::nullopt;
}

namespace {

void CollectInitialWorlds(const State& state, double prob,
                          std::vector<std::pair<WorldPtr, double>>* out) {
  if (!state.IsChanceNode()) {
    out->emplace_back(state.Clone(), prob);
    return;
  }
  for (const auto& [outcome, p] : state.ChanceOutcomes()) {
    auto [child, obs] = state.Child(outcome);
    CollectInitialWorlds(*child, prob * p, out);
  }
}

}  // namespace

std::vector<std::pair<WorldPtr, double>> EnumerateInitialWorlds(const Game& game) {
  std::vector<std::pair<WorldPtr, double>> worlds;
  CollectInitialWorlds(*game.NewInitialState(), 1.0, &worlds);
  return worlds;
}

std::unique_ptr<State> ReplayHistory(const Game& game, std::span<const Action> history) {
  auto state = game.NewInitialState();
  for (Action a : history) state->ApplyActionInPlace(a);
  return state;
}

}  // namespace beliefmix
