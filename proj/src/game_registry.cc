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

#include "beliefmix/game_registry.h"

#include <charconv>

#include "beliefmix/errors.h"
#include "beliefmix/leduc_poker.h"
#include "beliefmix/liars_dice.h"
#include "beliefmix/trick_game.h"

namespace beliefmix {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int TakeParam(GameSpec* spec, const std::string& key, int fallback) {
  auto it = spec->params.find(key);
  if (it == spec->params.end()) return fallback;
  int value = it->second;
  spec->params.erase(it);
  return value;
}

void RejectLeftovers(const GameSpec& spec) {
  if (!spec.params.empty()) {
    throw ConfigError("unknown parameter '" + spec.params.begin()->first + "' for game " +
                      spec.name);
  }
}

}  // namespace

GameSpec ParseGameSpec(std::string_view text) {
  text = Trim(text);
  GameSpec spec;
  size_t open = text.find('(');
  if (open == std::string_view::npos) {
    spec.name = std::string(text);
  } else {
    if (text.back() != ')') throw ConfigError("malformed game string: " + std::string(text));
    spec.name = std::string(Trim(text.substr(0, open)));
    std::string_view body = text.substr(open + 1, text.size() - open - 2);
    while (!Trim(body).empty()) {
      size_t comma = body.find(',');
      std::string_view item = Trim(body.substr(0, comma));
      body = comma == std::string_view::npos ? std::string_view() : body.substr(comma + 1);
      size_t eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError("game parameter without value: " + std::string(item));
      }
      std::string key(Trim(item.substr(0, eq)));
      std::string_view value = Trim(item.substr(eq + 1));
      int parsed = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError("game parameter " + key + " is not an integer");
      }
      if (!spec.params.emplace(key, parsed).second) {
        throw ConfigError("duplicate game parameter " + key);
      }
    }
  }
  if (spec.name.empty()) throw ConfigError("empty game name");
  return spec;
}

std::shared_ptr<const Game> LoadGame(std::string_view text) {
  GameSpec spec = ParseGameSpec(text);
  try {
    if (spec.name == "liars_dice") {
      liars_dice::LiarsDiceConfig config;
      config.dice_per_player = TakeParam(&spec, "dice", 1);
      config.faces = TakeParam(&spec, "faces", 2);
      RejectLeftovers(spec);
      return std::make_shared<liars_dice::LiarsDiceGame>(config);
    }
    if (spec.name == "leduc_poker") {
      RejectLeftovers(spec);
      return std::make_shared<leduc_poker::LeducGame>();
    }
    if (spec.name == "trick_game") {
      trick_game::TrickGameConfig config;
      config.cards = TakeParam(&spec, "cards", 10);
      config.hidden = TakeParam(&spec, "hidden", 2);
      config.suits = TakeParam(&spec, "suits", 2);
      RejectLeftovers(spec);
      return std::make_shared<trick_game::TrickGame>(config);
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown game '" + spec.name + "'");
}

std::vector<std::string> RegisteredGames() { return {"leduc_poker", "liars_dice", "trick_game"}; }

}  // namespace beliefmix
