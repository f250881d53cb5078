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

// Game construction from strings such as "liars_dice(dice=1,faces=2)",
// "leduc_poker" or "trick_game(cards=10,hidden=2,suits=2)". Omitted
// parameters take their defaults; unknown names or parameters throw
// ConfigError.

#ifndef BELIEFMIX_GAME_REGISTRY_H_
#define BELIEFMIX_GAME_REGISTRY_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "beliefmix/fosg.h"

namespace beliefmix {

struct GameSpec {
  std::string name;
  std::map<std::string, int> params;
};

GameSpec ParseGameSpec(std::string_view text);
std::shared_ptr<const Game> LoadGame(std::string_view text);
std::vector<std::string> RegisteredGames();

}  // namespace beliefmix

#endif  // BELIEFMIX_GAME_REGISTRY_H_
