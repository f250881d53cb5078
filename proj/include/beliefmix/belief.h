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

// Private, public and lambda-mixture beliefs over world states.
//
// Supports are exhaustive: every history whose observations match the
// conditioning key, weighted by its chance probability only. Worlds appear in
// lexicographic order of their action histories.

#ifndef BELIEFMIX_BELIEF_H_
#define BELIEFMIX_BELIEF_H_

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "beliefmix/fosg.h"
#include "beliefmix/rng.h"

namespace beliefmix {

struct WeightedWorld {
  WorldPtr world;
  double prior;  // Product of chance probabilities along the history.
};

using WorldSupport = std::vector<WeightedWorld>;

// Per-decision-index lambda values; indices past the end reuse the last one.
class LambdaSchedule {
 public:
  LambdaSchedule() : values_{0.0} {}
  explicit LambdaSchedule(std::vector<double> values);
  static LambdaSchedule Constant(double lambda) { return LambdaSchedule({lambda}); }
  // Comma-separated list, e.g. "0.3" or "0,1".
  static LambdaSchedule Parse(std::string_view text);

  double At(int decision_index) const;
  const std::vector<double>& values() const { return values_; }
  std::string ToString() const;

  bool operator==(const LambdaSchedule&) const = default;

 private:
  std::vector<double> values_;
};

class BeliefDistribution {
 public:
  BeliefDistribution(std::string conditioning_key, std::vector<WorldPtr> worlds,
                     std::vector<double> masses);

  const std::string& conditioning_key() const { return conditioning_key_; }
  size_t size() const { return worlds_.size(); }
  bool empty() const { return worlds_.empty(); }
  const std::vector<WorldPtr>& worlds() const { return worlds_; }
  const std::vector<double>& masses() const { return masses_; }

  // Mass per infostate key of `seat`, summed over worlds.
  const std::map<std::string, double>& Marginal(Player seat) const { return marginals_[seat]; }
  // Mass of the world reached by `history` (HistoryString form), 0 if absent.
  double MassOfHistory(std::string_view history) const;

  // Draws one world index with probability proportional to its mass using a
  // single Uniform01() draw. Throws DomainError on an empty belief.
  size_t SampleIndex(Rng& rng) const;
  const WorldPtr& Sample(Rng& rng) const { return worlds_[SampleIndex(rng)]; }

  // Rows "key,world,mass" with the world given as its history string.
  std::string ToCsv() const;

 private:
  std::string conditioning_key_;
  std::vector<WorldPtr> worlds_;
  std::vector<double> masses_;
  std::vector<double> cumulative_;
  std::array<std::map<std::string, double>, kNumPlayers> marginals_;
};

Player SeatOfInfostateKey(std::string_view key);
std::string PublicKeyOfInfostateKey(std::string_view key);

// Builds beliefs for one game. Public supports are cached and extended one
// transition at a time from the support of the parent public state. Safe for
// concurrent use.
class BeliefBuilder {
 public:
  static constexpr size_t kDefaultCacheWorldLimit = 2'000'000;
  static constexpr size_t kDefaultSupportLimit = 5'000'000;

  explicit BeliefBuilder(std::shared_ptr<const Game> game,
                         size_t cache_world_limit = kDefaultCacheWorldLimit,
                         size_t support_limit = kDefaultSupportLimit);

  const Game& game() const { return *game_; }

  // Worlds consistent with an infostate key ("s<seat>...") or a public key
  // ("p..."), with unnormalized priors. Throws DomainError when the key is
  // unreachable.
  WorldSupport ConsistentWorlds(std::string_view key) const;

  BeliefDistribution PrivateBelief(std::string_view infostate_key) const;
  BeliefDistribution PublicBelief(std::string_view public_key) const;
  // (1 - lambda) * private + lambda * public, mixed per world. Conditioned on
  // the infostate key.
  BeliefDistribution MixtureBelief(std::string_view infostate_key, double lambda) const;

 private:
  std::shared_ptr<const WorldSupport> PublicSupport(const std::string& public_key) const;
  std::shared_ptr<const WorldSupport> PublicSupportLocked(const std::string& public_key) const;

  std::shared_ptr<const Game> game_;
  size_t cache_world_limit_;
  size_t support_limit_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, std::shared_ptr<const WorldSupport>> cache_;
  mutable size_t cached_worlds_ = 0;
};

}  // namespace beliefmix

#endif  // BELIEFMIX_BELIEF_H_
