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

// Online decision makers that map one infostate to a distribution over its
// legal actions.

#ifndef BELIEFMIX_DECIDER_H_
#define BELIEFMIX_DECIDER_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "beliefmix/belief.h"
#include "beliefmix/fosg.h"

namespace beliefmix {

struct DecisionPoint {
  Player seat = 0;
  std::string infostate_key;
  std::vector<Action> legal_actions;  // Legal actions at the infostate, sorted.
};

// Decision index of an infostate key (number of own actions so far).
int DecisionIndexOf(const std::string& infostate_key);

class Decider {
 public:
  virtual ~Decider() = default;
  // Probabilities aligned with `point.legal_actions`.
  virtual std::vector<double> Decide(const DecisionPoint& point, uint64_t seed) = 0;
};

// Per-worker memo of mixture beliefs keyed by (infostate, lambda). Cleared
// wholesale once it holds more than `world_limit` worlds; a returned
// reference stays valid until the next Get().
class MixtureCache {
 public:
  explicit MixtureCache(std::shared_ptr<const BeliefBuilder> beliefs,
                        size_t world_limit = 2'000'000)
      : beliefs_(std::move(beliefs)), world_limit_(world_limit) {}

  const BeliefDistribution& Get(const std::string& infostate_key, double lambda);
  const BeliefBuilder& builder() const { return *beliefs_; }

 private:
  std::shared_ptr<const BeliefBuilder> beliefs_;
  size_t world_limit_;
  std::map<std::pair<std::string, double>, BeliefDistribution> cache_;
  size_t cached_worlds_ = 0;
};

enum class Algorithm { kPimc, kIsmcts };

Algorithm ParseAlgorithm(const std::string& name);
std::string AlgorithmName(Algorithm algorithm);

struct SearchConfig {
  Algorithm algorithm = Algorithm::kPimc;
  LambdaSchedule schedule;
  int budget = 1000;
  double uct_c = 0.7;
};

// One decider per worker; they may share `beliefs`.
std::unique_ptr<Decider> MakeDecider(std::shared_ptr<const BeliefBuilder> beliefs,
                                     const SearchConfig& config);

}  // namespace beliefmix

#endif  // BELIEFMIX_DECIDER_H_
