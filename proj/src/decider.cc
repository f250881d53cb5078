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

#include "beliefmix/decider.h"

#include "beliefmix/errors.h"
#include "beliefmix/ismcts.h"
#include "beliefmix/pimc.h"

namespace beliefmix {

int DecisionIndexOf(const std::string& infostate_key) {
  return Infostate::FromKey(infostate_key).DecisionCount();
}

const BeliefDistribution& MixtureCache::Get(const std::string& infostate_key, double lambda) {
  auto id = std::make_pair(infostate_key, lambda);
  if (auto it = cache_.find(id); it != cache_.end()) return it->second;
  BeliefDistribution belief = beliefs_->MixtureBelief(infostate_key, lambda);
  if (cached_worlds_ + belief.size() > world_limit_) {
    cache_.clear();
    cached_worlds_ = 0;
  }
  cached_worlds_ += belief.size();
  return cache_.emplace(std::move(id), std::move(belief)).first->second;
}

Algorithm ParseAlgorithm(const std::string& name) {
  if (name == "pimc") return Algorithm::kPimc;
  if (name == "ismcts") return Algorithm::kIsmcts;
  throw ConfigError("unknown algorithm '" + name + "' (expected pimc or ismcts)");
}

std::string AlgorithmName(Algorithm algorithm) {
  return algorithm == Algorithm::kPimc ? "pimc" : "ismcts";
}

std::unique_ptr<Decider> MakeDecider(std::shared_ptr<const BeliefBuilder> beliefs,
                                     const SearchConfig& config) {
  if (config.budget < 1) throw DomainError("search budget must be positive");
  if (config.algorithm == Algorithm::kPimc) {
    return std::make_unique<PimcDecider>(std::move(beliefs), config.schedule, config.budget);
  }
  return std::make_unique<IsmctsDecider>(std::move(beliefs), config.schedule, config.budget,
                                         config.uct_c);
}

}  // namespace beliefmix
