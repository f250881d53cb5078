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

// Turning online deciders into tabular policies.
//
// A pass runs the decider once at every decision infostate of one seat; the
// seed of each call depends only on (base seed, pass index, public state),
// so results do not depend on the number of workers. Stabilization averages
// passes in batches until the running average moves by less than a
// threshold (max norm) between consecutive batches.

#ifndef BELIEFMIX_POLICY_EXTRACTION_H_
#define BELIEFMIX_POLICY_EXTRACTION_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "beliefmix/belief.h"
#include "beliefmix/decider.h"
#include "beliefmix/tabular_policy.h"

namespace beliefmix {

inline constexpr size_t kDefaultInfostateLimit = 2'000'000;

// Every infostate where `seat` acts, in depth-first order of first
// occurrence, with opponent actions unrestricted.
std::vector<DecisionPoint> EnumerateDecisionPoints(const Game& game, Player seat,
                                                   size_t limit = kDefaultInfostateLimit);

struct StabilizationConfig {
  int batch_size = 10;
  double threshold = 0.01;
  int max_batches = 200;

  void Validate() const;
};

struct StabilizationResult {
  TabularPolicy policy;
  int batches = 0;
  int passes = 0;
  double variation = 0.0;              // Between the last two batches.
  std::vector<double> batch_variations;  // One per batch after the first.
};

using LogSink = std::function<void(const std::string&)>;

class PolicyExtractor {
 public:
  // `decider_factory` is called once per worker.
  using DeciderFactory = std::function<std::unique_ptr<Decider>()>;

  PolicyExtractor(std::shared_ptr<const Game> game, Player seat, DeciderFactory decider_factory,
                  PolicyMetadata metadata, int workers = 1);
  // Convenience: PIMC or IS-MCTS deciders over a shared belief builder.
  PolicyExtractor(std::shared_ptr<const BeliefBuilder> beliefs, Player seat,
                  const SearchConfig& search, uint64_t seed, int workers = 1);

  const std::vector<DecisionPoint>& points() const { return points_; }
  Player seat() const { return seat_; }
  uint64_t seed() const { return metadata_.seed; }

  uint64_t SeedFor(size_t point_index, int pass) const;
  // Decider output per decision point, aligned with points().
  std::vector<std::vector<double>> RunPass(int pass);
  TabularPolicy ExtractPolicy(int pass);
  // Throws ConvergenceError after `config.max_batches` batches.
  StabilizationResult Stabilize(const StabilizationConfig& config, const LogSink& log = {});

 private:
  TabularPolicy ToPolicy(const std::vector<std::vector<double>>& probs) const;

  std::shared_ptr<const Game> game_;
  Player seat_;
  PolicyMetadata metadata_;
  std::vector<DecisionPoint> points_;
  std::vector<uint64_t> public_hashes_;
  std::vector<std::unique_ptr<Decider>> deciders_;
};

}  // namespace beliefmix

#endif  // BELIEFMIX_POLICY_EXTRACTION_H_
