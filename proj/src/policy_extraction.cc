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

#include "beliefmix/policy_extraction.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "beliefmix/errors.h"
#include "beliefmix/rng.h"

namespace beliefmix {
namespace {

void CollectPoints(const State& state, Player seat, size_t limit,
                   std::unordered_set<std::string>* seen, std::vector<DecisionPoint>* out) {
  if (state.IsTerminal()) return;
  if (state.CurrentPlayer() == seat && seen->insert(state.InfostateKey(seat)).second) {
    if (out->size() >= limit) {
      throw DomainError("more than " + std::to_string(limit) + " decision infostates");
    }
    out->push_back(DecisionPoint{seat, state.InfostateKey(seat), state.LegalActions()});
  }
  for (Action a : state.LegalActions()) {
    CollectPoints(*state.Child(a).first, seat, limit, seen, out);
  }
}

}  // namespace

std::vector<DecisionPoint> EnumerateDecisionPoints(const Game& game, Player seat, size_t limit) {
  std::unordered_set<std::string> seen;
  std::vector<DecisionPoint> points;
  CollectPoints(*game.NewInitialState(), seat, limit, &seen, &points);
  return points;
}

void StabilizationConfig::Validate() const {
  if (batch_size < 1) throw ConfigError("batch_size must be positive");
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw ConfigError("threshold must lie in (0, 1]");
  }
  if (max_batches < 2) throw ConfigError("max_batches must be at least 2");
}

// ---------------------------------------------------------------------------

PolicyExtractor::PolicyExtractor(std::shared_ptr<const Game> game, Player seat,
                                 DeciderFactory decider_factory, PolicyMetadata metadata,
                                 int workers)
    : game_(std::move(game)), seat_(seat), metadata_(std::move(metadata)) {
  if (seat < 0 || seat >= kNumPlayers) throw ConfigError("seat must be 0 or 1");
  if (workers < 1) throw ConfigError("workers must be positive");
  metadata_.seat = seat;
  points_ = EnumerateDecisionPoints(*game_, seat_);
  for (const auto& p : points_) {
    public_hashes_.push_back(Fnv1a64(PublicKeyOfInfostateKey(p.infostate_key)));
  }
  int n = std::max(1, std::min<int>(workers, static_cast<int>(points_.size())));
  for (int w = 0; w < n; ++w) deciders_.push_back(decider_factory());
}

PolicyExtractor::PolicyExtractor(std::shared_ptr<const BeliefBuilder> beliefs, Player seat,
                                 const SearchConfig& search, uint64_t seed, int workers)
    : PolicyExtractor(
          std::shared_ptr<const Game>(beliefs, &beliefs->game()), seat,
          [beliefs, search]() { return MakeDecider(beliefs, search); },
          PolicyMetadata{beliefs->game().ToString(), AlgorithmName(search.algorithm),
                         search.schedule.ToString(), seed, search.budget, seat, {}},
          workers) {
  if (search.algorithm == Algorithm::kIsmcts) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), search.uct_c);
    metadata_.extra["uct_c"] = std::string(buf, end);
  }
}

uint64_t PolicyExtractor::SeedFor(size_t point_index, int pass) const {
  return DeriveSeed(metadata_.seed,
                    {static_cast<uint64_t>(pass), public_hashes_[point_index]});
}

std::vector<std::vector<double>> PolicyExtractor::RunPass(int pass) {
  std::vector<std::vector<double>> results(points_.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](Decider* decider) {
    try {
      for (size_t i = next++; i < points_.size(); i = next++) {
        results[i] = decider->Decide(points_[i], SeedFor(i, pass));
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = points_.size();
    }
  };
  if (deciders_.size() == 1) {
    work(deciders_[0].get());
  } else {
    std::vector<std::thread> threads;
    for (auto& d : deciders_) threads.emplace_back(work, d.get());
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

TabularPolicy PolicyExtractor::ToPolicy(const std::vector<std::vector<double>>& probs) const {
  TabularPolicy policy(metadata_);
  for (size_t i = 0; i < points_.size(); ++i) {
    policy.SetRow(points_[i].infostate_key, PolicyRow{points_[i].legal_actions, probs[i]});
  }
  return policy;
}

TabularPolicy PolicyExtractor::ExtractPolicy(int pass) { return ToPolicy(RunPass(pass)); }

StabilizationResult PolicyExtractor::Stabilize(const StabilizationConfig& config,
                                               const LogSink& log) {
  config.Validate();
  std::vector<std::vector<double>> sums(points_.size());
  for (size_t i = 0; i < points_.size(); ++i) sums[i].assign(points_[i].legal_actions.size(), 0.0);
  std::vector<std::vector<double>> previous;
  StabilizationResult result;
  int pass = 0;
  for (int batch = 1; batch <= config.max_batches; ++batch) {
    for (int k = 0; k < config.batch_size; ++k, ++pass) {
      auto probs = RunPass(pass);
      for (size_t i = 0; i < points_.size(); ++i) {
        for (size_t a = 0; a < probs[i].size(); ++a) sums[i][a] += probs[i][a];
      }
    }
    std::vector<std::vector<double>> average = sums;
    for (auto& row : average) {
      for (double& p : row) p /= pass;
    }
    result.batches = batch;
    result.passes = pass;
    if (!previous.empty()) {
      double variation = 0.0;
      for (size_t i = 0; i < average.size(); ++i) {
        for (size_t a = 0; a < average[i].size(); ++a) {
          variation = std::max(variation, std::abs(average[i][a] - previous[i][a]));
        }
      }
      result.variation = variation;
      result.batch_variations.push_back(variation);
      if (log) {
        log("stabilize " + metadata_.game + " " + metadata_.algorithm + " seat=" +
            std::to_string(seat_) + " lambda=" + metadata_.lambda_schedule + " batch=" +
            std::to_string(batch) + " variation=" + std::to_string(variation));
      }
      if (variation < config.threshold) {
        result.policy = ToPolicy(average);
        result.policy.mutable_metadata().extra["passes"] = std::to_string(pass);
        if (log) {
          log("converged after " + std::to_string(batch) + " batches (" + std::to_string(pass) +
              " passes), variation " + std::to_string(variation));
        }
        return result;
      }
    }
    previous = std::move(average);
  }
  throw ConvergenceError(config.max_batches, result.variation);
}

}  // namespace beliefmix
