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

// Experiment configuration and the sweeps behind the CLI subcommands.
//
// Config files are flat "key = value" text; '#' starts a comment. Every
// policy in one run shares the base seed, so different lambda cells use
// common random numbers.

#ifndef BELIEFMIX_EXPERIMENT_H_
#define BELIEFMIX_EXPERIMENT_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "beliefmix/belief.h"
#include "beliefmix/decider.h"
#include "beliefmix/game_tree.h"
#include "beliefmix/policy_extraction.h"
#include "beliefmix/tabular_policy.h"

namespace beliefmix {

struct ExperimentConfig {
  std::string game = "liars_dice(dice=1,faces=2)";
  Algorithm algorithm = Algorithm::kPimc;
  LambdaSchedule lambda;                 // For the policy subcommand.
  std::vector<double> lambda_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  int budget = 1000;
  double uct_c = 0.7;
  StabilizationConfig stabilization;
  Player seat = 0;
  uint64_t seed = 0;
  int workers = 1;
  std::string output;
  int games = 1000;
  // Unset: TSSR opponents mirror the tested policy; match opponents are
  // lambda = 0 PIMC.
  std::optional<Algorithm> opponent_algorithm;
  std::optional<double> opponent_lambda;
  double draw_value = 0.5;
  bool tssr_first_only = false;
  int tssr_samples = 1000;

  // Canonical key=value dump, in key order; parses back to an equal config.
  std::map<std::string, std::string> ToMap() const;
};

const std::vector<std::string>& ExperimentConfigKeys();

// "key = value" lines; throws ConfigError on malformed lines or duplicates.
std::map<std::string, std::string> ParseConfigText(const std::string& text);
// Applies `values` over `config`; throws ConfigError on unknown keys or bad
// values and validates the result.
void ApplyConfig(const std::map<std::string, std::string>& values, ExperimentConfig* config);
void ValidateConfig(const ExperimentConfig& config);

// "a:b:step" (inclusive) or a comma-separated list. Values are rounded to
// 1e-9 so that 0.1 steps print cleanly.
std::vector<double> ParseLambdaGrid(const std::string& text);

std::string FormatNumber(double value);

struct TssrRow {
  double lambda;
  double avg_tssr;
  double ci;
};
struct ExploitRow {
  double lambda;
  double br_utility;
};
struct HeatmapRow {
  double lambda0;
  double lambda1;
  double br_utility;
};
struct MatchRow {
  double lambda;
  double win_rate;
  double ci_halfwidth;
};

std::string TssrCsv(const std::vector<TssrRow>& rows);
std::string ExploitCsv(const std::vector<ExploitRow>& rows);
std::string HeatmapCsv(const std::vector<HeatmapRow>& rows);
std::string MatchCsv(const std::vector<MatchRow>& rows);

// A stabilized policy produced during a run.
struct PolicyRecord {
  Algorithm algorithm;
  LambdaSchedule schedule;
  Player seat;
  StabilizationResult result;
  std::string FileStem() const;
};

class ExperimentRunner {
 public:
  explicit ExperimentRunner(ExperimentConfig config, LogSink log = {});

  const ExperimentConfig& config() const { return config_; }
  // Sweeps read the grid and opponent settings at call time; policies stay
  // memoized across changes.
  ExperimentConfig& mutable_config() { return config_; }
  const Game& game() const { return *game_; }
  const std::shared_ptr<const Game>& game_ptr() const { return game_; }
  const GameTree& tree();

  // Stabilized policy of `seat`, memoized per (algorithm, schedule, seat).
  const PolicyRecord& Policy(Algorithm algorithm, const LambdaSchedule& schedule, Player seat);
  const std::vector<const PolicyRecord*>& policies() const { return order_; }

  std::vector<TssrRow> TssrSweep();
  std::vector<ExploitRow> ExploitSweep();
  std::vector<HeatmapRow> HeatmapSweep();
  std::vector<MatchRow> MatchSweep();
  const PolicyRecord& PolicyForConfig();

 private:
  ExperimentConfig config_;
  LogSink log_;
  std::shared_ptr<const Game> game_;
  std::shared_ptr<const BeliefBuilder> beliefs_;
  std::unique_ptr<GameTree> tree_;
  std::map<std::string, std::unique_ptr<PolicyRecord>> policies_;
  std::vector<const PolicyRecord*> order_;
};

}  // namespace beliefmix

#endif  // BELIEFMIX_EXPERIMENT_H_
