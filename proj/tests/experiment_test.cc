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

#include "beliefmix/experiment.h"

#include <sstream>

#include "beliefmix/errors.h"
#include "doctest.h"

namespace beliefmix {
namespace {

ExperimentConfig FastConfig() {
  ExperimentConfig config;
  config.budget = 100;
  config.stabilization = {5, 0.05, 100};
  config.seed = 3;
  config.games = 200;
  return config;
}

size_t Lines(const std::string& text) {
  size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

TEST_CASE("config text") {
  auto values = ParseConfigText(
      "# comment\n game = leduc_poker \nalgorithm=ismcts # trailing\n\nlambda = 0,1\n");
  CHECK(values.size() == 3);
  CHECK(values.at("game") == "leduc_poker");
  ExperimentConfig config;
  ApplyConfig(values, &config);
  CHECK(config.game == "leduc_poker");
  CHECK(config.algorithm == Algorithm::kIsmcts);
  CHECK(config.lambda == LambdaSchedule::Parse("0,1"));
  CHECK_THROWS_AS(ParseConfigText("budget\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfigText("budget = 1\nbudget = 2\n"), ConfigError);
}

TEST_CASE("config validation") {
  auto apply = [](const std::string& key, const std::string& value) {
    ExperimentConfig config;
    ApplyConfig({{key, value}}, &config);
    return config;
  };
  CHECK_THROWS_AS(apply("bugdet", "10"), ConfigError);
  CHECK_THROWS_AS(apply("budget", "0"), ConfigError);
  CHECK_THROWS_AS(apply("budget", "ten"), ConfigError);
  CHECK_THROWS_AS(apply("game", "chess"), ConfigError);
  CHECK_THROWS_AS(apply("game", "liars_dice(faces=0)"), ConfigError);
  CHECK_THROWS_AS(apply("algorithm", "cfr"), ConfigError);
  CHECK_THROWS_AS(apply("lambda", "2"), ConfigError);
  CHECK_THROWS_AS(apply("lambda_grid", "0:1:0"), ConfigError);
  CHECK_THROWS_AS(apply("lambda_grid", "0,1.5"), ConfigError);
  CHECK_THROWS_AS(apply("seat", "2"), ConfigError);
  CHECK_THROWS_AS(apply("threshold", "0"), ConfigError);
  CHECK_THROWS_AS(apply("workers", "0"), ConfigError);
  CHECK_THROWS_AS(apply("draw_value", "2"), ConfigError);
  CHECK_THROWS_AS(apply("opponent_lambda", "-1"), ConfigError);
  CHECK_THROWS_AS(apply("tssr_first_only", "maybe"), ConfigError);
  CHECK(apply("threshold", "1").stabilization.threshold == 1.0);
  CHECK(apply("opponent_algorithm", "ismcts").opponent_algorithm == Algorithm::kIsmcts);
}

TEST_CASE("config echo parses back") {
  ExperimentConfig config = FastConfig();
  config.opponent_lambda = 0.25;
  config.lambda = LambdaSchedule::Parse("0.2,0.9");
  ExperimentConfig copy;
  ApplyConfig(config.ToMap(), &copy);
  CHECK(copy.ToMap() == config.ToMap());
  CHECK(config.ToMap().size() == ExperimentConfigKeys().size());
}

TEST_CASE("lambda grids") {
  auto grid = ParseLambdaGrid("0:1:0.1");
  REQUIRE(grid.size() == 11);
  CHECK(grid[3] == 0.3);
  CHECK(grid.back() == 1.0);
  CHECK(ParseLambdaGrid("0, 0.5,1") == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(ExperimentConfig().lambda_grid == grid);
  CHECK(FormatNumber(0.30000000000000004) == "0.30000000000000004");
  CHECK(FormatNumber(-0.0) == "0");
  CHECK(FormatNumber(1.0) == "1");
}

TEST_CASE("csv schemas") {
  CHECK(TssrCsv({{0.5, 1.25, 0.01}}) == "lambda,avg_tssr,ci\n0.5,1.25,0.01\n");
  CHECK(ExploitCsv({{0, -0.5}}) == "lambda,br_utility\n0,-0.5\n");
  CHECK(HeatmapCsv({{0, 1, 2}}) == "lambda0,lambda1,br_utility\n0,1,2\n");
  CHECK(MatchCsv({{1, 0.5, 0.031}}) == "lambda,win_rate,ci_halfwidth\n1,0.5,0.031\n");
}

TEST_CASE("exploitability sweep over the default grid") {
  ExperimentConfig config = FastConfig();
  std::vector<std::string> log;
  ExperimentRunner runner(config, [&](const std::string& l) { log.push_back(l); });
  auto rows = runner.ExploitSweep();
  REQUIRE(rows.size() == 11);
  CHECK(Lines(ExploitCsv(rows)) == 12);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].lambda == config.lambda_grid[i]);
    CHECK(rows[i].br_utility >= -1.0);
    CHECK(rows[i].br_utility <= 1.0);
  }
  CHECK(runner.policies().size() == 11);
  CHECK(!log.empty());
  // Memoized policies are reused.
  CHECK(&runner.Policy(Algorithm::kPimc, LambdaSchedule::Constant(0.0), 0) == runner.policies()[0]);
}

TEST_CASE("sweeps are reproducible and independent of the worker count") {
  ExperimentConfig config = FastConfig();
  config.game = "liars_dice(dice=1,faces=3)";
  config.algorithm = Algorithm::kIsmcts;
  config.lambda_grid = {0.0, 0.5, 1.0};
  config.budget = 50;
  ExperimentRunner a(config);
  std::string exploit = ExploitCsv(a.ExploitSweep());
  std::string tssr = TssrCsv(a.TssrSweep());
  std::string match = MatchCsv(a.MatchSweep());
  config.workers = 4;
  ExperimentRunner b(config);
  CHECK(ExploitCsv(b.ExploitSweep()) == exploit);
  CHECK(TssrCsv(b.TssrSweep()) == tssr);
  CHECK(MatchCsv(b.MatchSweep()) == match);
  CHECK(Lines(match) == 4);
  config.workers = 1;
  ExperimentRunner c(config);
  CHECK(ExploitCsv(c.ExploitSweep()) == exploit);
}

TEST_CASE("heatmap diagonal matches the single-lambda sweep") {
  ExperimentConfig config = FastConfig();
  config.lambda_grid = {0.0, 1.0};
  ExperimentRunner runner(config);
  auto cells = runner.HeatmapSweep();
  REQUIRE(cells.size() == 4);
  auto line = runner.ExploitSweep();
  CHECK(cells[0].lambda0 == 0.0);
  CHECK(cells[0].lambda1 == 0.0);
  CHECK(cells[0].br_utility == line[0].br_utility);
  CHECK(cells[3].lambda0 == 1.0);
  CHECK(cells[3].lambda1 == 1.0);
  CHECK(cells[3].br_utility == line[1].br_utility);
  CHECK(runner.policies().size() == 4);
}

TEST_CASE("policy for the configured schedule") {
  ExperimentConfig config = FastConfig();
  config.lambda = LambdaSchedule::Parse("0.5");
  config.seat = 1;
  ExperimentRunner runner(config);
  const auto& record = runner.PolicyForConfig();
  CHECK(record.seat == 1);
  CHECK(record.result.policy.metadata().seat == 1);
  CHECK(record.result.policy.metadata().lambda_schedule == "0.5");
  CHECK(!record.FileStem().empty());
  CHECK(record.FileStem().find('/') == std::string::npos);
}

}  // namespace
}  // namespace beliefmix
