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

#include <charconv>
#include <cmath>
#include <sstream>

#include "beliefmix/best_response.h"
#include "beliefmix/errors.h"
#include "beliefmix/game_registry.h"
#include "beliefmix/match.h"
#include "beliefmix/rng.h"
#include "beliefmix/tssr.h"

namespace beliefmix {
namespace {

constexpr uint64_t kMatchStream = 0x6d61746368ULL;

std::string Trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T ParseValue(const std::string& key, const std::string& text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("bad value '" + text + "' for " + key);
  }
  return value;
}

bool ParseBool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError("bad value '" + text + "' for " + key + " (expected true or false)");
}

double RoundGrid(double v) { return std::round(v * 1e9) / 1e9; }

}  // namespace

std::string FormatNumber(double value) {
  if (value == 0.0) value = 0.0;  // Drops the sign of -0.
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

const std::vector<std::string>& ExperimentConfigKeys() {
  static const std::vector<std::string> kKeys = {
      "algorithm",   "batch_size",      "budget",         "draw_value",         "game",
      "games",       "lambda",          "lambda_grid",    "max_batches",        "opponent_algorithm",
      "opponent_lambda", "output",      "seat",           "seed",               "threshold",
      "tssr_first_only", "tssr_samples", "uct_c",         "workers"};
  return kKeys;
}

std::map<std::string, std::string> ExperimentConfig::ToMap() const {
  std::map<std::string, std::string> m;
  m["game"] = game;
  m["algorithm"] = AlgorithmName(algorithm);
  m["lambda"] = lambda.ToString();
  std::string grid;
  for (size_t i = 0; i < lambda_grid.size(); ++i) {
    if (i > 0) grid.push_back(',');
    grid += FormatNumber(lambda_grid[i]);
  }
  m["lambda_grid"] = grid;
  m["budget"] = std::to_string(budget);
  m["uct_c"] = FormatNumber(uct_c);
  m["batch_size"] = std::to_string(stabilization.batch_size);
  m["threshold"] = FormatNumber(stabilization.threshold);
  m["max_batches"] = std::to_string(stabilization.max_batches);
  m["seat"] = std::to_string(seat);
  m["seed"] = std::to_string(seed);
  m["workers"] = std::to_string(workers);
  m["output"] = output;
  m["games"] = std::to_string(games);
  m["opponent_algorithm"] = opponent_algorithm ? AlgorithmName(*opponent_algorithm) : "";
  m["opponent_lambda"] = opponent_lambda ? FormatNumber(*opponent_lambda) : "";
  m["draw_value"] = FormatNumber(draw_value);
  m["tssr_first_only"] = tssr_first_only ? "true" : "false";
  m["tssr_samples"] = std::to_string(tssr_samples);
  return m;
}

std::map<std::string, std::string> ParseConfigText(const std::string& text) {
  std::map<std::string, std::string> values;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = Trim(line.substr(0, eq));
    if (!values.emplace(key, Trim(line.substr(eq + 1))).second) {
      throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key " + key);
    }
  }
  return values;
}

std::vector<double> ParseLambdaGrid(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    size_t c1 = text.find(':'), c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ConfigError("lambda_grid range needs start:stop:step");
    double start = ParseValue<double>("lambda_grid", Trim(text.substr(0, c1)));
    double stop = ParseValue<double>("lambda_grid", Trim(text.substr(c1 + 1, c2 - c1 - 1)));
    double step = ParseValue<double>("lambda_grid", Trim(text.substr(c2 + 1)));
    if (!(step > 0.0) || stop < start) throw ConfigError("bad lambda_grid range " + text);
    for (int k = 0;; ++k) {
      double v = RoundGrid(start + k * step);
      if (v > stop + 1e-9) break;
      grid.push_back(v);
    }
  } else {
    std::string rest = text;
    while (true) {
      size_t comma = rest.find(',');
      grid.push_back(RoundGrid(ParseValue<double>("lambda_grid", Trim(rest.substr(0, comma)))));
      if (comma == std::string::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  for (double v : grid) {
    if (v < 0.0 || v > 1.0) throw ConfigError("lambda_grid value outside [0, 1]");
  }
  if (grid.empty()) throw ConfigError("empty lambda_grid");
  return grid;
}

void ApplyConfig(const std::map<std::string, std::string>& values, ExperimentConfig* config) {
  const auto& keys = ExperimentConfigKeys();
  for (const auto& [key, value] : values) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError("unknown config key '" + key + "'");
    }
    try {
      if (key == "game") {
        config->game = value;
      } else if (key == "algorithm") {
        config->algorithm = ParseAlgorithm(value);
      } else if (key == "lambda") {
        config->lambda = LambdaSchedule::Parse(value);
      } else if (key == "lambda_grid") {
        config->lambda_grid = ParseLambdaGrid(value);
      } else if (key == "budget") {
        config->budget = ParseValue<int>(key, value);
      } else if (key == "uct_c") {
        config->uct_c = ParseValue<double>(key, value);
      } else if (key == "batch_size") {
        config->stabilization.batch_size = ParseValue<int>(key, value);
      } else if (key == "threshold") {
        config->stabilization.threshold = ParseValue<double>(key, value);
      } else if (key == "max_batches") {
        config->stabilization.max_batches = ParseValue<int>(key, value);
      } else if (key == "seat") {
        config->seat = ParseValue<int>(key, value);
      } else if (key == "seed") {
        config->seed = ParseValue<uint64_t>(key, value);
      } else if (key == "workers") {
        config->workers = ParseValue<int>(key, value);
      } else if (key == "output") {
        config->output = value;
      } else if (key == "games") {
        config->games = ParseValue<int>(key, value);
      } else if (key == "opponent_algorithm") {
        config->opponent_algorithm =
            value.empty() ? std::nullopt : std::optional<Algorithm>(ParseAlgorithm(value));
      } else if (key == "opponent_lambda") {
        config->opponent_lambda =
            value.empty() ? std::nullopt : std::optional<double>(ParseValue<double>(key, value));
      } else if (key == "draw_value") {
        config->draw_value = ParseValue<double>(key, value);
      } else if (key == "tssr_first_only") {
        config->tssr_first_only = ParseBool(key, value);
      } else if (key == "tssr_samples") {
        config->tssr_samples = ParseValue<int>(key, value);
      }
    } catch (const DomainError& e) {
      throw ConfigError(key + ": " + e.what());
    }
  }
  ValidateConfig(*config);
}

void ValidateConfig(const ExperimentConfig& config) {
  LoadGame(config.game);
  if (config.budget < 1) throw ConfigError("budget must be positive");
  if (!(config.uct_c >= 0.0)) throw ConfigError("uct_c must be non-negative");
  config.stabilization.Validate();
  if (config.seat != 0 && config.seat != 1) throw ConfigError("seat must be 0 or 1");
  if (config.workers < 1) throw ConfigError("workers must be positive");
  if (config.games < 1) throw ConfigError("games must be positive");
  if (config.opponent_lambda && !(*config.opponent_lambda >= 0.0 && *config.opponent_lambda <= 1.0)) {
    throw ConfigError("opponent_lambda outside [0, 1]");
  }
  if (!(config.draw_value >= 0.0 && config.draw_value <= 1.0)) {
    throw ConfigError("draw_value outside [0, 1]");
  }
  if (config.tssr_samples < 1) throw ConfigError("tssr_samples must be positive");
  if (config.lambda_grid.empty()) throw ConfigError("empty lambda_grid");
}

// ---------------------------------------------------------------------------

std::string TssrCsv(const std::vector<TssrRow>& rows) {
  std::string out = "lambda,avg_tssr,ci\n";
  for (const auto& r : rows) {
    out += FormatNumber(r.lambda) + "," + FormatNumber(r.avg_tssr) + "," + FormatNumber(r.ci) + "\n";
  }
  return out;
}

std::string ExploitCsv(const std::vector<ExploitRow>& rows) {
  std::string out = "lambda,br_utility\n";
  for (const auto& r : rows) out += FormatNumber(r.lambda) + "," + FormatNumber(r.br_utility) + "\n";
  return out;
}

std::string HeatmapCsv(const std::vector<HeatmapRow>& rows) {
  std::string out = "lambda0,lambda1,br_utility\n";
  for (const auto& r : rows) {
    out += FormatNumber(r.lambda0) + "," + FormatNumber(r.lambda1) + "," +
           FormatNumber(r.br_utility) + "\n";
  }
  return out;
}

std::string MatchCsv(const std::vector<MatchRow>& rows) {
  std::string out = "lambda,win_rate,ci_halfwidth\n";
  for (const auto& r : rows) {
    out += FormatNumber(r.lambda) + "," + FormatNumber(r.win_rate) + "," +
           FormatNumber(r.ci_halfwidth) + "\n";
  }
  return out;
}

std::string PolicyRecord::FileStem() const {
  std::string stem = AlgorithmName(algorithm) + "_seat" + std::to_string(seat) + "_lambda";
  for (double v : schedule.values()) stem += "_" + FormatNumber(v);
  return stem;
}

// ---------------------------------------------------------------------------

ExperimentRunner::ExperimentRunner(ExperimentConfig config, LogSink log)
    : config_(std::move(config)), log_(std::move(log)) {
  ValidateConfig(config_);
  game_ = LoadGame(config_.game);
  beliefs_ = std::make_shared<BeliefBuilder>(game_);
}

const GameTree& ExperimentRunner::tree() {
  if (!tree_) tree_ = std::make_unique<GameTree>(game_);
  return *tree_;
}

const PolicyRecord& ExperimentRunner::Policy(Algorithm algorithm, const LambdaSchedule& schedule,
                                             Player seat) {
  std::string id = AlgorithmName(algorithm) + "|" + schedule.ToString() + "|" + std::to_string(seat);
  if (auto it = policies_.find(id); it != policies_.end()) return *it->second;
  SearchConfig search{algorithm, schedule, config_.budget, config_.uct_c};
  PolicyExtractor extractor(beliefs_, seat, search, DeriveSeed(config_.seed, {static_cast<uint64_t>(seat)}),
                            config_.workers);
  auto record = std::make_unique<PolicyRecord>(
      PolicyRecord{algorithm, schedule, seat, extractor.Stabilize(config_.stabilization, log_)});
  const PolicyRecord& ref = *record;
  order_.push_back(&ref);
  policies_.emplace(std::move(id), std::move(record));
  return ref;
}

const PolicyRecord& ExperimentRunner::PolicyForConfig() {
  return Policy(config_.algorithm, config_.lambda, config_.seat);
}

std::vector<TssrRow> ExperimentRunner::TssrSweep() {
  std::vector<TssrRow> rows;
  TssrOptions options{config_.tssr_first_only, config_.tssr_samples};
  Algorithm opp_alg = config_.opponent_algorithm.value_or(config_.algorithm);
  for (double lambda : config_.lambda_grid) {
    const auto& own = Policy(config_.algorithm, LambdaSchedule::Constant(lambda), config_.seat);
    const auto& opp = Policy(opp_alg, LambdaSchedule::Constant(config_.opponent_lambda.value_or(lambda)),
                             1 - config_.seat);
    TssrReport report = EvaluateTssr(tree(), own.result.policy, config_.seat, opp.result.policy, options);
    rows.push_back({lambda, report.average, report.ci});
  }
  return rows;
}

std::vector<ExploitRow> ExperimentRunner::ExploitSweep() {
  std::vector<ExploitRow> rows;
  for (double lambda : config_.lambda_grid) {
    const auto& own = Policy(config_.algorithm, LambdaSchedule::Constant(lambda), config_.seat);
    rows.push_back({lambda, BestResponse(tree(), own.result.policy, 1 - config_.seat).utility});
  }
  return rows;
}

std::vector<HeatmapRow> ExperimentRunner::HeatmapSweep() {
  std::vector<HeatmapRow> rows;
  for (double l0 : config_.lambda_grid) {
    for (double l1 : config_.lambda_grid) {
      // {l, l} behaves exactly like the constant schedule l.
      LambdaSchedule schedule = l0 == l1 ? LambdaSchedule::Constant(l0) : LambdaSchedule({l0, l1});
      const auto& own = Policy(config_.algorithm, schedule, config_.seat);
      rows.push_back({l0, l1, BestResponse(tree(), own.result.policy, 1 - config_.seat).utility});
    }
  }
  return rows;
}

std::vector<MatchRow> ExperimentRunner::MatchSweep() {
  std::vector<MatchRow> rows;
  const auto& opp = Policy(config_.opponent_algorithm.value_or(Algorithm::kPimc),
                           LambdaSchedule::Constant(config_.opponent_lambda.value_or(0.0)),
                           1 - config_.seat);
  MatchOptions options{config_.games, DeriveSeed(config_.seed, {kMatchStream}), config_.draw_value};
  for (double lambda : config_.lambda_grid) {
    const auto& own = Policy(config_.algorithm, LambdaSchedule::Constant(lambda), config_.seat);
    MatchReport report = PlayMatches(*game_, own.result.policy, config_.seat, opp.result.policy, options);
    rows.push_back({lambda, report.win_rate, report.ci_halfwidth});
  }
  return rows;
}

}  // namespace beliefmix
