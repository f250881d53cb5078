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

#include "cli.h"

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "beliefmix/errors.h"
#include "beliefmix/experiment.h"
#include "beliefmix/tabular_policy.h"
#include "json.hpp"

namespace beliefmix::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct Subcommand {
  const char* name;
  const char* description;
};

constexpr Subcommand kSubcommands[] = {
    {"tssr", "Average TSSR per lambda: lambda,avg_tssr,ci"},
    {"exploit", "Best-response utility per lambda: lambda,br_utility"},
    {"heatmap", "Best-response utility per schedule {lambda0, lambda1}: lambda0,lambda1,br_utility"},
    {"match", "Win rate per lambda against the opponent: lambda,win_rate,ci_halfwidth"},
    {"policy", "Stabilized policy file for the configured lambda schedule"},
};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void WriteFile(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string FlagName(const std::string& key) {
  std::string flag = "--" + key;
  for (char& c : flag) {
    if (c == '_') c = '-';
  }
  return flag;
}

// Resolves the configured output path; subcommand defaults to
// "<subcommand>.csv" ("policy.tsv" for policies).
fs::path ResolveOutput(const std::string& subcommand, const std::string& configured) {
  const char* env = std::getenv(kOutputDirEnv);
  fs::path dir = env != nullptr && *env != '\0' ? fs::path(env) : fs::path(".");
  if (configured.empty()) return dir / (subcommand + (subcommand == "policy" ? ".tsv" : ".csv"));
  fs::path path(configured);
  return path.is_absolute() ? path : dir / path;
}

ordered_json PolicyEntry(const PolicyRecord& record, const fs::path& file,
                         const std::string& content) {
  ordered_json entry;
  entry["file"] = file.string();
  entry["git_sha1"] = GitBlobSha1(content);
  entry["algorithm"] = AlgorithmName(record.algorithm);
  entry["lambda_schedule"] = record.schedule.ToString();
  entry["seat"] = record.seat;
  entry["batches"] = record.result.batches;
  entry["passes"] = record.result.passes;
  entry["variation"] = record.result.variation;
  return entry;
}

struct Invocation {
  std::string subcommand;
  std::string config_file;
  std::map<std::string, std::string> overrides;
};

int Execute(const Invocation& inv) {
  std::map<std::string, std::string> values;
  if (!inv.config_file.empty()) values = ParseConfigText(ReadFile(inv.config_file));
  for (const auto& [k, v] : inv.overrides) values[k] = v;
  ExperimentConfig config;
  ApplyConfig(values, &config);
  fs::path output = ResolveOutput(inv.subcommand, config.output);
  config.output = output.string();

  ExperimentRunner runner(config, [](const std::string& line) { std::cerr << line << '\n'; });
  std::string csv;
  if (inv.subcommand == "tssr") {
    csv = TssrCsv(runner.TssrSweep());
  } else if (inv.subcommand == "exploit") {
    csv = ExploitCsv(runner.ExploitSweep());
  } else if (inv.subcommand == "heatmap") {
    csv = HeatmapCsv(runner.HeatmapSweep());
  } else if (inv.subcommand == "match") {
    csv = MatchCsv(runner.MatchSweep());
  } else {
    runner.PolicyForConfig();
  }

  ordered_json meta;
  meta["subcommand"] = inv.subcommand;
  meta["game"] = runner.game().ToString();
  ordered_json echo;
  for (const auto& [k, v] : config.ToMap()) echo[k] = v;
  meta["config"] = echo;
  ordered_json policies = ordered_json::array();
  if (inv.subcommand == "policy") {
    const PolicyRecord& record = runner.PolicyForConfig();
    std::string text = SerializePolicy(record.result.policy, runner.game());
    WriteFile(output, text);
    meta["output"] = {{"file", output.string()}, {"git_sha1", GitBlobSha1(text)}};
    policies.push_back(PolicyEntry(record, output, text));
  } else {
    WriteFile(output, csv);
    meta["output"] = {{"file", output.string()}, {"git_sha1", GitBlobSha1(csv)}};
    fs::path dir = output.string() + ".policies";
    for (const PolicyRecord* record : runner.policies()) {
      std::string text = SerializePolicy(record->result.policy, runner.game());
      fs::path file = dir / (record->FileStem() + ".tsv");
      WriteFile(file, text);
      policies.push_back(PolicyEntry(*record, file, text));
    }
  }
  meta["policies"] = policies;
  WriteFile(output.string() + ".meta.json", meta.dump(2) + "\n");
  std::cerr << "wrote " << output.string() << '\n';
  return kExitOk;
}

}  // namespace

std::string GitBlobSha1(std::string_view content) {
  std::string header = "blob " + std::to_string(content.size());
  header.push_back('\0');
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha1(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), header.data(), header.size()) != 1 ||
      EVP_DigestUpdate(ctx.get(), content.data(), content.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1) {
    throw std::runtime_error("SHA-1 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xf]);
  }
  return hex;
}

int Run(int argc, const char* const* argv) {
  CLI::App app{"Determinization search over lambda-mixture beliefs.", "beliefmix"};
  app.require_subcommand(1);
  Invocation inv;
  // CLI11 binds options to storage; values are copied into `overrides`
  // only for flags that were given.
  std::map<std::string, std::map<std::string, std::string>> storage;
  std::map<std::string, std::map<std::string, CLI::Option*>> options;
  std::map<std::string, std::string> config_files;
  for (const auto& [name, description] : kSubcommands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("-c,--config", config_files[name], "Config file of key = value lines");
    for (const auto& key : ExperimentConfigKeys()) {
      options[name][key] = sub->add_option(FlagName(key), storage[name][key], "Overrides " + key);
    }
  }
  app.footer(std::string("Exit status: 0 ok, 2 invalid configuration, 3 no convergence, 1 other. "
                         "Relative outputs resolve against $") + kOutputDirEnv + ".");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }
  for (const auto& [name, description] : kSubcommands) {
    if (!app.got_subcommand(name)) continue;
    inv.subcommand = name;
    inv.config_file = config_files[name];
    for (const auto& [key, option] : options[name]) {
      if (option->count() > 0) inv.overrides[key] = storage[name][key];
    }
  }
  try {
    return Execute(inv);
  } catch (const ConfigError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace beliefmix::cli
