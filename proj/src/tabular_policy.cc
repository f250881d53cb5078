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

#include "beliefmix/tabular_policy.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "beliefmix/errors.h"
#include "beliefmix/game_registry.h"

namespace beliefmix {
namespace {

std::string FormatDouble(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

void CheckRowSum(const std::vector<double>& probs, int line, const std::string& key) {
  double sum = 0.0;
  for (double p : probs) sum += p;
  if (std::abs(sum - 1.0) > TabularPolicy::kRowSumTolerance) {
    throw ParseError("probabilities of '" + key + "' sum to " + FormatDouble(sum), line);
  }
}

}  // namespace

void TabularPolicy::SetRow(const std::string& key, PolicyRow row) {
  if (row.actions.empty() || row.actions.size() != row.probs.size()) {
    throw DomainError("malformed policy row for " + key);
  }
  if (!std::is_sorted(row.actions.begin(), row.actions.end()) ||
      std::adjacent_find(row.actions.begin(), row.actions.end()) != row.actions.end()) {
    throw DomainError("policy row actions must be sorted and distinct");
  }
  double sum = 0.0;
  for (double p : row.probs) {
    if (!(p >= 0.0)) throw DomainError("negative probability in policy row " + key);
    sum += p;
  }
  if (std::abs(sum - 1.0) > kRowSumTolerance) {
    throw DomainError("policy row " + key + " sums to " + FormatDouble(sum));
  }
  rows_.insert_or_assign(key, std::move(row));
}

const PolicyRow& TabularPolicy::Row(const std::string& key) const {
  auto it = rows_.find(key);
  if (it == rows_.end()) throw DomainError("policy does not cover infostate " + key);
  return it->second;
}

double TabularPolicy::Prob(const std::string& key, Action action) const {
  const PolicyRow& row = Row(key);
  auto it = std::lower_bound(row.actions.begin(), row.actions.end(), action);
  if (it == row.actions.end() || *it != action) return 0.0;
  return row.probs[it - row.actions.begin()];
}

PolicyRow UniformRow(const std::vector<Action>& actions) {
  PolicyRow row;
  row.actions = actions;
  row.probs.assign(actions.size(), 1.0 / static_cast<double>(actions.size()));
  return row;
}

// ---------------------------------------------------------------------------

std::string SerializePolicy(const TabularPolicy& policy, const Game& game) {
  const PolicyMetadata& m = policy.metadata();
  std::ostringstream out;
  out << "# game=" << m.game << '\n'
      << "# algorithm=" << m.algorithm << '\n'
      << "# lambda_schedule=" << m.lambda_schedule << '\n'
      << "# seed=" << m.seed << '\n'
      << "# budget=" << m.budget << '\n'
      << "# seat=" << m.seat << '\n';
  for (const auto& [k, v] : m.extra) out << "# " << k << '=' << v << '\n';
  for (const auto& [key, row] : policy.rows()) {
    if (key.find_first_of("\t\n") != std::string::npos) {
      throw DomainError("infostate key contains a tab or newline");
    }
    for (size_t i = 0; i < row.actions.size(); ++i) {
      out << key << '\t' << game.ActionLabel(row.actions[i]) << '\t'
          << FormatDouble(row.probs[i]) << '\n';
    }
  }
  return out.str();
}

TabularPolicy ParsePolicy(const std::string& text) {
  static const std::set<std::string> kRequired = {"game", "algorithm", "lambda_schedule",
                                                  "seed", "budget",    "seat"};
  PolicyMetadata meta;
  std::set<std::string> seen;
  std::shared_ptr<const Game> game;
  TabularPolicy policy;

  std::string pending_key;
  PolicyRow pending;
  int pending_line = 0;
  auto flush = [&]() {
    if (pending_key.empty()) return;
    CheckRowSum(pending.probs, pending_line, pending_key);
    try {
      policy.SetRow(pending_key, std::move(pending));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), pending_line);
    }
    pending_key.clear();
    pending = PolicyRow{};
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (game) throw ParseError("metadata after policy rows", line_no);
      size_t eq = line.find('=');
      if (eq == std::string::npos || line.size() < 2 || line[1] != ' ') {
        throw ParseError("malformed metadata line", line_no);
      }
      std::string k = line.substr(2, eq - 2), v = line.substr(eq + 1);
      if (!seen.insert(k).second) throw ParseError("duplicate metadata field " + k, line_no);
      try {
        if (k == "game") {
          meta.game = v;
        } else if (k == "algorithm") {
          meta.algorithm = v;
        } else if (k == "lambda_schedule") {
          meta.lambda_schedule = v;
        } else if (k == "seed") {
          meta.seed = std::stoull(v);
        } else if (k == "budget") {
          meta.budget = std::stoi(v);
        } else if (k == "seat") {
          meta.seat = std::stoi(v);
        } else {
          meta.extra[k] = v;
        }
      } catch (const std::logic_error&) {
        throw ParseError("bad value for metadata field " + k, line_no);
      }
      continue;
    }
    if (!game) {
      for (const auto& field : kRequired) {
        if (!seen.count(field)) throw ParseError("missing metadata field " + field, line_no);
      }
      try {
        game = LoadGame(meta.game);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), line_no);
      }
      policy = TabularPolicy(meta);
    }
    size_t t1 = line.find('\t');
    size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw ParseError("expected three tab-separated fields", line_no);
    }
    std::string key = line.substr(0, t1);
    std::string label = line.substr(t1 + 1, t2 - t1 - 1);
    std::string prob_text = line.substr(t2 + 1);
    auto action = game->ActionFromLabel(label);
    if (!action) throw ParseError("unknown action label '" + label + "'", line_no);
    double prob = 0.0;
    auto [ptr, ec] = std::from_chars(prob_text.data(), prob_text.data() + prob_text.size(), prob);
    if (ec != std::errc() || ptr != prob_text.data() + prob_text.size()) {
      throw ParseError("bad probability '" + prob_text + "'", line_no);
    }
    if (key != pending_key) {
      flush();
      if (policy.Contains(key)) throw ParseError("rows of '" + key + "' are not contiguous", line_no);
      pending_key = key;
      pending_line = line_no;
    }
    pending.actions.push_back(*action);
    pending.probs.push_back(prob);
  }
  flush();
  if (!game) {
    for (const auto& field : kRequired) {
      if (!seen.count(field)) throw ParseError("missing metadata field " + field, line_no);
    }
    policy = TabularPolicy(meta);
  }
  return policy;
}

void SavePolicy(const TabularPolicy& policy, const Game& game, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << SerializePolicy(policy, game);
  if (!out) throw std::runtime_error("failed writing " + path);
}

TabularPolicy LoadPolicy(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParsePolicy(buf.str());
}

}  // namespace beliefmix
