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

// Tabular stochastic policy of one seat, with a line-oriented text format:
//
//   # game=liars_dice(dice=1,faces=2)
//   # algorithm=pimc
//   # ...
//   <infostate key>\t<action label>\t<probability>
//
// Probabilities are written in shortest round-trip form, so a save/load
// cycle reproduces every value bit for bit.

#ifndef BELIEFMIX_TABULAR_POLICY_H_
#define BELIEFMIX_TABULAR_POLICY_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "beliefmix/fosg.h"

namespace beliefmix {

struct PolicyMetadata {
  std::string game;
  std::string algorithm;
  std::string lambda_schedule;
  uint64_t seed = 0;
  int budget = 0;
  Player seat = 0;
  // Additional "# key=value" lines, kept verbatim.
  std::map<std::string, std::string> extra;

  bool operator==(const PolicyMetadata&) const = default;
};

struct PolicyRow {
  std::vector<Action> actions;  // Sorted.
  std::vector<double> probs;

  bool operator==(const PolicyRow&) const = default;
};

class TabularPolicy {
 public:
  static constexpr double kRowSumTolerance = 1e-9;

  TabularPolicy() = default;
  explicit TabularPolicy(PolicyMetadata metadata) : metadata_(std::move(metadata)) {}

  const PolicyMetadata& metadata() const { return metadata_; }
  PolicyMetadata& mutable_metadata() { return metadata_; }

  // Throws DomainError for empty, unsorted, negative or non-normalized rows.
  void SetRow(const std::string& key, PolicyRow row);
  bool Contains(const std::string& key) const { return rows_.count(key) > 0; }
  // Throws DomainError when the key is not covered.
  const PolicyRow& Row(const std::string& key) const;
  // Probability of `action` at `key`; 0 for actions outside the row.
  double Prob(const std::string& key, Action action) const;
  const std::map<std::string, PolicyRow>& rows() const { return rows_; }
  size_t size() const { return rows_.size(); }

  bool operator==(const TabularPolicy&) const = default;

 private:
  PolicyMetadata metadata_;
  std::map<std::string, PolicyRow> rows_;
};

// Uniform row over `actions`.
PolicyRow UniformRow(const std::vector<Action>& actions);

std::string SerializePolicy(const TabularPolicy& policy, const Game& game);
// Action labels are resolved through the game named in the metadata.
TabularPolicy ParsePolicy(const std::string& text);

void SavePolicy(const TabularPolicy& policy, const Game& game, const std::string& path);
TabularPolicy LoadPolicy(const std::string& path);

}  // namespace beliefmix

#endif  // BELIEFMIX_TABULAR_POLICY_H_
