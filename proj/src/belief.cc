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

#include "beliefmix/belief.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "beliefmix/errors.h"

namespace beliefmix {

LambdaSchedule::LambdaSchedule(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("empty lambda schedule");
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("lambda outside [0, 1]");
  }
}

LambdaSchedule LambdaSchedule::Parse(std::string_view text) {
  std::vector<double> values;
  while (true) {
    size_t comma = text.find(',');
    std::string item(text.substr(0, comma));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    double v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw DomainError("bad lambda value '" + item + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return LambdaSchedule(std::move(values));
}

double LambdaSchedule::At(int decision_index) const {
  if (decision_index < 0) throw DomainError("negative decision index");
  return decision_index < static_cast<int>(values_.size()) ? values_[decision_index]
                                                           : values_.back();
}

std::string LambdaSchedule::ToString() const {
  std::string out;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out.push_back(',');
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), values_[i]);
    out.append(buf, end);
  }
  return out;
}

// ---------------------------------------------------------------------------

BeliefDistribution::BeliefDistribution(std::string conditioning_key,
                                       std::vector<WorldPtr> worlds,
                                       std::vector<double> masses)
    : conditioning_key_(std::move(conditioning_key)),
      worlds_(std::move(worlds)),
      masses_(std::move(masses)) {
  cumulative_.reserve(masses_.size());
  double total = 0.0;
  for (size_t k = 0; k < worlds_.size(); ++k) {
    total += masses_[k];
    cumulative_.push_back(total);
    for (Player p = 0; p < kNumPlayers; ++p) {
      marginals_[p][worlds_[k]->InfostateKey(p)] += masses_[k];
    }
  }
}

double BeliefDistribution::MassOfHistory(std::string_view history) const {
  for (size_t k = 0; k < worlds_.size(); ++k) {
    if (worlds_[k]->HistoryString() == history) return masses_[k];
  }
  return 0.0;
}

size_t BeliefDistribution::SampleIndex(Rng& rng) const {
  if (worlds_.empty()) throw DomainError("cannot sample from an empty belief");
  double u = rng.Uniform01() * cumulative_.back();
  size_t k = std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin();
  return std::min(k, worlds_.size() - 1);
}

std::string BeliefDistribution::ToCsv() const {
  std::ostringstream out;
  out.precision(17);
  out << "conditioning_key,world,mass\n";
  for (size_t k = 0; k < worlds_.size(); ++k) {
    out << '"' << conditioning_key_ << "\"," << worlds_[k]->HistoryString() << ','
        << masses_[k] << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

Player SeatOfInfostateKey(std::string_view key) {
  if (key.size() < 2 || key[0] != 's') throw DomainError("not an infostate key");
  int seat = key[1] - '0';
  if (seat < 0 || seat >= kNumPlayers) throw DomainError("infostate key seat out of range");
  return seat;
}

std::string PublicKeyOfInfostateKey(std::string_view key) {
  try {
    return Infostate::FromKey(key).PublicProjection().key();
  } catch (const ParseError& e) {
    throw DomainError(e.what());
  }
}

BeliefBuilder::BeliefBuilder(std::shared_ptr<const Game> game, size_t cache_world_limit,
                             size_t support_limit)
    : game_(std::move(game)),
      cache_world_limit_(cache_world_limit),
      support_limit_(support_limit) {}

std::shared_ptr<const WorldSupport> BeliefBuilder::PublicSupport(
    const std::string& public_key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return PublicSupportLocked(public_key);
}

std::shared_ptr<const WorldSupport> BeliefBuilder::PublicSupportLocked(
    const std::string& public_key) const {
  if (auto it = cache_.find(public_key); it != cache_.end()) return it->second;

  std::shared_ptr<WorldSupport> support = std::make_shared<WorldSupport>();
  if (public_key == kEmptyPublicKey) {
    support->push_back({game_->NewInitialState(), 1.0});
  } else {
    PublicInfostate pub;
    try {
      pub = PublicInfostate::FromKey(public_key);
    } catch (const ParseError& e) {
      throw DomainError(e.what());
    }
    auto parent = PublicSupportLocked(pub.Prefix(pub.size() - 1).key());
    for (const auto& [world, prior] : *parent) {
      if (world->IsTerminal()) continue;
      std::vector<std::pair<Action, double>> edges;
      if (world->IsChanceNode()) {
        edges = world->ChanceOutcomes();
      } else {
        for (Action a : world->LegalActions()) edges.emplace_back(a, 1.0);
      }
      for (const auto& [a, p] : edges) {
        auto [child, obs] = world->Child(a);
        if (child->PublicKey() != public_key) continue;
        support->push_back({WorldPtr(std::move(child)), prior * p});
        if (support->size() > support_limit_) {
          throw DomainError("public support of " + game_->ToString() + " exceeds " +
                            std::to_string(support_limit_) + " worlds");
        }
      }
    }
  }
  if (support->empty()) throw DomainError("unreachable public state " + public_key);
  if (cached_worlds_ + support->size() > cache_world_limit_) {
    cache_.clear();
    cached_worlds_ = 0;
  }
  cached_worlds_ += support->size();
  cache_.emplace(public_key, support);
  return support;
}

WorldSupport BeliefBuilder::ConsistentWorlds(std::string_view key) const {
  if (!key.empty() && key[0] == 'p') return *PublicSupport(std::string(key));
  Player seat = SeatOfInfostateKey(key);
  auto pub = PublicSupport(PublicKeyOfInfostateKey(key));
  WorldSupport out;
  for (const auto& entry : *pub) {
    if (entry.world->InfostateKey(seat) == key) out.push_back(entry);
  }
  if (out.empty()) throw DomainError("unreachable infostate " + std::string(key));
  return out;
}

namespace {

BeliefDistribution Normalized(std::string key, const WorldSupport& support) {
  double total = 0.0;
  for (const auto& entry : support) total += entry.prior;
  std::vector<WorldPtr> worlds;
  std::vector<double> masses;
  worlds.reserve(support.size());
  masses.reserve(support.size());
  for (const auto& entry : support) {
    worlds.push_back(entry.world);
    masses.push_back(entry.prior / total);
  }
  return BeliefDistribution(std::move(key), std::move(worlds), std::move(masses));
}

}  // namespace

BeliefDistribution BeliefBuilder::PrivateBelief(std::string_view infostate_key) const {
  return Normalized(std::string(infostate_key), ConsistentWorlds(infostate_key));
}

BeliefDistribution BeliefBuilder::PublicBelief(std::string_view public_key) const {
  return Normalized(std::string(public_key), *PublicSupport(std::string(public_key)));
}

BeliefDistribution BeliefBuilder::MixtureBelief(std::string_view infostate_key,
                                                double lambda) const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("lambda outside [0, 1]");
  Player seat = SeatOfInfostateKey(infostate_key);
  auto pub = PublicSupport(PublicKeyOfInfostateKey(infostate_key));

  double public_total = 0.0, private_total = 0.0;
  for (const auto& entry : *pub) {
    public_total += entry.prior;
    if (entry.world->InfostateKey(seat) == infostate_key) private_total += entry.prior;
  }
  if (private_total == 0.0) {
    throw DomainError("unreachable infostate " + std::string(infostate_key));
  }
  std::vector<WorldPtr> worlds;
  std::vector<double> masses;
  for (const auto& entry : *pub) {
    bool own = entry.world->InfostateKey(seat) == infostate_key;
    double p = own ? entry.prior / private_total : 0.0;
    double q = entry.prior / public_total;
    double mass = (1.0 - lambda) * p + lambda * q;
    if (mass > 0.0) {
      worlds.push_back(entry.world);
      masses.push_back(mass);
    }
  }
  return BeliefDistribution(std::string(infostate_key), std::move(worlds), std::move(masses));
}

}  // namespace beliefmix
