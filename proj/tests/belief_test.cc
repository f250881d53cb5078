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

#include <cmath>
#include <set>

#include "beliefmix/errors.h"
#include "beliefmix/game_registry.h"
#include "beliefmix/game_tree.h"
#include "beliefmix/policy_extraction.h"
#include "beliefmix/trick_game.h"
#include "doctest.h"
#include "test_games.h"

namespace beliefmix {
namespace {

// Infostate of seat 0 holding a 1 (resp. 2) in one-die, two-face Liar's Dice.
const std::string kS1 = "s0[0:|1:1|][0:|0:|]";
const std::string kS1Prime = "s0[0:|1:2|][0:|0:|]";
const std::string kS2 = "s1[0:|0:|][0:|1:1|]";
const std::string kS2Prime = "s1[0:|0:|][0:|1:2|]";
const std::string kRoot = "p[0:][0:]";

struct Fixture {
  std::shared_ptr<const Game> game = LoadGame("liars_dice(dice=1,faces=2)");
  BeliefBuilder beliefs{game};
};

// Mass by dice outcome pair, worlds are histories "<d0>.<d1>" over outcome ids.
double Mass(const BeliefDistribution& b, int die0, int die1) {
  return b.MassOfHistory(std::to_string(die0 - 1) + "." + std::to_string(die1 - 1));
}

TEST_CASE("private belief of a player holding a one") {
  Fixture f;
  auto b = f.beliefs.PrivateBelief(kS1);
  CHECK(b.conditioning_key() == kS1);
  CHECK(b.size() == 2);
  CHECK(Mass(b, 1, 1) == 0.5);
  CHECK(Mass(b, 1, 2) == 0.5);
  CHECK(Mass(b, 2, 1) == 0.0);
  CHECK(Mass(b, 2, 2) == 0.0);
  CHECK(b.Marginal(0) == std::map<std::string, double>{{kS1, 1.0}});
  CHECK(b.Marginal(1) == std::map<std::string, double>{{kS2, 0.5}, {kS2Prime, 0.5}});
}

TEST_CASE("public belief before any bid") {
  Fixture f;
  auto b = f.beliefs.PublicBelief(kRoot);
  CHECK(b.size() == 4);
  for (double m : b.masses()) CHECK(m == 0.25);
  CHECK(b.Marginal(0) == std::map<std::string, double>{{kS1, 0.5}, {kS1Prime, 0.5}});
  CHECK(b.Marginal(1) == std::map<std::string, double>{{kS2, 0.5}, {kS2Prime, 0.5}});
  CHECK(f.beliefs.ConsistentWorlds("p").size() == 1);
}

TEST_CASE("half-and-half mixture") {
  Fixture f;
  auto b = f.beliefs.MixtureBelief(kS1, 0.5);
  CHECK(b.Marginal(0).at(kS1) == 0.75);
  CHECK(b.Marginal(0).at(kS1Prime) == 0.25);
  CHECK(Mass(b, 1, 1) == 0.375);
  CHECK(Mass(b, 1, 2) == 0.375);
  CHECK(Mass(b, 2, 1) == 0.125);
  CHECK(Mass(b, 2, 2) == 0.125);
}

TEST_CASE("mixture endpoints") {
  Fixture f;
  auto priv = f.beliefs.PrivateBelief(kS1);
  auto zero = f.beliefs.MixtureBelief(kS1, 0.0);
  CHECK(zero.conditioning_key() == priv.conditioning_key());
  CHECK(zero.worlds() == priv.worlds());
  CHECK(zero.masses() == priv.masses());
  CHECK(zero.Marginal(0) == priv.Marginal(0));
  CHECK(zero.Marginal(1) == priv.Marginal(1));
  auto pub = f.beliefs.PublicBelief(kRoot);
  auto one = f.beliefs.MixtureBelief(kS1, 1.0);
  CHECK(one.worlds() == pub.worlds());
  CHECK(one.masses() == pub.masses());
  CHECK_THROWS_AS(f.beliefs.MixtureBelief(kS1, 1.5), DomainError);
  CHECK_THROWS_AS(f.beliefs.MixtureBelief(kS1, -0.1), DomainError);
}

TEST_CASE("unreachable keys are rejected") {
  Fixture f;
  CHECK_THROWS_AS(f.beliefs.PrivateBelief("s0[0:|1:3|][0:|0:|]"), DomainError);
  CHECK_THROWS_AS(f.beliefs.PublicBelief("p[1:x]"), DomainError);
  CHECK_THROWS_AS(f.beliefs.PrivateBelief("garbage"), DomainError);
}

TEST_CASE("consistent worlds agree with naive enumeration") {
  for (const char* name : {"liars_dice(dice=1,faces=3)", "leduc_poker", "liars_dice(dice=2,faces=2)"}) {
    CAPTURE(name);
    auto game = LoadGame(name);
    BeliefBuilder beliefs(game);
    for (Player seat = 0; seat < kNumPlayers; ++seat) {
      auto points = EnumerateDecisionPoints(*game, seat);
      for (size_t i = 0; i < points.size(); i += 7) {
        const std::string& key = points[i].infostate_key;
        auto fast = beliefs.ConsistentWorlds(key);
        auto naive = testing::NaiveConsistentHistories(*game, key);
        REQUIRE(fast.size() == naive.size());
        for (size_t k = 0; k < fast.size(); ++k) {
          CHECK(fast[k].world->History() == naive[k].first);
          CHECK(fast[k].prior == naive[k].second);
          CHECK(fast[k].world->InfostateKey(seat) == key);
        }
        std::string pub = PublicKeyOfInfostateKey(key);
        CHECK(beliefs.ConsistentWorlds(pub).size() == testing::NaiveConsistentHistories(*game, pub).size());
      }
    }
  }
}

TEST_CASE("trick game: a card held is never in the opponent's hand") {
  auto game = LoadGame("trick_game(cards=10,hidden=2,suits=2)");
  BeliefBuilder beliefs(game);
  auto state = game->NewInitialState();
  state->ApplyActionInPlace(17);
  state->ApplyActionInPlace(4);
  auto own = static_cast<const trick_game::TrickState&>(*state).Hand(0);
  auto b = beliefs.PrivateBelief(state->InfostateKey(0));
  CHECK(b.size() == 15);
  for (const auto& w : b.worlds()) {
    CHECK((static_cast<const trick_game::TrickState&>(*w).Hand(1) & own) == 0);
  }
  CHECK(beliefs.PublicBelief(state->PublicKey()).size() == 210 * 15);
}

TEST_CASE("mixture properties over many infostates") {
  for (const char* name : {"liars_dice(dice=1,faces=3)", "leduc_poker"}) {
    CAPTURE(name);
    auto game = LoadGame(name);
    BeliefBuilder beliefs(game);
    for (Player seat = 0; seat < kNumPlayers; ++seat) {
      for (const auto& point : EnumerateDecisionPoints(*game, seat)) {
        const std::string& key = point.infostate_key;
        auto priv = beliefs.MixtureBelief(key, 0.0);
        auto pub = beliefs.MixtureBelief(key, 1.0);
        for (double lambda : {0.25, 0.6}) {
          auto mix = beliefs.MixtureBelief(key, lambda);
          // Convexity per world; supports nest.
          size_t pi = 0;
          for (size_t k = 0; k < mix.size(); ++k) {
            double p = 0.0;
            if (pi < priv.size() && priv.worlds()[pi] == mix.worlds()[k]) p = priv.masses()[pi++];
            CHECK(std::abs(mix.masses()[k] - ((1 - lambda) * p + lambda * pub.masses()[k])) < 1e-12);
          }
          CHECK(pi == priv.size());
          CHECK(mix.size() == pub.size());
          // Marginals are projections of the world masses.
          for (Player j = 0; j < kNumPlayers; ++j) {
            std::map<std::string, double> sums;
            for (size_t k = 0; k < mix.size(); ++k) sums[mix.worlds()[k]->InfostateKey(j)] += mix.masses()[k];
            for (const auto& [s, m] : mix.Marginal(j)) CHECK(std::abs(sums[s] - m) < 1e-9);
          }
          double total = 0.0;
          for (double m : mix.masses()) total += m;
          CHECK(std::abs(total - 1.0) < 1e-9);
        }
        CHECK(std::abs(priv.Marginal(seat).at(key) - 1.0) < 1e-9);
        CHECK(priv.Marginal(seat).size() == 1);
        // Conditioning soundness.
        for (const auto& w : priv.worlds()) {
          CHECK(ReplayHistory(*game, w->History())->InfostateKey(seat) == key);
        }
      }
    }
  }
}

TEST_CASE("sampling") {
  Fixture f;
  SUBCASE("point mass") {
    auto b = f.beliefs.PrivateBelief("s0[0:|1:1|][0:|0:|][3:1x1|0:|0][3:2x1|0:|]");
    REQUIRE(b.size() == 2);
    Rng rng(5);
    BeliefDistribution point("x", {b.worlds()[1]}, {1.0});
    for (int i = 0; i < 100; ++i) CHECK(point.SampleIndex(rng) == 0);
  }
  SUBCASE("empirical frequency of a mixture") {
    auto b = f.beliefs.MixtureBelief(kS1, 0.5);
    Rng rng(12345);
    const int n = 1'000'000;
    std::vector<int> counts(b.size(), 0);
    for (int i = 0; i < n; ++i) ++counts[b.SampleIndex(rng)];
    for (size_t k = 0; k < b.size(); ++k) {
      CHECK(std::abs(static_cast<double>(counts[k]) / n - b.masses()[k]) < 0.002);
    }
  }
  SUBCASE("uniform public belief passes a chi-square test") {
    auto game = LoadGame("leduc_poker");
    BeliefBuilder beliefs(game);
    auto b = beliefs.PublicBelief("p[0:][0:]");
    REQUIRE(b.size() == 30);
    Rng rng(99);
    const int n = 30'000;
    std::vector<int> counts(b.size(), 0);
    for (int i = 0; i < n; ++i) ++counts[b.SampleIndex(rng)];
    double chi2 = 0.0;
    for (int c : counts) chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
    // 99th percentile of chi-square with 29 degrees of freedom.
    CHECK(chi2 < 49.588);
  }
  SUBCASE("reproducible and empty beliefs fail") {
    auto b = f.beliefs.MixtureBelief(kS1, 0.3);
    Rng a(7), c(7);
    for (int i = 0; i < 50; ++i) CHECK(b.SampleIndex(a) == b.SampleIndex(c));
    BeliefDistribution empty("x", {}, {});
    CHECK_THROWS_AS(empty.SampleIndex(a), DomainError);
  }
}

TEST_CASE("lambda schedules") {
  auto s = LambdaSchedule::Parse("0.2, 0.7");
  CHECK(s.At(0) == 0.2);
  CHECK(s.At(1) == 0.7);
  CHECK(s.At(5) == 0.7);
  CHECK(s.ToString() == "0.2,0.7");
  CHECK(LambdaSchedule::Parse(s.ToString()) == s);
  CHECK_THROWS_AS(LambdaSchedule::Parse("1.2"), DomainError);
  CHECK_THROWS_AS(LambdaSchedule::Parse("a"), DomainError);
  CHECK_THROWS_AS(LambdaSchedule(std::vector<double>{}), DomainError);
}

TEST_CASE("belief CSV export") {
  Fixture f;
  std::string csv = f.beliefs.PrivateBelief(kS1).ToCsv();
  CHECK(csv.rfind("conditioning_key,world,mass\n", 0) == 0);
  CHECK(csv.find(",0.0,0.5\n") != std::string::npos);
}

}  // namespace
}  // namespace beliefmix
