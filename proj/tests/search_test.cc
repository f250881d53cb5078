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

#include <cmath>
#include <memory>

#include "beliefmix/belief.h"
#include "beliefmix/decider.h"
#include "beliefmix/errors.h"
#include "beliefmix/game_registry.h"
#include "beliefmix/ismcts.h"
#include "beliefmix/perfect_info.h"
#include "beliefmix/pimc.h"
#include "beliefmix/policy_extraction.h"
#include "doctest.h"
#include "test_games.h"

namespace beliefmix {
namespace {

const std::string kS1 = "s0[0:|1:1|][0:|0:|]";
const std::string kS1Prime = "s0[0:|1:2|][0:|0:|]";

std::shared_ptr<const BeliefBuilder> Beliefs(const std::string& game) {
  return std::make_shared<BeliefBuilder>(LoadGame(game));
}

DecisionPoint RootPoint(const std::string& key) {
  // Seat 0 opening bid in one-die, two-face Liar's Dice: bids 0..3.
  return DecisionPoint{0, key, {0, 1, 2, 3}};
}

TEST_CASE("expectiminimax examples") {
  auto game = LoadGame("liars_dice(dice=1,faces=2)");
  PerfectInfoSolver solver;
  SUBCASE("terminal world") {
    auto w = ReplayHistory(*game, std::vector<Action>{0, 1, 0, 4});
    REQUIRE(w->IsTerminal());
    CHECK(solver.Value(*w, 0) == w->Utility(0));
    CHECK(solver.Value(*w, 1) == w->Utility(1));
  }
  SUBCASE("claiming a two while holding a one loses in world (1,2)") {
    auto w = ReplayHistory(*game, std::vector<Action>{0, 1});
    Action two_twos = *game->ActionFromLabel("2x2");
    auto child = w->Child(two_twos).first;
    CHECK(solver.Value(*child, 0) == -1.0);
    CHECK(UnprunedMinimax(*child, 0) == -1.0);
    bool found = false;
    for (const auto& [a, v] : solver.ActionValues(*w, 0)) {
      if (a == two_twos) {
        CHECK(v == -1.0);
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("pruned search equals unpruned minimax") {
  for (const char* name : {"liars_dice(dice=1,faces=3)", "liars_dice(dice=2,faces=2)",
                           "leduc_poker", "trick_game(cards=6,hidden=2,suits=2)",
                           "trick_game(cards=10,hidden=2,suits=2)"}) {
    CAPTURE(name);
    auto game = LoadGame(name);
    Rng rng(2024);
    int checked = 0;
    for (int trial = 0; checked < 20 && trial < 200; ++trial) {
      auto state = game->NewInitialState();
      int depth = rng.UniformInt(5);
      while (!state->IsTerminal() && (state->IsChanceNode() || depth-- > 0)) {
        auto legal = state->LegalActions();
        state->ApplyActionInPlace(legal[rng.UniformInt(static_cast<int>(legal.size()))]);
      }
      if (state->IsTerminal()) continue;
      PerfectInfoSolver solver;
      for (Player seat = 0; seat < kNumPlayers; ++seat) {
        CHECK(solver.Value(*state, seat) == UnprunedMinimax(*state, seat));
      }
      if (state->IsPlayerNode()) {
        PerfectInfoSolver fresh;
        for (const auto& [a, v] : fresh.ActionValues(*state, 0)) {
          CHECK(v == UnprunedMinimax(*state->Child(a).first, 0));
        }
      }
      ++checked;
    }
    CHECK(checked == 20);
  }
}

TEST_CASE("uct selection") {
  std::vector<EdgeStats> edges(3);
  edges[0] = {10, 5.0};
  edges[1] = {1, 0.0};
  std::vector<Action> legal{0, 1};
  SUBCASE("hand-evaluated example picks the rarely visited child") {
    double ucb_a = 0.5 + 0.7 * std::sqrt(std::log(11.0) / 10);
    double ucb_b = 0.7 * std::sqrt(std::log(11.0));
    CHECK(ucb_a == doctest::Approx(0.843).epsilon(0.001));
    CHECK(ucb_b == doctest::Approx(1.084).epsilon(0.001));
    CHECK(UctSelect(edges, legal, 0.7) == 1);
  }
  SUBCASE("illegal children are ignored") {
    edges[2] = {1000, 1000.0};
    CHECK(UctSelect(edges, legal, 0.7) == 1);
    CHECK(UctSelect(edges, std::vector<Action>{0, 1, 2}, 0.0) == 2);
    CHECK(UctSelect(edges, std::vector<Action>{0}, 0.7) == 0);
  }
  SUBCASE("ties go to the lowest id") {
    edges[1] = {10, 5.0};
    CHECK(UctSelect(edges, legal, 0.7) == 0);
  }
  SUBCASE("without exploration the best mean wins") {
    CHECK(UctSelect(edges, legal, 0.0) == 0);
  }
}

TEST_CASE("pimc with the private belief is single-table PIMC") {
  for (const char* name : {"liars_dice(dice=1,faces=3)", "leduc_poker",
                           "trick_game(cards=6,hidden=2,suits=2)"}) {
    CAPTURE(name);
    auto beliefs = Beliefs(name);
    const Game& game = beliefs->game();
    for (Player seat = 0; seat < kNumPlayers; ++seat) {
      auto points = EnumerateDecisionPoints(game, seat);
      for (size_t i = 0; i < points.size(); i += std::max<size_t>(1, points.size() / 12)) {
        PimcDecider pimc(beliefs, LambdaSchedule::Constant(0.0), 200);
        uint64_t seed = 1000 + i;
        auto report = pimc.Search(points[i], seed);
        CHECK(report.tables.size() == 1);
        CHECK(report.tables.begin()->first == points[i].infostate_key);
        CHECK(report.tables.begin()->second.visits == 200);
        auto direct = testing::DirectPimc(game, points[i].infostate_key, points[i].legal_actions,
                                          200, seed);
        REQUIRE(direct.size() == report.scores.size());
        for (size_t k = 0; k < direct.size(); ++k) CHECK(report.scores[k] == direct[k]);
      }
    }
  }
}

TEST_CASE("pimc over the half-and-half mixture") {
  auto beliefs = Beliefs("liars_dice(dice=1,faces=2)");
  PimcDecider pimc(beliefs, LambdaSchedule::Constant(0.5), 1000);
  auto report = pimc.Search(RootPoint(kS1), 7);
  REQUIRE(report.tables.size() == 2);
  double share = report.tables.at(kS1).visits / 1000.0;
  CHECK(share == doctest::Approx(0.75).epsilon(0.06));
  CHECK(report.tables.at(kS1).visits + report.tables.at(kS1Prime).visits == 1000);
  for (const auto& [key, table] : report.tables) {
    for (const auto& [a, n] : table.legal_visits) CHECK(n == table.visits);
  }
  CHECK(report.lambda == 0.5);
}

TEST_CASE("pimc never lies with the private belief") {
  auto beliefs = Beliefs("liars_dice(dice=1,faces=2)");
  Action two_twos = *beliefs->game().ActionFromLabel("2x2");
  for (uint64_t seed = 0; seed < 20; ++seed) {
    PimcDecider pimc(beliefs, LambdaSchedule::Constant(0.0), 100);
    auto report = pimc.Search(RootPoint(kS1), seed);
    CHECK(report.recommended != two_twos);
    CHECK(report.scores[two_twos] == -1.0);
  }
}

TEST_CASE("pimc siblings agree under the public belief") {
  for (const char* name : {"liars_dice(dice=1,faces=3)", "leduc_poker"}) {
    CAPTURE(name);
    auto beliefs = Beliefs(name);
    for (Player seat = 0; seat < kNumPlayers; ++seat) {
      auto points = EnumerateDecisionPoints(beliefs->game(), seat);
      std::map<std::string, std::vector<const DecisionPoint*>> by_public;
      for (const auto& p : points) by_public[PublicKeyOfInfostateKey(p.infostate_key)].push_back(&p);
      int groups = 0;
      for (const auto& [pub, group] : by_public) {
        if (group.size() < 2 || groups++ > 10) continue;
        PimcDecider a(beliefs, LambdaSchedule::Constant(1.0), 100);
        PimcDecider b(beliefs, LambdaSchedule::Constant(1.0), 100);
        auto ra = a.Search(*group[0], 77);
        auto rb = b.Search(*group[1], 77);
        CHECK(ra.tables.size() == rb.tables.size());
        for (size_t i = 0; i < ra.actions.size(); ++i) {
          for (size_t j = 0; j < rb.actions.size(); ++j) {
            if (ra.actions[i] == rb.actions[j]) CHECK(ra.scores[i] == rb.scores[j]);
          }
        }
      }
      CHECK(groups > 0);
    }
  }
}

TEST_CASE("pimc csv and argmax") {
  auto beliefs = Beliefs("liars_dice(dice=1,faces=2)");
  PimcDecider pimc(beliefs, LambdaSchedule::Constant(0.3), 50);
  auto report = pimc.Search(RootPoint(kS1), 3);
  size_t best = 0;
  for (size_t k = 1; k < report.scores.size(); ++k) {
    if (report.scores[k] > report.scores[best]) best = k;
  }
  CHECK(report.recommended == report.actions[best]);
  auto probs = pimc.Decide(RootPoint(kS1), 3);
  CHECK(probs[best] == 1.0);
  std::string csv = report.ToCsv(beliefs->game());
  CHECK(csv.rfind("infostate_key,action_label,score\n", 0) == 0);
  CHECK(csv.find("\"" + kS1 + "\",1x1,") != std::string::npos);
}

TEST_CASE("ismcts tree structure") {
  auto beliefs = Beliefs("liars_dice(dice=1,faces=2)");
  // Seat 1 holding a one after the opening bid 1x1; reachable from world
  // (1,1) under s1 and from world (2,1) under s1'.
  const std::string opponent = "s1[0:|0:|][0:|1:1|][3:1x1|0:|]";
  SUBCASE("private belief roots the tree at the true infostate only") {
    IsmctsDecider mcts(beliefs, LambdaSchedule::Constant(0.0), 500, 0.7);
    auto report = mcts.Search(RootPoint(kS1), 11);
    CHECK(report.Node(kS1) != nullptr);
    CHECK(report.Node(kS1Prime) == nullptr);
    CHECK(report.root_visits == 500);
  }
  SUBCASE("public belief reaches the opponent node from both roots") {
    IsmctsDecider mcts(beliefs, LambdaSchedule::Constant(1.0), 500, 0.7);
    auto report = mcts.Search(RootPoint(kS1), 11);
    REQUIRE(report.Node(kS1) != nullptr);
    REQUIRE(report.Node(kS1Prime) != nullptr);
    CHECK(report.Node(opponent) != nullptr);
    CHECK(report.Node(opponent)->player == 1);
    int root_edges = 0;
    for (const auto& key : {kS1, kS1Prime}) {
      for (const auto& e : report.Node(key)->edges) root_edges += e.visits;
    }
    CHECK(root_edges == 500);
    CHECK(report.root_visits == 500);
    int opening = report.Node(kS1)->edges[0].visits + report.Node(kS1Prime)->edges[0].visits;
    int into_opponent = 0;
    for (const auto& e : report.Node(opponent)->edges) into_opponent += e.visits;
    CHECK(into_opponent > 0);
    CHECK(into_opponent <= opening);
  }
}

TEST_CASE("ismcts budgets and shares") {
  for (const char* name : {"liars_dice(dice=1,faces=3)", "leduc_poker"}) {
    CAPTURE(name);
    auto beliefs = Beliefs(name);
    auto points = EnumerateDecisionPoints(beliefs->game(), 0);
    for (double lambda : {0.0, 0.4, 1.0}) {
      for (size_t i = 0; i < points.size(); i += points.size() / 5) {
        IsmctsDecider mcts(beliefs, LambdaSchedule::Constant(lambda), 300, 0.7);
        auto report = mcts.Search(points[i], 5);
        CHECK(report.root_visits == 300);
        double total = 0.0;
        for (double s : report.shares) total += s;
        CHECK(std::abs(total - 1.0) < 1e-12);
        CHECK(report.actions == points[i].legal_actions);
      }
    }
  }
}

TEST_CASE("ismcts prefers a dominant action") {
  auto beliefs = std::make_shared<BeliefBuilder>(std::make_shared<testing::OneShotGame>());
  IsmctsDecider mcts(beliefs, LambdaSchedule::Constant(0.0), 1000, 0.7);
  auto report = mcts.Search(DecisionPoint{0, "s0", {0, 1}}, 1);
  CHECK(report.shares[0] > 0.9);
  CHECK(report.visits[0] + report.visits[1] == 1000);
  PimcDecider pimc(beliefs, LambdaSchedule::Constant(0.0), 10);
  CHECK(pimc.Decide(DecisionPoint{0, "s0", {0, 1}}, 1) == std::vector<double>{1.0, 0.0});
}

TEST_CASE("deciders are reproducible") {
  auto beliefs = Beliefs("leduc_poker");
  auto point = EnumerateDecisionPoints(beliefs->game(), 1)[10];
  IsmctsDecider a(beliefs, LambdaSchedule::Parse("0.2,0.8"), 400, 0.7);
  IsmctsDecider b(beliefs, LambdaSchedule::Parse("0.2,0.8"), 400, 0.7);
  auto ra = a.Search(point, 42);
  auto rb = b.Search(point, 42);
  CHECK(ra.visits == rb.visits);
  CHECK(ra.ToCsv(beliefs->game()) == rb.ToCsv(beliefs->game()));
  CHECK(a.Search(point, 42).visits == ra.visits);
  PimcDecider pa(beliefs, LambdaSchedule::Constant(0.5), 100);
  PimcDecider pb(beliefs, LambdaSchedule::Constant(0.5), 100);
  CHECK(pa.Search(point, 9).scores == pb.Search(point, 9).scores);
}

TEST_CASE("schedule index follows the acting seat's decision count") {
  auto beliefs = Beliefs("liars_dice(dice=1,faces=2)");
  PimcDecider pimc(beliefs, LambdaSchedule::Parse("0,1"), 20);
  CHECK(pimc.Search(RootPoint(kS1), 1).lambda == 0.0);
  DecisionPoint second{0, "s0[0:|1:1|][0:|0:|][3:1x1|0:|0][3:2x1|0:|]", {3, 4}};
  CHECK(pimc.Search(second, 1).lambda == 1.0);
  CHECK(DecisionIndexOf(second.infostate_key) == 1);
}

TEST_CASE("deciders reject unreachable infostates") {
  auto beliefs = Beliefs("liars_dice(dice=1,faces=2)");
  DecisionPoint bad{0, "s0[0:|1:7|][0:|0:|]", {0}};
  PimcDecider pimc(beliefs, LambdaSchedule::Constant(0.5), 10);
  IsmctsDecider mcts(beliefs, LambdaSchedule::Constant(0.5), 10, 0.7);
  CHECK_THROWS_AS(pimc.Search(bad, 1), DomainError);
  CHECK_THROWS_AS(mcts.Search(bad, 1), DomainError);
  CHECK(ParseAlgorithm("pimc") == Algorithm::kPimc);
  CHECK(ParseAlgorithm("ismcts") == Algorithm::kIsmcts);
  CHECK_THROWS_AS(ParseAlgorithm("mcts"), ConfigError);
}

}  // namespace
}  // namespace beliefmix
