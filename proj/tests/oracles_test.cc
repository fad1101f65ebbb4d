// Copyright 2026 The alarmgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <optional>
#include <random>

#include "alarmgame/oracles.h"
#include "alarmgame/routes.h"
#include "brute_force.h"
#include "gtest/gtest.h"

namespace alarmgame {
namespace {

using testing::MakeInstance;

ResponseGame GameFrom(const Instance& inst, const std::vector<int>& starts) {
  const auto dist = AllPairsDistances(inst.setting);
  const std::vector<int> support = inst.alarm.SignalSupport(0);
  std::vector<RouteSet> sets;
  for (int v : starts) sets.push_back(CoveringRoutes(inst.setting, dist, v, support));
  return MakeResponseGame(inst.setting, dist, starts, support, std::move(sets));
}

// A game with hand-written route sets over a path whose targets are all
// vertices; `routes[i]` lists the covered target sets of resource i.
ResponseGame ManualGame(int n, const std::vector<double>& values,
                        const std::vector<std::vector<std::vector<int>>>& routes) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  const Instance inst = MakeInstance(n, edges, std::vector<int>(n, n), values);
  const auto dist = AllPairsDistances(inst.setting);
  std::vector<int> starts;
  std::vector<RouteSet> sets;
  for (const auto& resource : routes) {
    starts.push_back(0);
    RouteSet rs;
    for (const auto& visits : resource) {
      CoveringRoute r{0, visits, {}};
      int at = 0, time = 0;
      for (int t : visits) {
        time += dist(at, t);
        r.arrivals.push_back(time);
        at = t;
      }
      rs.routes.push_back(r);
    }
    sets.push_back(rs);
  }
  std::vector<int> support(n);
  for (int t = 0; t < n; ++t) support[t] = t;
  return MakeResponseGame(inst.setting, dist, starts, support, std::move(sets));
}

// A random response game with m resources and route sets of bounded size.
std::optional<ResponseGame> RandomGame(int m, int max_routes, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    const Instance inst = testing::RandomGraph(7, static_cast<int>(rng() % 4), 1, 3, 1.0, rng);
    std::vector<int> starts;
    for (int i = 0; i < m; ++i) starts.push_back(static_cast<int>(rng() % 7));
    ResponseGame g = GameFrom(inst, starts);
    bool ok = true;
    for (int i = 0; i < m; ++i) ok = ok && g.num_routes(i) <= max_routes && g.num_routes(i) >= 2;
    if (ok) return g;
  }
  return std::nullopt;
}

TEST(EvaluateTest, Formulas) {
  // One target, two resources each covering it with probability 0.5.
  const ResponseGame g = ManualGame(1, {1.0}, {{{0}, {}}, {{0}, {}}});
  const std::vector<MixedStrategy> half{{0.5, 0.5}, {0.5, 0.5}};
  EXPECT_NEAR(EvaluateIndependent(g, half), 0.75, 1e-12);
  const std::vector<JointChoice> full{{0, 0}};
  EXPECT_NEAR(EvaluateJoint(g, full, std::vector<double>{1.0}), 1.0, 1e-12);
  const ResponseGame none = ManualGame(2, {0.8, 0.3}, {{{}}});
  EXPECT_NEAR(EvaluateIndependent(none, std::vector<MixedStrategy>{{1.0}}), 0.2, 1e-12);
}

TEST(EvaluateTest, MatchesAttackerEnumeration) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = RandomGame(2, 6, rng);
    ASSERT_TRUE(g.has_value());
    std::vector<MixedStrategy> profile;
    for (int i = 0; i < 2; ++i) {
      MixedStrategy s(g->num_routes(i));
      for (double& x : s) x = std::uniform_real_distribution<double>(0, 1)(rng);
      double sum = 0;
      for (double x : s) sum += x;
      for (double& x : s) x /= sum;
      profile.push_back(s);
    }
    double worst = 1.0;
    for (int t = 0; t < g->num_targets(); ++t) {
      double miss = 1.0;
      for (int i = 0; i < 2; ++i) {
        double cover = 0.0;
        for (int r = 0; r < g->num_routes(i); ++r) {
          const auto& visits = g->route_sets[i].routes[r].visits;
          if (std::find(visits.begin(), visits.end(), g->targets[t]) != visits.end()) {
            cover += profile[i][r];
          }
        }
        miss *= 1.0 - cover;
      }
      worst = std::min(worst, 1.0 - g->values[t] * miss);
    }
    EXPECT_NEAR(EvaluateIndependent(*g, profile), worst, 1e-12);
  }
}

TEST(NcTest, SingleResourceEqualsZeroSum) {
  const ResponseGame g = ManualGame(2, {1.0, 1.0}, {{{0}, {1}}});
  const OracleResult nc = SolveNc(g);
  EXPECT_NEAR(nc.value, 0.5, 1e-9);
  const std::vector<JointChoice> rows{{0}, {1}};
  EXPECT_NEAR(nc.value, SolveZeroSum(JointMatrix(g, rows)).value, 1e-9);
}

TEST(NcTest, DisjointResourcesGiveMinimumOfGames) {
  // a(0) guards t0(1), t1(2); b(4) guards t2(5), t3(6); x(3) links a and b.
  // With unit deadlines neither resource reaches the other's targets.
  const Instance inst = MakeInstance(
      7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}},
      {0, 1, 1, 0, 0, 1, 1}, {1.0, 0.9, 0.6, 1.0, 1.0, 0.7, 0.5});
  const ResponseGame g = GameFrom(inst, {0, 4});
  ASSERT_EQ(g.num_routes(0), 2);
  ASSERT_EQ(g.num_routes(1), 2);
  const OracleResult nc = SolveNc(g);
  // Each resource plays a covering game on two targets with values pi_a,
  // pi_b: maxmin = 1 - pi_a pi_b / (pi_a + pi_b).
  const double v0 = 1.0 - 0.9 * 0.6 / 1.5;
  const double v1 = 1.0 - 0.7 * 0.5 / 1.2;
  EXPECT_NEAR(nc.value, std::min(v0, v1), 1e-9);
  PcOptions options;
  options.initial = nc.resource_strategies;
  EXPECT_NEAR(SolvePc(g, options).value, nc.value, 1e-9);
}

TEST(FcTest, FullProtectionAndSingleResource) {
  const ResponseGame g = ManualGame(2, {0.7, 0.4}, {{{0}, {}}, {{1}, {}}});
  const OracleResult fc = SolveFc(g);
  EXPECT_NEAR(fc.value, 1.0, 1e-9);
  const ResponseGame one = ManualGame(3, {1.0, 0.5, 0.8}, {{{0}, {1, 2}, {2}}});
  EXPECT_NEAR(SolveFc(one).value,
              SolveZeroSum(JointMatrix(one, std::vector<JointChoice>{{0}, {1}, {2}})).value,
              1e-9);
}

TEST(FcTest, MatchesFullJointEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = RandomGame(2, 6, rng);
    ASSERT_TRUE(g.has_value());
    const OracleResult nc = SolveNc(*g);
    FcOptions options;
    options.initial = InitialJointRoutes(nc);
    const OracleResult fc = SolveFc(*g, options);
    EXPECT_NEAR(fc.value, testing::FullJointValue(*g), 1e-6);
    for (std::size_t k = 1; k < fc.diagnostics.value_trace.size(); ++k) {
      EXPECT_GE(fc.diagnostics.value_trace[k], fc.diagnostics.value_trace[k - 1] - 1e-9);
    }
    const OracleResult pc = SolvePc(*g, {.initial = nc.resource_strategies});
    EXPECT_GE(fc.value, pc.value - 1e-6);
    EXPECT_GE(pc.value, nc.value - 1e-6);
  }
}

TEST(FcTest, HeuristicModeIsBoundedByExact) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    auto g = RandomGame(2, 6, rng);
    ASSERT_TRUE(g.has_value());
    const double exact = SolveFc(*g).value;
    FcOptions options;
    options.mode = FcMode::kHeuristic;
    options.seed = trial;
    const OracleResult h = SolveFc(*g, options);
    EXPECT_LE(h.value, exact + 1e-6);
    EXPECT_GE(h.value, 1.0 - *std::max_element(g->values.begin(), g->values.end()) - 1e-9);
  }
}

TEST(BestResponseTest, Examples) {
  const ResponseGame g = ManualGame(2, {1.0, 1.0}, {{{0}, {}}, {{1}, {}}});
  const auto far = std::chrono::steady_clock::time_point::max();
  const BestResponseResult pure =
      BestResponse(g, std::vector<double>{1.0, 0.0}, FcMode::kExact, far, nullptr);
  EXPECT_NEAR(pure.objective, 1.0, 1e-12);
  EXPECT_EQ(pure.choice[0], 0);
  const BestResponseResult both =
      BestResponse(g, std::vector<double>{0.5, 0.5}, FcMode::kExact, far, nullptr);
  EXPECT_NEAR(both.objective, 1.0, 1e-12);
  EXPECT_EQ(both.choice, (JointChoice{0, 0}));
}

TEST(BestResponseTest, MatchesBruteForce) {
  std::mt19937_64 rng(47);
  const auto far = std::chrono::steady_clock::time_point::max();
  for (int trial = 0; trial < 30; ++trial) {
    auto g = RandomGame(2 + trial % 2, 5, rng);
    ASSERT_TRUE(g.has_value());
    std::vector<double> attacker(g->num_targets());
    double sum = 0.0;
    for (double& a : attacker) sum += a = std::uniform_real_distribution<double>(0, 1)(rng);
    for (double& a : attacker) a /= sum;
    const BestResponseResult br = BestResponse(*g, attacker, FcMode::kExact, far, nullptr);
    EXPECT_TRUE(br.optimal);
    EXPECT_NEAR(br.objective, testing::BruteForceBestResponse(*g, attacker), 1e-12);
    EXPECT_NEAR(br.objective, BestResponseObjective(*g, attacker, br.choice), 1e-15);
  }
}

TEST(PcTest, SingleResourceAndMonotoneTrace) {
  const ResponseGame one = ManualGame(3, {1.0, 0.5, 0.8}, {{{0}, {1, 2}, {2}}});
  const OracleResult pc = SolvePc(one);
  EXPECT_NEAR(pc.value, SolveNc(one).value, 1e-7);

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = RandomGame(3, 5, rng);
    ASSERT_TRUE(g.has_value());
    const OracleResult r = SolvePc(*g, {.restarts = 2, .seed = 9});
    const auto& trace = r.diagnostics.value_trace;
    for (std::size_t k = 1; k < trace.size(); ++k) EXPECT_GE(trace[k], trace[k - 1]);
    EXPECT_NEAR(r.value, EvaluateIndependent(*g, r.resource_strategies), 1e-12);
  }
}

TEST(PcTest, SingleCommonTargetMatchesGrid) {
  // a(1) and b(2) both neighbour t0(0); t1(3) hangs off a, t2(4) off b.
  // Unit deadlines give route sets {t0}, {t1} and {t0}, {t2}.
  const Instance inst = MakeInstance(5, {{1, 0}, {2, 0}, {1, 3}, {2, 4}},
                                     {1, 0, 0, 1, 1}, {0.9, 1.0, 1.0, 0.6, 0.5});
  const ResponseGame g = GameFrom(inst, {1, 2});
  ASSERT_EQ(g.num_routes(0), 2);
  ASSERT_EQ(g.num_routes(1), 2);
  PcOptions options;
  options.initial = SolveNc(g).resource_strategies;
  const double pc = SolvePc(g, options).value;
  EXPECT_NEAR(pc, testing::GridTeamMaxmin(g, 1e-3), 1e-3);
  // Closed form: 0.9 (1 - c/0.6) (1 - c/0.5) = c with value 1 - c.
  EXPECT_NEAR(pc, 0.7455141541287313, 1e-6);
}

TEST(PcTest, CanStopBelowTeamMaxmin) {
  // Identical route sets {t0}, {t1}: splitting the targets protects both,
  // but from the symmetric NC profile no single resource can improve alone.
  const ResponseGame g = ManualGame(2, {0.9, 0.6}, {{{0}, {1}}, {{0}, {1}}});
  const OracleResult nc = SolveNc(g);
  PcOptions options;
  options.initial = nc.resource_strategies;
  const OracleResult pc = SolvePc(g, options);
  EXPECT_NEAR(pc.value, 0.82, 1e-9);
  EXPECT_NEAR(testing::GridTeamMaxmin(g, 1e-3), 1.0, 1e-12);
  EXPECT_NEAR(SolveFc(g).value, 1.0, 1e-12);
}

TEST(InitialJointRoutesTest, CyclesSupports) {
  OracleResult nc;
  nc.resource_strategies = {{0.2, 0.8, 0.0}, {1.0}};
  const auto rows = InitialJointRoutes(nc);
  EXPECT_EQ(rows, (std::vector<JointChoice>{{1, 0}, {0, 0}}));
}

TEST(SchemeTest, Names) {
  EXPECT_EQ(ParseScheme("FC"), Scheme::kFull);
  EXPECT_EQ(ParseScheme("pc"), Scheme::kPartial);
  EXPECT_EQ(SchemeName(Scheme::kNone), "nc");
  EXPECT_THROW(ParseScheme("xc"), std::exception);
}

}  // namespace
}  // namespace alarmgame
