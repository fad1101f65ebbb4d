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

#include <random>

#include "alarmgame/error.h"
#include "alarmgame/mincover.h"
#include "brute_force.h"
#include "gtest/gtest.h"

namespace alarmgame {
namespace {

using testing::MakeInstance;

Instance PathInstance(int n, int deadline) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return MakeInstance(n, edges, std::vector<int>(n, deadline),
                      std::vector<double>(n, 1.0));
}

Instance CycleInstance(int n, int deadline) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return MakeInstance(n, edges, std::vector<int>(n, deadline),
                      std::vector<double>(n, 1.0));
}

SetCoverInstance Sets(int universe, std::vector<std::vector<int>> sets) {
  SetCoverInstance inst;
  inst.num_elements = universe;
  inst.sets = std::move(sets);
  return inst;
}

TEST(SetCoverTest, ReductionUsesCoverageSets) {
  const Instance p = PathInstance(3, 1);
  const SetCoverInstance sc = ToSetCover(p.setting, AllPairsDistances(p.setting));
  EXPECT_EQ(sc.num_elements, 3);
  EXPECT_EQ(sc.sets[1], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(sc.sets[0], (std::vector<int>{0, 1}));
}

TEST(GreedyTest, TracedExample) {
  // a = {1,2}, b = {2,3}, c = {3} over {1,2,3} (0-based here).
  const SetCoverInstance sc = Sets(3, {{0, 1}, {1, 2}, {2}});
  EXPECT_EQ(GreedyCover(sc).positions, (std::vector<int>{0, 1}));
  EXPECT_EQ(GreedyCover(Sets(1, {{0}})).positions, (std::vector<int>{0}));
  EXPECT_THROW(GreedyCover(Sets(2, {{0}})), Error);
}

TEST(LocalSearchTest, DropsRedundantAndKeepsMinimal) {
  const SetCoverInstance sc = Sets(3, {{0, 1}, {1, 2}, {1}});
  CoveringPlacement redundant{{0, 1, 2}};
  EXPECT_EQ(LocalSearchImprove(redundant, sc).positions, (std::vector<int>{0, 1}));
  CoveringPlacement minimal{{0, 1}};
  EXPECT_EQ(LocalSearchImprove(minimal, sc), minimal);
}

TEST(LocalSearchTest, MergesPairIntoOneVertex) {
  // {0} and {1} can be replaced by set 2 = {0,1}.
  const SetCoverInstance sc = Sets(3, {{0, 2}, {1}, {0, 1}, {2}});
  CoveringPlacement p{{1, 2, 3}};
  const CoveringPlacement improved = LocalSearchImprove(p, sc);
  EXPECT_EQ(improved.size(), 2u);
  EXPECT_TRUE(IsCovering(sc, improved.positions));
}

TEST(ExactCoverTest, SmallExamples) {
  const Instance p5 = PathInstance(5, 1);
  const auto d5 = AllPairsDistances(p5.setting);
  EXPECT_EQ(ExactCover(ToSetCover(p5.setting, d5), std::chrono::seconds(5))
                .placement.size(), 2u);
  // Star: centre 0 and three leaves.
  const Instance star = MakeInstance(4, {{0, 1}, {0, 2}, {0, 3}},
                                     {1, 1, 1, 1}, {1, 1, 1, 1});
  const ExactCoverResult r = ExactCover(
      ToSetCover(star.setting, AllPairsDistances(star.setting)),
      std::chrono::seconds(5));
  EXPECT_EQ(r.placement.positions, (std::vector<int>{0}));
  EXPECT_TRUE(r.optimal);
}

TEST(ExactCoverTest, MatchesBruteForceAndIsIrredundant) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 6 + trial % 8;
    const Instance inst = testing::RandomGraph(n, trial % 4, 1, 2, 0.8, rng);
    const SetCoverInstance sc =
        ToSetCover(inst.setting, AllPairsDistances(inst.setting));
    const ExactCoverResult r = ExactCover(sc, std::chrono::seconds(10));
    ASSERT_TRUE(r.optimal);
    ASSERT_TRUE(IsCovering(sc, r.placement.positions));
    EXPECT_EQ(static_cast<int>(r.placement.size()),
              testing::BruteForceMinCoverSize(inst.setting));
    for (std::size_t drop = 0; drop < r.placement.size(); ++drop) {
      std::vector<int> sub = r.placement.positions;
      sub.erase(sub.begin() + drop);
      EXPECT_FALSE(IsCovering(sc, sub));
    }
  }
}

TEST(GreedyTest, WithinHarmonicBoundAndLocalSearchNeverWorse) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = testing::RandomGraph(12, 2, 1, 2, 1.0, rng);
    const SetCoverInstance sc =
        ToSetCover(inst.setting, AllPairsDistances(inst.setting));
    const CoveringPlacement g = GreedyCover(sc);
    const CoveringPlacement ls = LocalSearchImprove(g, sc);
    const int opt = testing::BruteForceMinCoverSize(inst.setting);
    EXPECT_TRUE(IsCovering(sc, g.positions));
    EXPECT_TRUE(IsCovering(sc, ls.positions));
    EXPECT_LE(ls.size(), g.size());
    EXPECT_LE(g.size(), testing::Harmonic(inst.setting.num_targets()) * opt);
  }
}

TEST(TreeCoverTest, HandTracedPaths) {
  const Instance p3 = PathInstance(3, 1);
  EXPECT_EQ(TreeMinCover(p3.setting, 0).positions, (std::vector<int>{1}));
  const Instance p5 = PathInstance(5, 1);
  // Leaf v4 forces v3; v1 postpones to the root, which must host a resource.
  EXPECT_EQ(TreeMinCover(p5.setting, 0).positions, (std::vector<int>{0, 3}));
  const Instance single = MakeInstance(1, {}, {1}, {1.0});
  EXPECT_EQ(TreeMinCover(single.setting, 0).positions, (std::vector<int>{0}));
  EXPECT_THROW(TreeMinCover(CycleInstance(4, 1).setting, 0), Error);
}

TEST(TreeCoverTest, RootIndependentAndOptimal) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 12;
    const Instance inst = testing::RandomTree(n, 1, 3, 0.75, rng);
    const SetCoverInstance sc =
        ToSetCover(inst.setting, AllPairsDistances(inst.setting));
    const int opt = testing::BruteForceMinCoverSize(inst.setting);
    for (int root = 0; root < n; ++root) {
      const CoveringPlacement p = TreeMinCover(inst.setting, root);
      ASSERT_TRUE(IsCovering(sc, p.positions)) << "trial " << trial;
      ASSERT_EQ(static_cast<int>(p.size()), opt) << "trial " << trial;
    }
  }
}

TEST(CycleCoverTest, Examples) {
  EXPECT_EQ(CycleMinCover(CycleInstance(3, 1).setting).size(), 1u);
  EXPECT_EQ(CycleMinCover(CycleInstance(6, 1).setting).size(), 2u);
  EXPECT_EQ(CycleMinCover(CycleInstance(4, 2).setting).size(), 1u);
  EXPECT_THROW(CycleMinCover(PathInstance(4, 1).setting), Error);
}

TEST(CycleCoverTest, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = testing::RandomCycle(3 + trial % 12, 1, 3, 0.8, rng);
    const CoveringPlacement p = CycleMinCover(inst.setting);
    EXPECT_TRUE(IsCovering(ToSetCover(inst.setting, AllPairsDistances(inst.setting)),
                           p.positions));
    EXPECT_EQ(static_cast<int>(p.size()),
              testing::BruteForceMinCoverSize(inst.setting));
  }
}

TEST(OverlapTest, Examples) {
  // Path of 4 with d=1: v1 covers {0,1,2}, v2 covers {1,2,3}.
  const Instance p4 = PathInstance(4, 1);
  const auto d = AllPairsDistances(p4.setting);
  const OverlapMetrics m = ComputeOverlap({{1, 2}}, p4.setting, d);
  EXPECT_EQ(m.eta, 2);
  EXPECT_DOUBLE_EQ(m.tau, 0.5);
  EXPECT_DOUBLE_EQ(m.tau_hat, 1.0);
  // Disjoint partition: v0 covers {0,1}, v3 covers {2,3}.
  const OverlapMetrics disjoint = ComputeOverlap({{0, 3}}, p4.setting, d);
  EXPECT_EQ(disjoint.eta, 0);
  EXPECT_DOUBLE_EQ(disjoint.tau_hat, 0.0);
  const Instance p3 = PathInstance(3, 1);
  const OverlapMetrics single =
      ComputeOverlap({{1}}, p3.setting, AllPairsDistances(p3.setting));
  EXPECT_EQ(single.eta, 0);
  EXPECT_DOUBLE_EQ(single.tau_hat, 0.0);
}

TEST(MinCoverTest, AutoDispatch) {
  const Instance p5 = PathInstance(5, 1);
  const auto d5 = AllPairsDistances(p5.setting);
  const MinCoverResult tree = MinCover(p5.setting, d5, CoverMethod::kAuto,
                                       std::chrono::seconds(5));
  EXPECT_EQ(tree.method, CoverMethod::kTree);
  EXPECT_TRUE(tree.optimal);
  const Instance c6 = CycleInstance(6, 1);
  EXPECT_EQ(MinCover(c6.setting, AllPairsDistances(c6.setting), CoverMethod::kAuto,
                     std::chrono::seconds(5)).method,
            CoverMethod::kCycle);
  EXPECT_EQ(ParseCoverMethod("greedy+ls"), CoverMethod::kGreedyLocalSearch);
  EXPECT_EQ(CoverMethodName(CoverMethod::kExact), "exact");
  EXPECT_THROW(ParseCoverMethod("ilp"), Error);
}

}  // namespace
}  // namespace alarmgame
