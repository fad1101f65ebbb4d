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

// Test-only reference implementations. Each one solves a problem by plain
// enumeration, without sharing code paths with the library routine it checks.

#ifndef ALARMGAME_TESTS_SUPPORT_BRUTE_FORCE_H_
#define ALARMGAME_TESTS_SUPPORT_BRUTE_FORCE_H_

#include <random>
#include <utility>
#include <vector>

#include "alarmgame/lp.h"
#include "alarmgame/mincover.h"
#include "alarmgame/model.h"
#include "alarmgame/oracles.h"

namespace alarmgame::testing {

// Builds an instance on vertices "v0".."v<n-1>". deadline[v] == 0 makes v a
// non-target. One signal covering every target.
Instance MakeInstance(int n, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<int>& deadline,
                      const std::vector<double>& values);

// Random deadlines in [dmin, dmax]; every vertex is a target with
// probability `target_fraction` (at least one target is kept).
Instance RandomTree(int n, int dmin, int dmax, double target_fraction,
                    std::mt19937_64& rng);
Instance RandomCycle(int n, int dmin, int dmax, double target_fraction,
                     std::mt19937_64& rng);
// Random spanning tree plus `extra_edges` distinct random edges.
Instance RandomGraph(int n, int extra_edges, int dmin, int dmax,
                     double target_fraction, std::mt19937_64& rng);

// Shortest distances by repeated edge relaxation until nothing changes.
std::vector<int> RelaxationDistances(const PatrollingSetting& setting,
                                     int source);

// Targets within their deadline of `v`, from relaxation distances.
std::vector<int> BruteCoverageSet(const PatrollingSetting& setting, int v);

// Minimum cover size by trying every subset in order of size.
int BruteForceMinCoverSize(const PatrollingSetting& setting);

// Every covering placement of exactly `size` vertices, lexicographic.
std::vector<std::vector<int>> AllCoveringPlacements(
    const PatrollingSetting& setting, int size);

// Game value by Shapley-Snow enumeration of square submatrices: for each
// nonsingular k x k block the equalizing strategies are computed in closed
// form and kept when they are optimal in the whole game.
double SupportEnumerationValue(const MatrixGame& game);

// Maximal covering route target sets from `start` over `support`, found by
// trying every ordering of every subset. Sorted target sets, sorted.
std::vector<std::vector<int>> PermutationRouteSets(
    const PatrollingSetting& setting, int start,
    const std::vector<int>& support);

// Local targets covered by a joint choice, taken from the route visits.
std::vector<bool> CoveredTargets(const ResponseGame& game,
                                 const JointChoice& choice);

// max over all joint choices of 1 - sum_t a(t) pi(t) [t uncovered].
double BruteForceBestResponse(const ResponseGame& game,
                              const std::vector<double>& attacker);

// Value of the game whose defender actions are all joint choices.
double FullJointValue(const ResponseGame& game, int* num_joint = nullptr);

// Team maxmin for two resources: the smaller route set's strategy is
// scanned over the simplex grid of the given step, and the other resource's
// best reply is an exact matrix-game solve for each grid point.
double GridTeamMaxmin(const ResponseGame& game, double step);

double Pearson(const std::vector<double>& x, const std::vector<double>& y);

// sum_{k=1..n} 1/k
double Harmonic(int n);

}  // namespace alarmgame::testing

#endif  // ALARMGAME_TESTS_SUPPORT_BRUTE_FORCE_H_
