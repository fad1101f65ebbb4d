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

#ifndef ALARMGAME_MINCOVER_H_
#define ALARMGAME_MINCOVER_H_

#include <chrono>
#include <string_view>
#include <vector>

#include "alarmgame/model.h"

namespace alarmgame {

// SET-COVER view of the placement problem. Candidate `c` is vertex `c`; its
// set lists the targets it covers (ascending). Elements are target indices.
struct SetCoverInstance {
  int num_elements = 0;
  std::vector<std::vector<int>> sets;

  int num_candidates() const { return static_cast<int>(sets.size()); }
};

// Distinct vertex indices, kept in ascending order.
struct CoveringPlacement {
  std::vector<int> positions;

  int size() const { return static_cast<int>(positions.size()); }
  bool operator==(const CoveringPlacement&) const = default;
};

// Coverage state of a subtree as seen from its parent. Exactly one of the
// two fields is finite, except for a subtree that holds no target and no
// resource, which reports (kInfinity, kInfinity).
struct CoverageProfile {
  int cov = kInfinity;    // distance from the parent to the closest resource
  int uncov = kInfinity;  // a resource is needed within this distance
};

struct ExactCoverResult {
  CoveringPlacement placement;
  bool optimal = true;
  long long nodes = 0;
};

enum class CoverMethod { kExact, kGreedy, kGreedyLocalSearch, kTree, kCycle, kAuto };

std::string_view CoverMethodName(CoverMethod method);
// Accepts exact, greedy, greedy+ls, tree, cycle, auto. Throws
// InvalidArgument.
CoverMethod ParseCoverMethod(std::string_view name);

struct MinCoverResult {
  CoveringPlacement placement;
  CoverMethod method = CoverMethod::kExact;  // method that produced the answer
  bool optimal = false;
};

struct OverlapMetrics {
  long long eta = 0;
  double tau = 0.0;
  double tau_hat = 0.0;
};

SetCoverInstance ToSetCover(const PatrollingSetting& setting,
                            const DistanceMatrix& dist);

bool IsCovering(const SetCoverInstance& instance,
                const std::vector<int>& positions);

// Chvatal's greedy rule: repeatedly take the candidate covering the most
// uncovered elements, lowest index on ties. Throws Infeasible when the union
// of all sets misses an element.
CoveringPlacement GreedyCover(const SetCoverInstance& instance);

// Drops redundant positions and merges pairs of positions into a single
// vertex covering their exclusive contribution, until neither move applies.
CoveringPlacement LocalSearchImprove(CoveringPlacement placement,
                                     const SetCoverInstance& instance);

// Minimum-cardinality cover by depth-first branch-and-bound. On timeout the
// incumbent is returned with `optimal == false`.
ExactCoverResult ExactCover(const SetCoverInstance& instance,
                            std::chrono::milliseconds budget);

bool IsTree(const PatrollingSetting& setting);
bool IsCycle(const PatrollingSetting& setting);

// Bottom-up coverage-profile recursion on a tree. Throws NotATree.
CoveringPlacement TreeMinCover(const PatrollingSetting& setting, int root);

// Same recursion on a tree given by adjacency lists and per-vertex deadlines
// (kInfinity marks a non-target). Exposed for the cycle solver.
CoveringPlacement TreeMinCover(const std::vector<std::vector<int>>& adjacency,
                               const std::vector<int>& deadline, int root);

// Best tree solution over the n paths obtained by deleting one cycle edge.
// Throws NotACycle.
CoveringPlacement CycleMinCover(const PatrollingSetting& setting);

// eta = sum |T(p_i)| - |T|, tau = eta / |T|,
// tau_hat = eta / ((|T| - m)(m - 1)), zero when the denominator vanishes.
OverlapMetrics ComputeOverlap(const CoveringPlacement& placement,
                              const PatrollingSetting& setting,
                              const DistanceMatrix& dist);

// Dispatches on `method`. kAuto uses the tree or cycle algorithm when the
// topology allows, otherwise exact branch-and-bound within `budget`, and
// falls back to greedy + local search if the search times out.
MinCoverResult MinCover(const PatrollingSetting& setting,
                        const DistanceMatrix& dist, CoverMethod method,
                        std::chrono::milliseconds budget);

}  // namespace alarmgame

#endif  // ALARMGAME_MINCOVER_H_
