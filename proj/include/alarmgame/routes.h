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

#ifndef ALARMGAME_ROUTES_H_
#define ALARMGAME_ROUTES_H_

#include <cstddef>
#include <span>
#include <vector>

#include "alarmgame/model.h"

namespace alarmgame {

// Ordered target visits from `start`. arrivals[0] = dist(start, visits[0])
// and each later arrival adds the shortest distance from the previous visit;
// every arrival meets the visited target's deadline. An empty `visits` is the
// stay-put route that protects nothing.
struct CoveringRoute {
  int start = 0;
  std::vector<int> visits;    // target indices
  std::vector<int> arrivals;

  bool empty() const { return visits.empty(); }
  bool operator==(const CoveringRoute&) const = default;
};

// One covering route per resource, index-aligned with the placement.
struct JointRoute {
  std::vector<CoveringRoute> per_resource;
};

struct RouteOptions {
  // Above this many reachable support targets the search keeps only the
  // `beam_width` earliest states per layer and flags the set incomplete.
  int exact_limit = 20;
  std::size_t beam_width = 100000;
};

struct RouteSet {
  std::vector<CoveringRoute> routes;
  bool complete = true;
};

// All maximal covering routes from `start` over the `support` targets:
// dynamic program over (visited set, last target) states keeping the earliest
// completion time, followed by removal of routes whose visited set is a
// strict subset of another's. Returns the single empty route when no support
// target is reachable in time. Output order is deterministic.
RouteSet CoveringRoutes(const PatrollingSetting& setting,
                        const DistanceMatrix& dist, int start,
                        std::span<const int> support,
                        const RouteOptions& options = {});

bool Covers(const CoveringRoute& route, int target);
bool JointCovers(const JointRoute& route, int target);

// Structural check of the CoveringRoute invariants against `support`.
bool IsValidRoute(const CoveringRoute& route, const PatrollingSetting& setting,
                  const DistanceMatrix& dist, std::span<const int> support);

}  // namespace alarmgame

#endif  // ALARMGAME_ROUTES_H_
