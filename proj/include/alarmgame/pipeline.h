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

#ifndef ALARMGAME_PIPELINE_H_
#define ALARMGAME_PIPELINE_H_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "alarmgame/mincover.h"
#include "alarmgame/model.h"
#include "alarmgame/oracles.h"
#include "alarmgame/routes.h"

namespace alarmgame {

// Route sets keyed by (start vertex, signal); safe to share between workers.
class RouteCache {
 public:
  RouteCache(const PatrollingSetting& setting, const DistanceMatrix& dist,
             const AlarmSystem& alarm, RouteOptions options)
      : setting_(setting), dist_(dist), alarm_(alarm), options_(options) {}

  RouteSet Get(int vertex, int signal);

 private:
  const PatrollingSetting& setting_;
  const DistanceMatrix& dist_;
  const AlarmSystem& alarm_;
  RouteOptions options_;
  std::mutex mu_;
  std::map<std::pair<int, int>, RouteSet> cache_;
};

struct OracleConfig {
  bool fc = true;
  bool pc = true;
  bool nc = true;
  FcMode fc_mode = FcMode::kExact;
  int pc_restarts = 0;
  uint64_t seed = 0;
  // Each placed position hosts this many resources sharing its route set.
  int resources_per_position = 1;
  std::chrono::steady_clock::time_point deadline =
      std::chrono::steady_clock::time_point::max();
};

struct SignalSolution {
  int signal = 0;
  ResponseGame game;
  OracleResult result;
};

// One oracle's answer for a placement, aggregated over signals.
struct SchemeEvaluation {
  Scheme scheme = Scheme::kNone;
  double value = 0.0;
  bool optimal = true;
  double wall_ms = 0.0;
  std::vector<SignalSolution> signals;
};

// 1 - max_t pi(t) * sum_s p(s|t) * (uncovered probability of t under s):
// the attacker commits to a target before the signal is drawn.
double AggregateValue(const Instance& instance,
                      const std::vector<SignalSolution>& signals);

// Runs the selected oracles on every signal for a placement. NC always runs
// first because it seeds PC and the FC row generation; it is returned only
// when selected.
std::vector<SchemeEvaluation> EvaluatePlacement(
    const Instance& instance, const DistanceMatrix& dist,
    const CoveringPlacement& placement, const OracleConfig& config,
    RouteCache& routes);

// Local-search enumeration of distinct covering placements of a fixed size.
// Moves swap one placed vertex for an unplaced one while keeping coverage;
// when a placement's neighbourhood is used up the search restarts from the
// best-valued visited placement that still has unexplored neighbours, and
// finally scans the remaining combinations so exhaustion is exact.
class PlacementEnumerator {
 public:
  PlacementEnumerator(const SetCoverInstance& instance, int m,
                      CoveringPlacement initial);

  // Next unvisited covering placement, or nullopt when none remains (or the
  // deadline passes, in which case timed_out() is set).
  std::optional<CoveringPlacement> Next(
      std::chrono::steady_clock::time_point deadline =
          std::chrono::steady_clock::time_point::max());

  // Feedback used to pick restart points.
  void Report(const CoveringPlacement& placement, double value);

  bool timed_out() const { return timed_out_; }
  std::size_t visited() const { return visited_.size(); }

 private:
  struct Node {
    std::vector<int> positions;
    double value = 0.0;
    int next_out = 0;  // neighbour cursor: position slot
    int next_in = 0;   // neighbour cursor: candidate vertex
    bool exhausted = false;
  };

  std::optional<std::vector<int>> NextNeighbour(Node& node);
  std::optional<std::vector<int>> NextCombination(
      std::chrono::steady_clock::time_point deadline);
  bool Accept(const std::vector<int>& positions);

  const SetCoverInstance& instance_;
  int m_;
  std::optional<CoveringPlacement> initial_;
  std::vector<Node> nodes_;
  std::map<std::vector<int>, int> index_;
  std::set<std::vector<int>> visited_;
  int current_ = -1;
  std::vector<int> combination_;
  bool combinations_started_ = false;
  bool combinations_done_ = false;
  bool timed_out_ = false;
};

struct ResolutionConfig {
  std::chrono::milliseconds time_budget{std::chrono::minutes(60)};
  OracleConfig oracles;
  CoverMethod cover_method = CoverMethod::kAuto;
  RouteOptions routes;
  uint64_t seed = 0;
  int workers = 1;
  // Stop after this many placements (0 = until exhaustion or budget).
  int max_placements = 0;
  const std::atomic<bool>* cancel = nullptr;
};

struct TraceEntry {
  double elapsed_ms = 0.0;
  int placement = 0;
  Scheme oracle = Scheme::kNone;
  double value = 0.0;      // this placement's value
  double incumbent = 0.0;  // best value so far for this oracle
};

struct PlacementRecord {
  int id = 0;
  CoveringPlacement placement;
  OverlapMetrics overlap;
  std::map<Scheme, double> values;
  std::map<Scheme, double> wall_ms;
};

struct Incumbent {
  double value = 0.0;
  int placement = -1;
};

struct ResolutionReport {
  int m = 0;                 // resources, positions * resources_per_position
  int positions = 0;         // size of each covering placement
  MinCoverResult cover;
  std::map<Scheme, Incumbent> best;
  std::vector<TraceEntry> trace;
  std::vector<PlacementRecord> placements;
  int placements_evaluated = 0;
  bool exhausted = false;
  bool timed_out = false;
  double mincover_ms = 0.0;
};

// Minimum cover, then anytime placement enumeration and oracle evaluation
// until the budget, the placement cap or exhaustion. Throws BudgetTooSmall if
// the budget runs out before a cover is found.
ResolutionReport Resolve(const Instance& instance,
                         const ResolutionConfig& config);

struct GeneratorParams {
  int n_targets = 20;
  double mean_degree = 3.0;
  int deadline = 0;  // 0: size-dependent schedule
  uint64_t seed = 0;
};

// Deadline schedule: 3 up to 40 targets, 4 up to 80, 5 beyond.
int ScheduledDeadline(int n_targets);

// Random spanning tree plus random extra edges up to the mean degree; every
// vertex is a target with value uniform in (0, 1]; one signal covers all.
Instance GenerateInstance(const GeneratorParams& params);

}  // namespace alarmgame

#endif  // ALARMGAME_PIPELINE_H_
