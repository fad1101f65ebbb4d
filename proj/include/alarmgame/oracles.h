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

#ifndef ALARMGAME_ORACLES_H_
#define ALARMGAME_ORACLES_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "alarmgame/bits.h"
#include "alarmgame/lp.h"
#include "alarmgame/model.h"
#include "alarmgame/routes.h"

namespace alarmgame {

// Coordination scheme of a signal response oracle.
enum class Scheme { kFull, kPartial, kNone };

std::string_view SchemeName(Scheme scheme);  // "fc", "pc", "nc"
Scheme ParseScheme(std::string_view name);   // throws InvalidArgument

// The signal response game played from a fixed placement under one signal.
// Targets are the signal support, re-indexed locally; each resource owns a
// route set whose coverage is stored as bitsets over local targets.
struct ResponseGame {
  std::vector<int> targets;          // local -> global target index
  std::vector<double> values;        // pi per local target
  std::vector<int> starts;           // start vertex per resource
  std::vector<RouteSet> route_sets;  // per resource
  std::vector<std::vector<Bits>> coverage;  // [resource][route]
  std::vector<Bits> reachable;  // [resource] local targets within deadline

  int num_resources() const { return static_cast<int>(route_sets.size()); }
  int num_targets() const { return static_cast<int>(targets.size()); }
  int num_routes(int i) const {
    return static_cast<int>(coverage[i].size());
  }
};

ResponseGame MakeResponseGame(const PatrollingSetting& setting,
                              const DistanceMatrix& dist,
                              std::span<const int> starts,
                              std::span<const int> support,
                              std::vector<RouteSet> route_sets);

// A joint covering route as one route index per resource.
using JointChoice = std::vector<int>;

struct OracleDiagnostics {
  int iterations = 0;
  int routes_generated = 0;  // FC: joint routes in the restricted game
  int lps_solved = 0;
  double wall_ms = 0.0;
  bool optimal = true;
  std::vector<double> value_trace;     // defender value per iteration
  std::vector<double> attacker_trace;  // FC: 1 - restricted value
  std::vector<double> fractional_trace;  // FC heuristic: LP relaxation bound
};

struct OracleResult {
  Scheme scheme = Scheme::kNone;
  double value = 0.0;
  // PC and NC: one strategy per resource over its route set.
  std::vector<MixedStrategy> resource_strategies;
  // FC: joint routes and the probability of each.
  std::vector<JointChoice> joint_routes;
  MixedStrategy joint_strategy;
  OracleDiagnostics diagnostics;
};

// Per local target, the probability it is left unprotected.
std::vector<double> UncoveredIndependent(
    const ResponseGame& game, std::span<const MixedStrategy> strategies);
std::vector<double> UncoveredJoint(const ResponseGame& game,
                                   std::span<const JointChoice> joint_routes,
                                   std::span<const double> probs);

// 1 - max_t pi(t) * prod_i (1 - coverage of t by resource i).
double EvaluateIndependent(const ResponseGame& game,
                           std::span<const MixedStrategy> strategies);
// 1 - max_t pi(t) * (1 - sum_r sigma(r) I(r, t)).
double EvaluateJoint(const ResponseGame& game,
                     std::span<const JointChoice> joint_routes,
                     std::span<const double> probs);
double EvaluateResult(const ResponseGame& game, const OracleResult& result);
std::vector<double> UncoveredResult(const ResponseGame& game,
                                    const OracleResult& result);

// Defender utility matrix of a set of joint routes against the game targets.
MatrixGame JointMatrix(const ResponseGame& game,
                       std::span<const JointChoice> joint_routes);

// No coordination: each resource plays the maxmin strategy of its own game
// restricted to the targets it can reach.
OracleResult SolveNc(const ResponseGame& game);

enum class FcMode { kExact, kHeuristic };

std::string_view FcModeName(FcMode mode);

struct BestResponseResult {
  JointChoice choice;
  double objective = 0.0;       // 1 - sum_t w(t) (1 - y_t) of `choice`
  double relaxation_bound = 0.0;  // heuristic mode: LP relaxation optimum
  bool pure = true;               // heuristic mode: LP solution integral
  bool optimal = true;            // exact mode: search finished
};

// Best joint route against an attacker mixed strategy over local targets.
// Exact mode runs branch-and-bound over per-resource route choices; the
// heuristic relaxes route selection to [0,1] and samples one route per
// resource from the fractional solution using `rng`.
BestResponseResult BestResponse(
    const ResponseGame& game, std::span<const double> attacker, FcMode mode,
    std::chrono::steady_clock::time_point deadline, std::mt19937_64* rng);

// Objective of a joint route against an attacker strategy, summed in
// target order.
double BestResponseObjective(const ResponseGame& game,
                             std::span<const double> attacker,
                             const JointChoice& choice);

struct FcOptions {
  FcMode mode = FcMode::kExact;
  std::vector<JointChoice> initial;  // empty: first route of every resource
  std::chrono::steady_clock::time_point deadline =
      std::chrono::steady_clock::time_point::max();
  uint64_t seed = 0;
  int heuristic_iteration_cap = 100;
};

// Full coordination by row generation over joint routes.
OracleResult SolveFc(const ResponseGame& game, const FcOptions& options = {});

struct PcOptions {
  int restarts = 0;
  std::vector<MixedStrategy> initial;  // empty: uniform strategies
  uint64_t seed = 0;
  int iteration_cap = 200;
  double epsilon = 1e-7;
  std::chrono::steady_clock::time_point deadline =
      std::chrono::steady_clock::time_point::max();
};

// Partial coordination: alternating single-resource LPs from `initial`, then
// `restarts` random profiles; keeps the best fixed point. When no resource
// raises the value alone, one resource may still move if it lifts its worst
// influenced target while every target stays at the current value or above.
OracleResult SolvePc(const ResponseGame& game, const PcOptions& options = {});

// Row k pairs the k-th most probable support route of every NC strategy,
// wrapping around shorter supports; duplicates are dropped.
std::vector<JointChoice> InitialJointRoutes(const OracleResult& nc);

}  // namespace alarmgame

#endif  // ALARMGAME_ORACLES_H_
