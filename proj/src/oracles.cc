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

#include "alarmgame/oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "alarmgame/random.h"

namespace alarmgame {
namespace {

using Clock = std::chrono::steady_clock;

double ElapsedMs(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

// Coverage probability of every local target under one resource strategy.
std::vector<double> Marginals(const ResponseGame& game, int resource,
                              const MixedStrategy& strategy) {
  std::vector<double> c(game.num_targets(), 0.0);
  for (int r = 0; r < game.num_routes(resource); ++r) {
    const double p = strategy[r];
    if (p == 0.0) continue;
    game.coverage[resource][r].ForEach([&](int t) { c[t] += p; });
  }
  for (double& x : c) x = std::min(1.0, x);
  return c;
}

double ValueFromUncovered(const ResponseGame& game,
                          const std::vector<double>& uncovered) {
  double worst = 0.0;
  for (int t = 0; t < game.num_targets(); ++t) {
    worst = std::max(worst, game.values[t] * uncovered[t]);
  }
  return 1.0 - worst;
}

MixedStrategy RandomStrategy(int n, std::mt19937_64& rng) {
  MixedStrategy s(n);
  for (double& x : s) x = -std::log(1.0 - UniformUnit(rng));
  CleanStrategy(s);
  return s;
}

// Best response of resource `i` when the others are fixed: a matrix game
// whose payoff is linear in the resource's own strategy.
ZeroSumSolution SingleResourceResponse(
    const ResponseGame& game, int i,
    const std::vector<std::vector<double>>& marginals) {
  const int n = game.num_targets();
  std::vector<double> exposure(n);
  for (int t = 0; t < n; ++t) {
    double q = game.values[t];
    for (int j = 0; j < game.num_resources(); ++j) {
      if (j != i) q *= 1.0 - marginals[j][t];
    }
    exposure[t] = q;
  }
  MatrixGame matrix(game.num_routes(i), n);
  for (int r = 0; r < game.num_routes(i); ++r) {
    for (int t = 0; t < n; ++t) {
      matrix.at(r, t) =
          game.coverage[i][r].Test(t) ? 1.0 : 1.0 - exposure[t];
    }
  }
  return SolveZeroSum(matrix);
}

std::vector<double> OtherExposure(
    const ResponseGame& game, int i,
    const std::vector<std::vector<double>>& marginals) {
  std::vector<double> exposure(game.num_targets());
  for (int t = 0; t < game.num_targets(); ++t) {
    double q = game.values[t];
    for (int j = 0; j < game.num_resources(); ++j) {
      if (j != i) q *= 1.0 - marginals[j][t];
    }
    exposure[t] = q;
  }
  return exposure;
}

// Lowest utility among the targets resource `i` can still influence.
double InfluencedMin(const ResponseGame& game, int i,
                     const std::vector<double>& exposure,
                     const std::vector<double>& own_marginal) {
  double worst = std::numeric_limits<double>::infinity();
  for (int t = 0; t < game.num_targets(); ++t) {
    if (!game.reachable[i].Test(t) || exposure[t] <= 0.0) continue;
    worst = std::min(worst, 1.0 - exposure[t] * (1.0 - own_marginal[t]));
  }
  return worst;
}

// Among the strategies of resource `i` keeping every target at utility
// `floor` or above, one maximizing the lowest utility of the targets `i`
// can influence. Returns nullopt when the program fails.
std::optional<std::pair<MixedStrategy, double>> RefinedResponse(
    const ResponseGame& game, int i, const std::vector<double>& exposure,
    double floor) {
  const int routes = game.num_routes(i);
  const int n = game.num_targets();
  LinearProgram lp(routes + 1);
  lp.objective[routes] = 1.0;
  std::vector<double> simplex(routes + 1, 1.0);
  simplex[routes] = 0.0;
  lp.AddRow(std::move(simplex), ConstraintSense::kEqual, 1.0);
  bool any = false;
  for (int t = 0; t < n; ++t) {
    std::vector<double> row(routes + 1, 0.0);
    for (int r = 0; r < routes; ++r) {
      if (game.coverage[i][r].Test(t)) row[r] = exposure[t];
    }
    // 1 - exposure (1 - sum x) >= floor.
    lp.AddRow(row, ConstraintSense::kGreaterEqual, floor - 1.0 + exposure[t]);
    if (!game.reachable[i].Test(t) || exposure[t] <= 0.0) continue;
    any = true;
    row[routes] = -1.0;
    lp.AddRow(std::move(row), ConstraintSense::kGreaterEqual,
              exposure[t] - 1.0);
  }
  if (!any) return std::nullopt;
  LpSolution sol = SolveLp(lp);
  if (sol.status != LpStatus::kOptimal) return std::nullopt;
  MixedStrategy strategy(sol.x.begin(), sol.x.begin() + routes);
  for (double& x : strategy) x = std::max(0.0, x);
  CleanStrategy(strategy);
  return std::make_pair(std::move(strategy), sol.objective);
}

class BestResponseSearch {
 public:
  BestResponseSearch(const ResponseGame& game, std::span<const double> weights,
                     Clock::time_point deadline)
      : game_(game), weights_(weights), deadline_(deadline) {
    const int m = game.num_resources();
    route_weight_.resize(m);
    rest_.assign(m + 1, 0.0);
    for (int i = 0; i < m; ++i) {
      double best = 0.0;
      for (const Bits& b : game.coverage[i]) {
        double w = 0.0;
        b.ForEach([&](int t) { w += weights_[t]; });
        route_weight_[i].push_back(w);
        best = std::max(best, w);
      }
      rest_[i] = best;
    }
    for (int i = m - 1; i >= 0; --i) rest_[i] += rest_[i + 1];
    for (double w : weights_) total_ += w;
  }

  bool Run(JointChoice& best, double best_weight) {
    best_ = best;
    best_weight_ = best_weight;
    JointChoice current(game_.num_resources(), 0);
    Search(0, Bits(game_.num_targets()), 0.0, current);
    best = best_;
    return !timed_out_;
  }

 private:
  void Search(int i, const Bits& covered, double covered_weight,
              JointChoice& current) {
    if (timed_out_) return;
    if ((++nodes_ & 4095) == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }
    if (i == game_.num_resources()) {
      if (covered_weight > best_weight_ + 1e-12) {
        best_weight_ = covered_weight;
        best_ = current;
      }
      return;
    }
    std::vector<std::pair<double, int>> options;
    options.reserve(game_.num_routes(i));
    for (int r = 0; r < game_.num_routes(i); ++r) {
      double gain = 0.0;
      game_.coverage[i][r].ForEach([&](int t) {
        if (!covered.Test(t)) gain += weights_[t];
      });
      options.emplace_back(gain, r);
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) {
                       return a.first > b.first;
                     });
    bool zero_done = false;
    for (const auto& [gain, r] : options) {
      const double bound = std::min(
          total_, covered_weight + gain + rest_[i + 1]);
      if (bound <= best_weight_ + 1e-12) break;
      if (gain <= 0.0) {
        if (zero_done) break;
        zero_done = true;
      }
      Bits next = covered;
      next |= game_.coverage[i][r];
      current[i] = r;
      Search(i + 1, next, covered_weight + gain, current);
      if (timed_out_) return;
    }
  }

  const ResponseGame& game_;
  std::span<const double> weights_;
  Clock::time_point deadline_;
  std::vector<std::vector<double>> route_weight_;
  std::vector<double> rest_;
  double total_ = 0.0;
  JointChoice best_;
  double best_weight_ = 0.0;
  long long nodes_ = 0;
  bool timed_out_ = false;
};

double CoveredWeight(const ResponseGame& game, std::span<const double> weights,
                     const JointChoice& choice) {
  Bits covered(game.num_targets());
  for (int i = 0; i < game.num_resources(); ++i) {
    covered |= game.coverage[i][choice[i]];
  }
  double w = 0.0;
  covered.ForEach([&](int t) { w += weights[t]; });
  return w;
}

}  // namespace

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kFull: return "fc";
    case Scheme::kPartial: return "pc";
    case Scheme::kNone: return "nc";
  }
  return "unknown";
}

Scheme ParseScheme(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  for (Scheme s : {Scheme::kFull, Scheme::kPartial, Scheme::kNone}) {
    if (SchemeName(s) == lower) return s;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown oracle '" + std::string(name) + "' (use fc, pc, nc)");
}

std::string_view FcModeName(FcMode mode) {
  return mode == FcMode::kExact ? "exact" : "heuristic";
}

ResponseGame MakeResponseGame(const PatrollingSetting& setting,
                              const DistanceMatrix& dist,
                              std::span<const int> starts,
                              std::span<const int> support,
                              std::vector<RouteSet> route_sets) {
  if (starts.size() != route_sets.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "one route set per resource is required");
  }
  ResponseGame game;
  game.targets.assign(support.begin(), support.end());
  std::sort(game.targets.begin(), game.targets.end());
  game.targets.erase(std::unique(game.targets.begin(), game.targets.end()),
                     game.targets.end());
  std::vector<int> local(setting.num_targets(), -1);
  for (int k = 0; k < game.num_targets(); ++k) {
    local[game.targets[k]] = k;
    game.values.push_back(setting.value(game.targets[k]));
  }
  game.starts.assign(starts.begin(), starts.end());
  const int n = game.num_targets();
  for (std::size_t i = 0; i < route_sets.size(); ++i) {
    if (route_sets[i].routes.empty()) {
      route_sets[i].routes.push_back(CoveringRoute{starts[i], {}, {}});
    }
    std::vector<Bits> cover;
    for (const CoveringRoute& route : route_sets[i].routes) {
      Bits b(n);
      for (int t : route.visits) {
        if (local[t] < 0) {
          throw Error(ErrorCode::kInvalidArgument,
                      "route visits target '" + setting.target_id(t) +
                          "' outside the signal support");
        }
        b.Set(local[t]);
      }
      cover.push_back(std::move(b));
    }
    game.coverage.push_back(std::move(cover));
    Bits reach(n);
    for (int k = 0; k < n; ++k) {
      const int t = game.targets[k];
      if (dist(starts[i], setting.target_vertex(t)) <= setting.deadline(t)) {
        reach.Set(k);
      }
    }
    game.reachable.push_back(std::move(reach));
  }
  game.route_sets = std::move(route_sets);
  return game;
}

std::vector<double> UncoveredIndependent(
    const ResponseGame& game, std::span<const MixedStrategy> strategies) {
  std::vector<double> uncovered(game.num_targets(), 1.0);
  for (int i = 0; i < game.num_resources(); ++i) {
    std::vector<double> c = Marginals(game, i, strategies[i]);
    for (int t = 0; t < game.num_targets(); ++t) uncovered[t] *= 1.0 - c[t];
  }
  return uncovered;
}

std::vector<double> UncoveredJoint(const ResponseGame& game,
                                   std::span<const JointChoice> joint_routes,
                                   std::span<const double> probs) {
  std::vector<double> covered(game.num_targets(), 0.0);
  for (std::size_t k = 0; k < joint_routes.size(); ++k) {
    if (probs[k] == 0.0) continue;
    Bits b(game.num_targets());
    for (int i = 0; i < game.num_resources(); ++i) {
      b |= game.coverage[i][joint_routes[k][i]];
    }
    b.ForEach([&](int t) { covered[t] += probs[k]; });
  }
  std::vector<double> uncovered(game.num_targets());
  for (int t = 0; t < game.num_targets(); ++t) {
    uncovered[t] = std::max(0.0, 1.0 - covered[t]);
  }
  return uncovered;
}

double EvaluateIndependent(const ResponseGame& game,
                           std::span<const MixedStrategy> strategies) {
  return ValueFromUncovered(game, UncoveredIndependent(game, strategies));
}

double EvaluateJoint(const ResponseGame& game,
                     std::span<const JointChoice> joint_routes,
                     std::span<const double> probs) {
  return ValueFromUncovered(game, UncoveredJoint(game, joint_routes, probs));
}

std::vector<double> UncoveredResult(const ResponseGame& game,
                                    const OracleResult& result) {
  if (result.scheme == Scheme::kFull) {
    return UncoveredJoint(game, result.joint_routes, result.joint_strategy);
  }
  return UncoveredIndependent(game, result.resource_strategies);
}

double EvaluateResult(const ResponseGame& game, const OracleResult& result) {
  return ValueFromUncovered(game, UncoveredResult(game, result));
}

MatrixGame JointMatrix(const ResponseGame& game,
                       std::span<const JointChoice> joint_routes) {
  const int n = game.num_targets();
  MatrixGame matrix(static_cast<int>(joint_routes.size()), n);
  for (std::size_t k = 0; k < joint_routes.size(); ++k) {
    Bits b(n);
    for (int i = 0; i < game.num_resources(); ++i) {
      b |= game.coverage[i][joint_routes[k][i]];
    }
    for (int t = 0; t < n; ++t) {
      matrix.at(static_cast<int>(k), t) =
          b.Test(t) ? 1.0 : 1.0 - game.values[t];
    }
  }
  return matrix;
}

OracleResult SolveNc(const ResponseGame& game) {
  const auto start = Clock::now();
  OracleResult result;
  result.scheme = Scheme::kNone;
  for (int i = 0; i < game.num_resources(); ++i) {
    std::vector<int> restricted;
    game.reachable[i].ForEach([&](int t) { restricted.push_back(t); });
    MixedStrategy strategy(game.num_routes(i), 0.0);
    if (restricted.empty()) {
      strategy[0] = 1.0;
    } else {
      MatrixGame matrix(game.num_routes(i),
                        static_cast<int>(restricted.size()));
      for (int r = 0; r < game.num_routes(i); ++r) {
        for (std::size_t k = 0; k < restricted.size(); ++k) {
          const int t = restricted[k];
          matrix.at(r, static_cast<int>(k)) =
              game.coverage[i][r].Test(t) ? 1.0 : 1.0 - game.values[t];
        }
      }
      ZeroSumSolution sol = SolveZeroSum(matrix);
      result.diagnostics.lps_solved += 2;
      if (sol.status != LpStatus::kOptimal) {
        throw Error(ErrorCode::kInvalidArgument,
                    "resource game LP returned " +
                        std::string(LpStatusName(sol.status)));
      }
      strategy = sol.row_strategy;
    }
    result.resource_strategies.push_back(std::move(strategy));
  }
  result.value = EvaluateIndependent(game, result.resource_strategies);
  result.diagnostics.iterations = game.num_resources();
  result.diagnostics.value_trace.push_back(result.value);
  result.diagnostics.wall_ms = ElapsedMs(start);
  return result;
}

double BestResponseObjective(const ResponseGame& game,
                             std::span<const double> attacker,
                             const JointChoice& choice) {
  Bits covered(game.num_targets());
  for (int i = 0; i < game.num_resources(); ++i) {
    covered |= game.coverage[i][choice[i]];
  }
  double loss = 0.0;
  for (int t = 0; t < game.num_targets(); ++t) {
    if (!covered.Test(t)) loss += attacker[t] * game.values[t];
  }
  return 1.0 - loss;
}

BestResponseResult BestResponse(const ResponseGame& game,
                                std::span<const double> attacker, FcMode mode,
                                Clock::time_point deadline,
                                std::mt19937_64* rng) {
  const int m = game.num_resources();
  const int n = game.num_targets();
  std::vector<double> weights(n);
  double total = 0.0;
  for (int t = 0; t < n; ++t) {
    weights[t] = attacker[t] * game.values[t];
    total += weights[t];
  }
  BestResponseResult out;

  if (mode == FcMode::kExact) {
    // Greedy incumbent: each resource in turn takes its largest gain.
    JointChoice greedy(m, 0);
    Bits covered(n);
    for (int i = 0; i < m; ++i) {
      double best_gain = -1.0;
      for (int r = 0; r < game.num_routes(i); ++r) {
        double gain = 0.0;
        game.coverage[i][r].ForEach([&](int t) {
          if (!covered.Test(t)) gain += weights[t];
        });
        if (gain > best_gain) {
          best_gain = gain;
          greedy[i] = r;
        }
      }
      covered |= game.coverage[i][greedy[i]];
    }
    BestResponseSearch search(game, weights, deadline);
    out.choice = greedy;
    out.optimal = search.Run(out.choice, CoveredWeight(game, weights, greedy));
    out.objective = BestResponseObjective(game, attacker, out.choice);
    out.relaxation_bound = out.objective;
    return out;
  }

  // LP relaxation: variables x_{i,r} then y_t.
  std::vector<int> offset(m + 1, 0);
  for (int i = 0; i < m; ++i) offset[i + 1] = offset[i] + game.num_routes(i);
  const int nx = offset[m];
  LinearProgram lp(nx + n);
  for (int t = 0; t < n; ++t) lp.objective[nx + t] = weights[t];
  for (int t = 0; t < n; ++t) {
    std::vector<double> row(nx + n, 0.0);
    row[nx + t] = 1.0;
    for (int i = 0; i < m; ++i) {
      for (int r = 0; r < game.num_routes(i); ++r) {
        if (game.coverage[i][r].Test(t)) row[offset[i] + r] = -1.0;
      }
    }
    lp.AddRow(std::move(row), ConstraintSense::kLessEqual, 0.0);
    std::vector<double> cap(nx + n, 0.0);
    cap[nx + t] = 1.0;
    lp.AddRow(std::move(cap), ConstraintSense::kLessEqual, 1.0);
  }
  for (int i = 0; i < m; ++i) {
    std::vector<double> row(nx + n, 0.0);
    for (int r = 0; r < game.num_routes(i); ++r) row[offset[i] + r] = 1.0;
    lp.AddRow(std::move(row), ConstraintSense::kEqual, 1.0);
  }
  LpSolution sol = SolveLp(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kInvalidArgument,
                "best-response relaxation returned " +
                    std::string(LpStatusName(sol.status)));
  }
  out.relaxation_bound = 1.0 - total + sol.objective;
  out.choice.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    MixedStrategy x(sol.x.begin() + offset[i], sol.x.begin() + offset[i + 1]);
    for (double v : x) {
      if (v > 1e-9 && v < 1.0 - 1e-9) out.pure = false;
    }
    CleanStrategy(x);
    const double u = UniformUnit(*rng);
    double acc = 0.0;
    int pick = 0;
    for (int r = 0; r < static_cast<int>(x.size()); ++r) {
      if (x[r] <= 0.0) continue;
      pick = r;
      acc += x[r];
      if (u < acc) break;
    }
    out.choice[i] = pick;
  }
  out.objective = BestResponseObjective(game, attacker, out.choice);
  return out;
}

OracleResult SolveFc(const ResponseGame& game, const FcOptions& options) {
  const auto start = Clock::now();
  OracleResult result;
  result.scheme = Scheme::kFull;
  auto& diag = result.diagnostics;
  std::mt19937_64 rng(DeriveSeed(options.seed, "fc-sampling"));

  std::vector<JointChoice> rows;
  std::set<JointChoice> in_rows;
  for (const JointChoice& c : options.initial) {
    if (in_rows.insert(c).second) rows.push_back(c);
  }
  if (rows.empty()) {
    rows.push_back(JointChoice(game.num_resources(), 0));
    in_rows.insert(rows.back());
  }

  ZeroSumSolution sol;
  bool done = false;
  while (!done) {
    sol = SolveZeroSum(JointMatrix(game, rows));
    ++diag.lps_solved;
    if (sol.status != LpStatus::kOptimal) {
      throw Error(ErrorCode::kInvalidArgument,
                  "restricted game LP returned " +
                      std::string(LpStatusName(sol.status)));
    }
    diag.value_trace.push_back(sol.value);
    diag.attacker_trace.push_back(1.0 - sol.value);
    ++diag.iterations;
    if (Clock::now() > options.deadline) {
      diag.optimal = false;
      break;
    }
    BestResponseResult br = BestResponse(game, sol.col_strategy, options.mode,
                                         options.deadline, &rng);
    if (options.mode == FcMode::kExact) {
      if (!br.optimal) diag.optimal = false;
      if (in_rows.count(br.choice) || br.objective <= sol.value + 1e-9) {
        done = true;
      } else {
        in_rows.insert(br.choice);
        rows.push_back(br.choice);
      }
      if (!br.optimal) done = true;
      continue;
    }
    diag.fractional_trace.push_back(br.relaxation_bound);
    if (br.relaxation_bound <= sol.value + 1e-9) {
      done = true;  // no joint route can improve on the restricted game
      continue;
    }
    auto it = std::find(rows.begin(), rows.end(), br.choice);
    if (it != rows.end()) {
      if (br.pure && sol.row_strategy[it - rows.begin()] > 0.0) {
        diag.optimal = false;
        done = true;
      }
    } else {
      in_rows.insert(br.choice);
      rows.push_back(br.choice);
    }
    if (diag.iterations >= options.heuristic_iteration_cap) {
      diag.optimal = false;
      done = true;
    }
  }
  if (sol.row_strategy.size() < rows.size()) {
    // The last generated row was added after the final solve.
    rows.resize(sol.row_strategy.size());
  }
  result.joint_routes = std::move(rows);
  result.joint_strategy = sol.row_strategy;
  result.value = EvaluateJoint(game, result.joint_routes, result.joint_strategy);
  diag.routes_generated = static_cast<int>(result.joint_routes.size());
  diag.wall_ms = ElapsedMs(start);
  return result;
}

OracleResult SolvePc(const ResponseGame& game, const PcOptions& options) {
  const auto start = Clock::now();
  const int m = game.num_resources();
  OracleResult result;
  result.scheme = Scheme::kPartial;
  auto& diag = result.diagnostics;
  std::mt19937_64 rng(DeriveSeed(options.seed, "pc-restarts"));

  auto run = [&](std::vector<MixedStrategy> profile,
                 std::vector<double>& trace) {
    for (MixedStrategy& s : profile) CleanStrategy(s);
    double current = EvaluateIndependent(game, profile);
    trace.push_back(current);
    for (int iter = 0; iter < options.iteration_cap; ++iter) {
      if (Clock::now() > options.deadline) {
        diag.optimal = false;
        break;
      }
      std::vector<std::vector<double>> marginals(m);
      for (int j = 0; j < m; ++j) marginals[j] = Marginals(game, j, profile[j]);
      int best_i = -1;
      double best_value = -std::numeric_limits<double>::infinity();
      MixedStrategy best_strategy;
      for (int i = 0; i < m; ++i) {
        ZeroSumSolution sol = SingleResourceResponse(game, i, marginals);
        diag.lps_solved += 2;
        if (sol.status != LpStatus::kOptimal) continue;
        if (sol.value > best_value) {
          best_value = sol.value;
          best_i = i;
          best_strategy = std::move(sol.row_strategy);
        }
      }
      ++diag.iterations;
      if (best_i < 0) break;
      if (best_value <= current + options.epsilon) {
        // No resource raises the value alone; let one raise its own
        // worst influenced target without lowering the value.
        best_i = -1;
        double best_gain = options.epsilon;
        for (int i = 0; i < m; ++i) {
          const std::vector<double> exposure =
              OtherExposure(game, i, marginals);
          auto refined = RefinedResponse(game, i, exposure, current);
          ++diag.lps_solved;
          if (!refined) continue;
          const double gain =
              refined->second - InfluencedMin(game, i, exposure, marginals[i]);
          if (gain > best_gain) {
            best_gain = gain;
            best_i = i;
            best_strategy = std::move(refined->first);
          }
        }
        if (best_i < 0) break;
        MixedStrategy previous = profile[best_i];
        profile[best_i] = std::move(best_strategy);
        const double updated = EvaluateIndependent(game, profile);
        if (updated < current) {
          profile[best_i] = std::move(previous);
          break;
        }
        current = std::max(current, updated);
        trace.push_back(current);
        continue;
      }
      MixedStrategy previous = profile[best_i];
      profile[best_i] = std::move(best_strategy);
      const double updated = EvaluateIndependent(game, profile);
      if (updated <= current) {
        // Clipping noise; keep the previous profile.
        profile[best_i] = std::move(previous);
        break;
      }
      current = updated;
      trace.push_back(current);
    }
    return std::make_pair(current, profile);
  };

  std::vector<MixedStrategy> initial = options.initial;
  if (initial.empty()) {
    for (int i = 0; i < m; ++i) {
      initial.emplace_back(game.num_routes(i), 1.0 / game.num_routes(i));
    }
  }
  auto [best_value, best_profile] = run(initial, diag.value_trace);
  for (int k = 0; k < options.restarts; ++k) {
    if (Clock::now() > options.deadline) break;
    std::vector<MixedStrategy> profile;
    for (int i = 0; i < m; ++i) {
      profile.push_back(RandomStrategy(game.num_routes(i), rng));
    }
    std::vector<double> trace;
    auto [value, final_profile] = run(std::move(profile), trace);
    if (value > best_value) {
      best_value = value;
      best_profile = std::move(final_profile);
    }
  }
  result.resource_strategies = std::move(best_profile);
  result.value = best_value;
  diag.wall_ms = ElapsedMs(start);
  return result;
}

std::vector<JointChoice> InitialJointRoutes(const OracleResult& nc) {
  const int m = static_cast<int>(nc.resource_strategies.size());
  // Support of each resource, most probable route first.
  std::vector<std::vector<int>> support(m);
  std::size_t longest = 1;
  for (int i = 0; i < m; ++i) {
    const MixedStrategy& s = nc.resource_strategies[i];
    for (int r = 0; r < static_cast<int>(s.size()); ++r) {
      if (s[r] > 0.0) support[i].push_back(r);
    }
    if (support[i].empty()) support[i].push_back(0);
    std::stable_sort(support[i].begin(), support[i].end(),
                     [&](int a, int b) { return s[a] > s[b]; });
    longest = std::max(longest, support[i].size());
  }
  std::vector<JointChoice> rows;
  std::set<JointChoice> seen;
  for (std::size_t k = 0; k < longest; ++k) {
    JointChoice c(m);
    for (int i = 0; i < m; ++i) c[i] = support[i][k % support[i].size()];
    if (seen.insert(c).second) rows.push_back(std::move(c));
  }
  return rows;
}

}  // namespace alarmgame
