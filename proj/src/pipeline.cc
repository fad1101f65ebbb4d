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

#include "alarmgame/pipeline.h"

#include <algorithm>
#include <thread>

#include "alarmgame/random.h"

namespace alarmgame {
namespace {

using Clock = std::chrono::steady_clock;

double ElapsedMs(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

}  // namespace

RouteSet RouteCache::Get(int vertex, int signal) {
  const auto key = std::make_pair(vertex, signal);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  std::vector<int> support = alarm_.SignalSupport(signal);
  RouteSet routes = CoveringRoutes(setting_, dist_, vertex, support, options_);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(routes)).first->second;
}

double AggregateValue(const Instance& instance,
                      const std::vector<SignalSolution>& signals) {
  const int n = instance.setting.num_targets();
  std::vector<double> exposure(n, 0.0);
  for (const SignalSolution& s : signals) {
    std::vector<double> uncovered = UncoveredResult(s.game, s.result);
    for (int k = 0; k < s.game.num_targets(); ++k) {
      const int t = s.game.targets[k];
      exposure[t] += instance.alarm.prob(s.signal, t) * uncovered[k];
    }
  }
  double worst = 0.0;
  for (int t = 0; t < n; ++t) {
    worst = std::max(worst, instance.setting.value(t) * exposure[t]);
  }
  return 1.0 - worst;
}

std::vector<SchemeEvaluation> EvaluatePlacement(
    const Instance& instance, const DistanceMatrix& dist,
    const CoveringPlacement& placement, const OracleConfig& config,
    RouteCache& routes) {
  std::vector<int> starts;
  for (int p : placement.positions) {
    for (int k = 0; k < std::max(1, config.resources_per_position); ++k) {
      starts.push_back(p);
    }
  }
  SchemeEvaluation nc, pc, fc;
  pc.scheme = Scheme::kPartial;
  fc.scheme = Scheme::kFull;
  for (int s = 0; s < instance.alarm.num_signals(); ++s) {
    std::vector<int> support = instance.alarm.SignalSupport(s);
    if (support.empty()) continue;
    std::vector<RouteSet> sets;
    for (int v : starts) sets.push_back(routes.Get(v, s));
    ResponseGame game = MakeResponseGame(instance.setting, dist, starts,
                                         support, std::move(sets));
    auto t0 = Clock::now();
    OracleResult nc_result = SolveNc(game);
    nc.wall_ms += ElapsedMs(t0);
    if (config.pc) {
      PcOptions options;
      options.restarts = config.pc_restarts;
      options.initial = nc_result.resource_strategies;
      options.seed = DeriveSeed(config.seed, "pc/" + std::to_string(s));
      options.deadline = config.deadline;
      t0 = Clock::now();
      OracleResult r = SolvePc(game, options);
      pc.wall_ms += ElapsedMs(t0);
      pc.optimal = pc.optimal && r.diagnostics.optimal;
      pc.signals.push_back({s, game, std::move(r)});
    }
    if (config.fc) {
      FcOptions options;
      options.mode = config.fc_mode;
      options.initial = InitialJointRoutes(nc_result);
      options.seed = DeriveSeed(config.seed, "fc/" + std::to_string(s));
      options.deadline = config.deadline;
      t0 = Clock::now();
      OracleResult r = SolveFc(game, options);
      fc.wall_ms += ElapsedMs(t0);
      fc.optimal = fc.optimal && r.diagnostics.optimal;
      fc.signals.push_back({s, game, std::move(r)});
    }
    if (config.nc) nc.signals.push_back({s, std::move(game), std::move(nc_result)});
  }
  std::vector<SchemeEvaluation> out;
  for (SchemeEvaluation* e : {&fc, &pc, &nc}) {
    const bool selected = (e->scheme == Scheme::kFull && config.fc) ||
                          (e->scheme == Scheme::kPartial && config.pc) ||
                          (e->scheme == Scheme::kNone && config.nc);
    if (!selected) continue;
    e->value = AggregateValue(instance, e->signals);
    out.push_back(std::move(*e));
  }
  return out;
}

PlacementEnumerator::PlacementEnumerator(const SetCoverInstance& instance,
                                         int m, CoveringPlacement initial)
    : instance_(instance), m_(m), initial_(std::move(initial)) {}

bool PlacementEnumerator::Accept(const std::vector<int>& positions) {
  if (visited_.count(positions) || !IsCovering(instance_, positions)) {
    return false;
  }
  visited_.insert(positions);
  index_[positions] = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{positions});
  current_ = static_cast<int>(nodes_.size()) - 1;
  return true;
}

std::optional<std::vector<int>> PlacementEnumerator::NextNeighbour(
    Node& node) {
  const int n = instance_.num_candidates();
  while (node.next_out < m_) {
    while (node.next_in < n) {
      const int v = node.next_in++;
      if (std::binary_search(node.positions.begin(), node.positions.end(), v)) {
        continue;
      }
      std::vector<int> candidate = node.positions;
      candidate[node.next_out] = v;
      std::sort(candidate.begin(), candidate.end());
      if (!visited_.count(candidate) && IsCovering(instance_, candidate)) {
        return candidate;
      }
    }
    ++node.next_out;
    node.next_in = 0;
  }
  node.exhausted = true;
  return std::nullopt;
}

std::optional<std::vector<int>> PlacementEnumerator::NextCombination(
    Clock::time_point deadline) {
  const int n = instance_.num_candidates();
  if (combinations_done_ || m_ > n || m_ <= 0) return std::nullopt;
  long long steps = 0;
  while (true) {
    if (!combinations_started_) {
      combination_.resize(m_);
      for (int i = 0; i < m_; ++i) combination_[i] = i;
      combinations_started_ = true;
    } else {
      int i = m_ - 1;
      while (i >= 0 && combination_[i] == n - m_ + i) --i;
      if (i < 0) {
        combinations_done_ = true;
        return std::nullopt;
      }
      ++combination_[i];
      for (int j = i + 1; j < m_; ++j) combination_[j] = combination_[j - 1] + 1;
    }
    if (!visited_.count(combination_) && IsCovering(instance_, combination_)) {
      return combination_;
    }
    if ((++steps & 4095) == 0 && Clock::now() > deadline) {
      timed_out_ = true;
      return std::nullopt;
    }
  }
}

std::optional<CoveringPlacement> PlacementEnumerator::Next(
    Clock::time_point deadline) {
  if (initial_) {
    std::vector<int> positions = initial_->positions;
    std::sort(positions.begin(), positions.end());
    initial_.reset();
    if (static_cast<int>(positions.size()) == m_ && Accept(positions)) {
      return CoveringPlacement{positions};
    }
  }
  while (true) {
    if (Clock::now() > deadline) {
      timed_out_ = true;
      return std::nullopt;
    }
    if (current_ >= 0) {
      if (auto next = NextNeighbour(nodes_[current_])) {
        Accept(*next);
        return CoveringPlacement{*next};
      }
    }
    // Restart from the best visited placement with unexplored neighbours.
    int restart = -1;
    for (int k = static_cast<int>(nodes_.size()) - 1; k >= 0; --k) {
      if (nodes_[k].exhausted) continue;
      if (restart < 0 || nodes_[k].value > nodes_[restart].value) restart = k;
    }
    if (restart >= 0) {
      current_ = restart;
      continue;
    }
    if (auto next = NextCombination(deadline)) {
      Accept(*next);
      return CoveringPlacement{*next};
    }
    return std::nullopt;
  }
}

void PlacementEnumerator::Report(const CoveringPlacement& placement,
                                 double value) {
  auto it = index_.find(placement.positions);
  if (it != index_.end()) nodes_[it->second].value = value;
}

ResolutionReport Resolve(const Instance& instance,
                         const ResolutionConfig& config) {
  const auto start = Clock::now();
  if (config.time_budget.count() <= 0) {
    throw Error(ErrorCode::kBudgetTooSmall, "time budget must be positive");
  }
  if (!config.oracles.fc && !config.oracles.pc && !config.oracles.nc) {
    throw Error(ErrorCode::kInvalidArgument, "no oracle selected");
  }
  const auto deadline = start + config.time_budget;
  const PatrollingSetting& setting = instance.setting;
  const DistanceMatrix dist = AllPairsDistances(setting);
  const SetCoverInstance cover_instance = ToSetCover(setting, dist);

  ResolutionReport report;
  report.cover = MinCover(setting, dist, config.cover_method,
                          std::chrono::duration_cast<std::chrono::milliseconds>(
                              config.time_budget / 2));
  report.mincover_ms = ElapsedMs(start);
  if (Clock::now() > deadline) {
    throw Error(ErrorCode::kBudgetTooSmall,
                "minimum cover did not finish within the budget");
  }
  const int per_position = std::max(1, config.oracles.resources_per_position);
  report.positions = report.cover.placement.size();
  report.m = report.positions * per_position;

  OracleConfig oracle_config = config.oracles;
  oracle_config.deadline = deadline;
  oracle_config.seed = DeriveSeed(config.seed, "oracles");
  RouteCache routes(setting, dist, instance.alarm, config.routes);
  PlacementEnumerator enumerator(cover_instance, report.positions,
                                 report.cover.placement);

  std::mutex mu;
  bool stop = false;
  auto stop_requested = [&] {
    return stop || (config.cancel && config.cancel->load()) ||
           Clock::now() > deadline ||
           (config.max_placements > 0 &&
            report.placements_evaluated >= config.max_placements);
  };

  auto worker = [&] {
    while (true) {
      std::optional<CoveringPlacement> placement;
      int id;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (stop_requested()) {
          stop = true;
          return;
        }
        placement = enumerator.Next(deadline);
        if (!placement) {
          if (!enumerator.timed_out()) report.exhausted = true;
          stop = true;
          return;
        }
        id = report.placements_evaluated++;
      }
      std::vector<SchemeEvaluation> evals = EvaluatePlacement(
          instance, dist, *placement, oracle_config, routes);
      std::lock_guard<std::mutex> lock(mu);
      PlacementRecord record;
      record.id = id;
      record.placement = *placement;
      record.overlap = ComputeOverlap(*placement, setting, dist);
      double feedback = 0.0;
      for (const SchemeEvaluation& e : evals) {
        record.values[e.scheme] = e.value;
        record.wall_ms[e.scheme] = e.wall_ms;
        feedback = std::max(feedback, e.value);
        auto [it, inserted] = report.best.emplace(e.scheme, Incumbent{});
        if (inserted || e.value > it->second.value) {
          it->second = {e.value, id};
        }
        report.trace.push_back(
            {ElapsedMs(start), id, e.scheme, e.value, it->second.value});
      }
      enumerator.Report(*placement, feedback);
      report.placements.push_back(std::move(record));
    }
  };

  const int workers = std::max(1, config.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::sort(report.placements.begin(), report.placements.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  report.timed_out = !report.exhausted &&
                     (Clock::now() > deadline || enumerator.timed_out());
  return report;
}

}  // namespace alarmgame
