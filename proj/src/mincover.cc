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

#include "alarmgame/mincover.h"

#include <algorithm>
#include <numeric>

#include "alarmgame/bits.h"

namespace alarmgame {
namespace {

using Clock = std::chrono::steady_clock;

std::vector<int> CoverCounts(const SetCoverInstance& instance,
                             const std::vector<int>& positions) {
  std::vector<int> counts(instance.num_elements, 0);
  for (int p : positions) {
    for (int e : instance.sets[p]) ++counts[e];
  }
  return counts;
}

// Depth-first branch-and-bound state for ExactCover.
class CoverSearch {
 public:
  CoverSearch(const SetCoverInstance& instance, std::vector<int> candidates,
              Clock::time_point deadline)
      : n_(instance.num_elements),
        candidates_(std::move(candidates)),
        deadline_(deadline) {
    const int k = static_cast<int>(candidates_.size());
    sets_.reserve(k);
    element_candidates_.assign(n_, {});
    for (int c = 0; c < k; ++c) {
      Bits bits(n_);
      for (int e : instance.sets[candidates_[c]]) {
        bits.Set(e);
        element_candidates_[e].push_back(c);
      }
      sets_.push_back(std::move(bits));
    }
  }

  // Returns false on timeout.
  bool Run(std::vector<int>& best) {
    // The incumbent is kept by the caller until the search improves on it.
    best_size_ = static_cast<int>(best.size());
    Bits covered(n_);
    Bits forbidden(static_cast<int>(candidates_.size()));
    std::vector<int> chosen;
    bool finished = Search(covered, forbidden, chosen);
    if (improved_) {
      best.clear();
      for (int c : best_) best.push_back(candidates_[c]);
      std::sort(best.begin(), best.end());
    }
    return finished;
  }

  long long nodes() const { return nodes_; }

 private:
  int LowerBound(const Bits& covered, const Bits& forbidden) const {
    const int uncovered = n_ - covered.Count();
    if (uncovered == 0) return 0;
    int max_gain = 0;
    for (int c = 0; c < static_cast<int>(sets_.size()); ++c) {
      if (!forbidden.Test(c)) {
        max_gain = std::max(max_gain, sets_[c].CountMinus(covered));
      }
    }
    if (max_gain == 0) return kInfinity;
    int counting = (uncovered + max_gain - 1) / max_gain;
    // Elements no two of which share a candidate each need their own set.
    Bits used(static_cast<int>(sets_.size()));
    int packing = 0;
    for (int e = 0; e < n_; ++e) {
      if (covered.Test(e)) continue;
      bool clash = false;
      for (int c : element_candidates_[e]) {
        if (!forbidden.Test(c) && used.Test(c)) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      ++packing;
      for (int c : element_candidates_[e]) used.Set(c);
    }
    return std::max(counting, packing);
  }

  bool Search(const Bits& covered, Bits& forbidden, std::vector<int>& chosen) {
    if ((++nodes_ & 1023) == 0 && Clock::now() > deadline_) return false;
    const int size = static_cast<int>(chosen.size());
    if (covered.Count() == n_) {
      if (size < best_size_) {
        best_ = chosen;
        best_size_ = size;
        improved_ = true;
      }
      return true;
    }
    int lb = LowerBound(covered, forbidden);
    if (lb == kInfinity || size + lb >= best_size_) return true;

    // Branch on the uncovered element with the fewest admissible candidates.
    int branch_element = -1;
    int fewest = kInfinity;
    for (int e = 0; e < n_; ++e) {
      if (covered.Test(e)) continue;
      int admissible = 0;
      for (int c : element_candidates_[e]) admissible += !forbidden.Test(c);
      if (admissible == 0) return true;
      if (admissible < fewest) {
        fewest = admissible;
        branch_element = e;
      }
    }
    std::vector<std::pair<int, int>> options;  // (-gain, candidate)
    for (int c : element_candidates_[branch_element]) {
      if (!forbidden.Test(c)) {
        options.emplace_back(-sets_[c].CountMinus(covered), c);
      }
    }
    std::sort(options.begin(), options.end());
    std::vector<int> newly_forbidden;
    bool finished = true;
    for (const auto& [neg_gain, c] : options) {
      Bits next = covered;
      next |= sets_[c];
      chosen.push_back(c);
      finished = Search(next, forbidden, chosen);
      chosen.pop_back();
      if (!finished) break;
      // Later siblings exclude c.
      forbidden.Set(c);
      newly_forbidden.push_back(c);
    }
    for (int c : newly_forbidden) forbidden.Reset(c);
    return finished;
  }

  int n_;
  std::vector<int> candidates_;
  std::vector<Bits> sets_;
  std::vector<std::vector<int>> element_candidates_;
  Clock::time_point deadline_;
  std::vector<int> best_;
  int best_size_ = 0;
  bool improved_ = false;
  long long nodes_ = 0;
};

CoverageProfile Combine(const std::vector<CoverageProfile>& children,
                        int deadline, bool& place) {
  place = false;
  int min_cov = kInfinity;
  int min_uncov = deadline;
  for (const CoverageProfile& p : children) {
    min_cov = std::min(min_cov, p.cov);
    min_uncov = std::min(min_uncov, p.uncov);
  }
  if (min_cov != kInfinity && (min_uncov == kInfinity || min_uncov >= min_cov)) {
    return {min_cov + 1, kInfinity};
  }
  if (min_cov == kInfinity && min_uncov == kInfinity) {
    return {kInfinity, kInfinity};
  }
  if (min_uncov - 1 >= 0) return {kInfinity, min_uncov - 1};
  place = true;
  return {1, kInfinity};
}

}  // namespace

std::string_view CoverMethodName(CoverMethod method) {
  switch (method) {
    case CoverMethod::kExact: return "exact";
    case CoverMethod::kGreedy: return "greedy";
    case CoverMethod::kGreedyLocalSearch: return "greedy+ls";
    case CoverMethod::kTree: return "tree";
    case CoverMethod::kCycle: return "cycle";
    case CoverMethod::kAuto: return "auto";
  }
  return "unknown";
}

CoverMethod ParseCoverMethod(std::string_view name) {
  for (CoverMethod m :
       {CoverMethod::kExact, CoverMethod::kGreedy,
        CoverMethod::kGreedyLocalSearch, CoverMethod::kTree,
        CoverMethod::kCycle, CoverMethod::kAuto}) {
    if (CoverMethodName(m) == name) return m;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown mincover method '" + std::string(name) + "'");
}

SetCoverInstance ToSetCover(const PatrollingSetting& setting,
                            const DistanceMatrix& dist) {
  SetCoverInstance instance;
  instance.num_elements = setting.num_targets();
  instance.sets.reserve(setting.num_vertices());
  for (int v = 0; v < setting.num_vertices(); ++v) {
    instance.sets.push_back(CoverageSet(setting, dist, v));
  }
  return instance;
}

bool IsCovering(const SetCoverInstance& instance,
                const std::vector<int>& positions) {
  std::vector<int> counts = CoverCounts(instance, positions);
  return std::all_of(counts.begin(), counts.end(),
                     [](int c) { return c > 0; });
}

CoveringPlacement GreedyCover(const SetCoverInstance& instance) {
  const int n = instance.num_elements;
  std::vector<char> covered(n, 0);
  std::vector<char> taken(instance.num_candidates(), 0);
  int remaining = n;
  CoveringPlacement placement;
  while (remaining > 0) {
    int best = -1, best_gain = 0;
    for (int c = 0; c < instance.num_candidates(); ++c) {
      if (taken[c]) continue;
      int gain = 0;
      for (int e : instance.sets[c]) gain += !covered[e];
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best < 0) {
      throw Error(ErrorCode::kInfeasible,
                  std::to_string(remaining) +
                      " element(s) are not covered by any candidate");
    }
    taken[best] = 1;
    placement.positions.push_back(best);
    for (int e : instance.sets[best]) {
      if (!covered[e]) {
        covered[e] = 1;
        --remaining;
      }
    }
  }
  std::sort(placement.positions.begin(), placement.positions.end());
  return placement;
}

CoveringPlacement LocalSearchImprove(CoveringPlacement placement,
                                     const SetCoverInstance& instance) {
  std::vector<int>& pos = placement.positions;
  std::sort(pos.begin(), pos.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> counts = CoverCounts(instance, pos);
    // (a) drop a redundant position.
    for (std::size_t i = 0; i < pos.size(); ++i) {
      const auto& set = instance.sets[pos[i]];
      if (std::all_of(set.begin(), set.end(),
                      [&](int e) { return counts[e] >= 2; })) {
        pos.erase(pos.begin() + i);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    // (b) replace two positions by one vertex covering what only they cover.
    for (std::size_t i = 0; i < pos.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < pos.size() && !changed; ++j) {
        std::vector<int> exclusive;
        std::vector<int> pair_counts(instance.num_elements, 0);
        for (int e : instance.sets[pos[i]]) ++pair_counts[e];
        for (int e : instance.sets[pos[j]]) ++pair_counts[e];
        for (int e = 0; e < instance.num_elements; ++e) {
          if (pair_counts[e] > 0 && counts[e] == pair_counts[e]) {
            exclusive.push_back(e);
          }
        }
        for (int v = 0; v < instance.num_candidates(); ++v) {
          if (std::binary_search(pos.begin(), pos.end(), v)) continue;
          const auto& set = instance.sets[v];
          if (std::includes(set.begin(), set.end(), exclusive.begin(),
                            exclusive.end())) {
            pos.erase(pos.begin() + j);
            pos.erase(pos.begin() + i);
            pos.insert(std::lower_bound(pos.begin(), pos.end(), v), v);
            changed = true;
            break;
          }
        }
      }
    }
  }
  return placement;
}

ExactCoverResult ExactCover(const SetCoverInstance& instance,
                            std::chrono::milliseconds budget) {
  const auto deadline = Clock::now() + budget;
  ExactCoverResult result;
  result.placement = LocalSearchImprove(GreedyCover(instance), instance);
  if (result.placement.size() <= 1) return result;

  // Drop empty and dominated candidates; equal sets keep the lowest index.
  std::vector<int> candidates;
  for (int c = 0; c < instance.num_candidates(); ++c) {
    const auto& set = instance.sets[c];
    if (set.empty()) continue;
    bool dominated = false;
    for (int o = 0; o < instance.num_candidates() && !dominated; ++o) {
      if (o == c) continue;
      const auto& other = instance.sets[o];
      if (other.size() < set.size()) continue;
      if (other.size() == set.size() && o > c) continue;
      dominated = std::includes(other.begin(), other.end(), set.begin(),
                                set.end());
    }
    if (!dominated) candidates.push_back(c);
  }
  CoverSearch search(instance, std::move(candidates), deadline);
  std::vector<int> best = result.placement.positions;
  result.optimal = search.Run(best);
  result.placement.positions = std::move(best);
  result.nodes = search.nodes();
  return result;
}

bool IsTree(const PatrollingSetting& setting) {
  return setting.num_edges() == setting.num_vertices() - 1;
}

bool IsCycle(const PatrollingSetting& setting) {
  if (setting.num_vertices() < 3) return false;
  if (setting.num_edges() != setting.num_vertices()) return false;
  for (int v = 0; v < setting.num_vertices(); ++v) {
    if (setting.degree(v) != 2) return false;
  }
  return true;
}

CoveringPlacement TreeMinCover(const std::vector<std::vector<int>>& adjacency,
                               const std::vector<int>& deadline, int root) {
  const int n = static_cast<int>(adjacency.size());
  // Iterative DFS order; children are processed before their parent when
  // walking the order backwards.
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  std::vector<int> stack = {root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::vector<CoverageProfile>> child_profiles(n);
  CoveringPlacement placement;
  CoverageProfile root_profile;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    CoverageProfile profile;
    if (child_profiles[v].empty()) {
      profile = deadline[v] == kInfinity
                    ? CoverageProfile{kInfinity, kInfinity}
                    : CoverageProfile{kInfinity, deadline[v] - 1};
    } else {
      bool place = false;
      profile = Combine(child_profiles[v], deadline[v], place);
      if (place) placement.positions.push_back(v);
    }
    if (parent[v] >= 0) {
      child_profiles[parent[v]].push_back(profile);
    } else {
      root_profile = profile;
    }
  }
  // No ancestor can absorb a postponed allocation at the root.
  if (root_profile.uncov != kInfinity) placement.positions.push_back(root);
  std::sort(placement.positions.begin(), placement.positions.end());
  return placement;
}

CoveringPlacement TreeMinCover(const PatrollingSetting& setting, int root) {
  if (!IsTree(setting)) {
    throw Error(ErrorCode::kNotATree,
                std::to_string(setting.num_edges()) + " edges on " +
                    std::to_string(setting.num_vertices()) + " vertices");
  }
  if (root < 0 || root >= setting.num_vertices()) {
    throw Error(ErrorCode::kUnknownVertex, "root index out of range");
  }
  std::vector<std::vector<int>> adjacency(setting.num_vertices());
  std::vector<int> deadline(setting.num_vertices());
  for (int v = 0; v < setting.num_vertices(); ++v) {
    auto nb = setting.neighbors(v);
    adjacency[v].assign(nb.begin(), nb.end());
    deadline[v] = setting.VertexDeadline(v);
  }
  return TreeMinCover(adjacency, deadline, root);
}

CoveringPlacement CycleMinCover(const PatrollingSetting& setting) {
  if (!IsCycle(setting)) {
    throw Error(ErrorCode::kNotACycle,
                "graph is not a simple cycle on at least 3 vertices");
  }
  const int n = setting.num_vertices();
  std::vector<int> deadline(n);
  for (int v = 0; v < n; ++v) deadline[v] = setting.VertexDeadline(v);
  CoveringPlacement best;
  bool have = false;
  for (const auto& [a, b] : setting.edges()) {
    std::vector<std::vector<int>> adjacency(n);
    for (const auto& [u, v] : setting.edges()) {
      if ((u == a && v == b)) continue;
      adjacency[u].push_back(v);
      adjacency[v].push_back(u);
    }
    CoveringPlacement candidate = TreeMinCover(adjacency, deadline, a);
    if (!have || candidate.size() < best.size()) {
      best = std::move(candidate);
      have = true;
    }
  }
  return best;
}

OverlapMetrics ComputeOverlap(const CoveringPlacement& placement,
                              const PatrollingSetting& setting,
                              const DistanceMatrix& dist) {
  OverlapMetrics metrics;
  const long long n = setting.num_targets();
  const long long m = placement.size();
  long long total = 0;
  for (int p : placement.positions) {
    total += static_cast<long long>(CoverageSet(setting, dist, p).size());
  }
  metrics.eta = total - n;
  metrics.tau = n > 0 ? static_cast<double>(metrics.eta) / n : 0.0;
  const long long denom = (n - m) * (m - 1);
  metrics.tau_hat =
      (m >= 2 && denom > 0) ? static_cast<double>(metrics.eta) / denom : 0.0;
  return metrics;
}

MinCoverResult MinCover(const PatrollingSetting& setting,
                        const DistanceMatrix& dist, CoverMethod method,
                        std::chrono::milliseconds budget) {
  MinCoverResult result;
  result.method = method;
  if (method == CoverMethod::kAuto) {
    if (IsTree(setting)) {
      method = CoverMethod::kTree;
    } else if (IsCycle(setting)) {
      method = CoverMethod::kCycle;
    } else {
      method = CoverMethod::kExact;
    }
    result.method = method;
    if (method == CoverMethod::kExact) {
      SetCoverInstance instance = ToSetCover(setting, dist);
      ExactCoverResult exact = ExactCover(instance, budget);
      result.placement = exact.placement;
      result.optimal = exact.optimal;
      if (!exact.optimal) {
        CoveringPlacement heuristic =
            LocalSearchImprove(GreedyCover(instance), instance);
        if (heuristic.size() < result.placement.size()) {
          result.placement = heuristic;
          result.method = CoverMethod::kGreedyLocalSearch;
        }
      }
      return result;
    }
  }
  switch (method) {
    case CoverMethod::kTree:
      result.placement = TreeMinCover(setting, 0);
      result.optimal = true;
      break;
    case CoverMethod::kCycle:
      result.placement = CycleMinCover(setting);
      result.optimal = true;
      break;
    case CoverMethod::kExact: {
      ExactCoverResult exact = ExactCover(ToSetCover(setting, dist), budget);
      result.placement = exact.placement;
      result.optimal = exact.optimal;
      break;
    }
    case CoverMethod::kGreedy:
      result.placement = GreedyCover(ToSetCover(setting, dist));
      break;
    case CoverMethod::kGreedyLocalSearch: {
      SetCoverInstance instance = ToSetCover(setting, dist);
      result.placement = LocalSearchImprove(GreedyCover(instance), instance);
      break;
    }
    case CoverMethod::kAuto:
      break;
  }
  return result;
}

}  // namespace alarmgame
