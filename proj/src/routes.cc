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

#include "alarmgame/routes.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace alarmgame {
namespace {

template <int W>
struct Mask {
  std::array<uint64_t, W> words{};

  void Set(int i) { words[i >> 6] |= uint64_t{1} << (i & 63); }
  void Reset(int i) { words[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool Test(int i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  int Count() const {
    int c = 0;
    for (uint64_t w : words) c += std::popcount(w);
    return c;
  }
  bool IsSubsetOf(const Mask& o) const {
    for (int i = 0; i < W; ++i) {
      if (words[i] & ~o.words[i]) return false;
    }
    return true;
  }
  bool operator==(const Mask&) const = default;
  auto operator<=>(const Mask&) const = default;
};

template <int W>
struct MaskHash {
  std::size_t operator()(const Mask<W>& m) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t w : m.words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

template <int W>
struct StateKey {
  Mask<W> mask;
  int last;
  bool operator==(const StateKey&) const = default;
};

template <int W>
struct StateKeyHash {
  std::size_t operator()(const StateKey<W>& k) const {
    return MaskHash<W>()(k.mask) * 31 + static_cast<std::size_t>(k.last);
  }
};

struct StateValue {
  int time;
  int prev;  // local index of the previous visit, -1 for the first
};

template <int W>
RouteSet SolveRoutes(const PatrollingSetting& setting,
                     const DistanceMatrix& dist, int start,
                     const std::vector<int>& local,
                     const RouteOptions& options) {
  using Key = StateKey<W>;
  using Layer = std::unordered_map<Key, StateValue, StateKeyHash<W>>;
  const int k = static_cast<int>(local.size());
  const bool beam = k > options.exact_limit;
  RouteSet result;

  auto vertex = [&](int j) { return setting.target_vertex(local[j]); };
  auto deadline = [&](int j) { return setting.deadline(local[j]); };

  auto relax = [](Layer& layer, const Key& key, StateValue value) {
    auto [it, inserted] = layer.emplace(key, value);
    if (!inserted &&
        std::tie(value.time, value.prev) <
            std::tie(it->second.time, it->second.prev)) {
      it->second = value;
    }
  };

  std::vector<Layer> layers(1);
  for (int j = 0; j < k; ++j) {
    Key key;
    key.mask.Set(j);
    key.last = j;
    relax(layers[0], key, {dist(start, vertex(j)), -1});
  }
  while (!layers.back().empty()) {
    Layer& current = layers.back();
    if (beam && current.size() > options.beam_width) {
      std::vector<std::pair<Key, StateValue>> entries(current.begin(),
                                                      current.end());
      std::sort(entries.begin(), entries.end(),
                [](const auto& a, const auto& b) {
                  return std::tie(a.second.time, a.first.mask, a.first.last) <
                         std::tie(b.second.time, b.first.mask, b.first.last);
                });
      entries.resize(options.beam_width);
      current = Layer(entries.begin(), entries.end());
      result.complete = false;
    }
    Layer next;
    for (const auto& [key, value] : current) {
      const int from = vertex(key.last);
      for (int j = 0; j < k; ++j) {
        if (key.mask.Test(j)) continue;
        const int arrival = value.time + dist(from, vertex(j));
        if (arrival > deadline(j)) continue;
        Key succ{key.mask, j};
        succ.mask.Set(j);
        relax(next, succ, {arrival, key.last});
      }
    }
    layers.push_back(std::move(next));
  }

  // Earliest completion per visited set.
  std::unordered_map<Mask<W>, std::pair<int, int>, MaskHash<W>> best;
  for (const Layer& layer : layers) {
    for (const auto& [key, value] : layer) {
      auto candidate = std::make_pair(value.time, key.last);
      auto [it, inserted] = best.emplace(key.mask, candidate);
      if (!inserted && candidate < it->second) it->second = candidate;
    }
  }

  // Feasible visited sets are closed under removal (triangle inequality), so
  // a set is maximal exactly when no one-target extension is feasible.
  std::vector<Mask<W>> maximal;
  for (const auto& [mask, unused] : best) {
    bool extendable = false;
    for (int j = 0; j < k && !extendable; ++j) {
      if (mask.Test(j)) continue;
      Mask<W> bigger = mask;
      bigger.Set(j);
      extendable = best.count(bigger) > 0;
    }
    if (!extendable) maximal.push_back(mask);
  }
  std::sort(maximal.begin(), maximal.end());
  if (beam) {
    // Truncated layers break subset closure; fall back to pairwise checks.
    std::vector<Mask<W>> kept;
    for (const auto& m : maximal) {
      bool dominated = false;
      for (const auto& o : maximal) {
        if (!(o == m) && m.IsSubsetOf(o)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(m);
    }
    maximal = std::move(kept);
  }

  for (const Mask<W>& mask : maximal) {
    CoveringRoute route;
    route.start = start;
    Mask<W> m = mask;
    int last = best[mask].second;
    std::vector<int> order;
    while (last >= 0) {
      order.push_back(last);
      const int depth = m.Count() - 1;
      const StateValue& value = layers[depth].at(Key{m, last});
      m.Reset(last);
      last = value.prev;
    }
    std::reverse(order.begin(), order.end());
    int time = 0, at = start;
    for (int j : order) {
      time += dist(at, vertex(j));
      at = vertex(j);
      route.visits.push_back(local[j]);
      route.arrivals.push_back(time);
    }
    result.routes.push_back(std::move(route));
  }
  std::sort(result.routes.begin(), result.routes.end(),
            [](const CoveringRoute& a, const CoveringRoute& b) {
              if (a.visits.size() != b.visits.size()) {
                return a.visits.size() > b.visits.size();
              }
              std::vector<int> sa = a.visits, sb = b.visits;
              std::sort(sa.begin(), sa.end());
              std::sort(sb.begin(), sb.end());
              return sa < sb;
            });
  return result;
}

}  // namespace

RouteSet CoveringRoutes(const PatrollingSetting& setting,
                        const DistanceMatrix& dist, int start,
                        std::span<const int> support,
                        const RouteOptions& options) {
  if (start < 0 || start >= setting.num_vertices()) {
    throw Error(ErrorCode::kUnknownVertex, "route start out of range");
  }
  // Only targets reachable on their own can appear in any route.
  std::vector<int> local;
  for (int t : support) {
    if (t < 0 || t >= setting.num_targets()) {
      throw Error(ErrorCode::kUnknownTarget, "support target out of range");
    }
    if (dist(start, setting.target_vertex(t)) <= setting.deadline(t)) {
      local.push_back(t);
    }
  }
  std::sort(local.begin(), local.end());
  local.erase(std::unique(local.begin(), local.end()), local.end());

  RouteSet result;
  const std::size_t k = local.size();
  if (k <= 64) {
    result = SolveRoutes<1>(setting, dist, start, local, options);
  } else if (k <= 128) {
    result = SolveRoutes<2>(setting, dist, start, local, options);
  } else if (k <= 256) {
    result = SolveRoutes<4>(setting, dist, start, local, options);
  } else if (k <= 512) {
    result = SolveRoutes<8>(setting, dist, start, local, options);
  } else if (k <= 1024) {
    result = SolveRoutes<16>(setting, dist, start, local, options);
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "more than 1024 reachable targets from one start vertex");
  }
  if (result.routes.empty()) {
    result.routes.push_back(CoveringRoute{start, {}, {}});
  }
  return result;
}

bool Covers(const CoveringRoute& route, int target) {
  return std::find(route.visits.begin(), route.visits.end(), target) !=
         route.visits.end();
}

bool JointCovers(const JointRoute& route, int target) {
  return std::any_of(route.per_resource.begin(), route.per_resource.end(),
                     [&](const CoveringRoute& r) { return Covers(r, target); });
}

bool IsValidRoute(const CoveringRoute& route, const PatrollingSetting& setting,
                  const DistanceMatrix& dist, std::span<const int> support) {
  if (route.visits.size() != route.arrivals.size()) return false;
  int at = route.start, time = 0;
  std::unordered_set<int> seen;
  for (std::size_t i = 0; i < route.visits.size(); ++i) {
    const int t = route.visits[i];
    if (t < 0 || t >= setting.num_targets()) return false;
    if (std::find(support.begin(), support.end(), t) == support.end()) {
      return false;
    }
    if (!seen.insert(t).second) return false;
    const int expected = time + dist(at, setting.target_vertex(t));
    if (route.arrivals[i] != expected) return false;
    if (i > 0 && route.arrivals[i] <= route.arrivals[i - 1]) return false;
    if (expected > setting.deadline(t)) return false;
    time = expected;
    at = setting.target_vertex(t);
  }
  return true;
}

}  // namespace alarmgame
