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

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "alarmgame/pipeline.h"
#include "alarmgame/random.h"

namespace alarmgame {

int ScheduledDeadline(int n_targets) {
  if (n_targets <= 40) return 3;
  if (n_targets <= 80) return 4;
  return 5;
}

Instance GenerateInstance(const GeneratorParams& params) {
  const int n = params.n_targets;
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one target");
  }
  std::mt19937_64 rng(DeriveSeed(params.seed, "generator"));
  RawGraph raw;
  for (int v = 0; v < n; ++v) raw.vertices.push_back("v" + std::to_string(v));

  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[UniformIndex(rng, i + 1)]);
  }
  std::set<std::pair<int, int>> present;
  auto add_edge = [&](int a, int b) {
    auto key = std::minmax(a, b);
    if (a == b || !present.insert(key).second) return false;
    raw.edges.emplace_back(raw.vertices[key.first], raw.vertices[key.second]);
    return true;
  };
  for (int i = 1; i < n; ++i) add_edge(order[i], order[UniformIndex(rng, i)]);
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  const long long wanted = std::min<long long>(
      max_edges, std::llround(params.mean_degree * n / 2.0));
  while (static_cast<long long>(present.size()) < wanted) {
    add_edge(UniformIndex(rng, n), UniformIndex(rng, n));
  }
  const int deadline =
      params.deadline > 0 ? params.deadline : ScheduledDeadline(n);
  for (int v = 0; v < n; ++v) {
    raw.targets.push_back({raw.vertices[v], 1.0 - UniformUnit(rng), deadline});
  }
  PatrollingSetting setting = PatrollingSetting::Build(raw);
  AlarmSystem alarm = AlarmSystem::SingleSignal(setting);
  return Instance{std::move(setting), std::move(alarm)};
}

}  // namespace alarmgame
