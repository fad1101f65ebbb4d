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

#include "alarmgame/model.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace alarmgame {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kBadValue: return "BadValue";
    case ErrorCode::kBadDeadline: return "BadDeadline";
    case ErrorCode::kDanglingEdge: return "DanglingEdge";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kWeightedEdge: return "WeightedEdge";
    case ErrorCode::kBadProbability: return "BadProbability";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kUnknownTarget: return "UnknownTarget";
    case ErrorCode::kUnknownSignal: return "UnknownSignal";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kBudgetTooSmall: return "BudgetTooSmall";
  }
  return "Unknown";
}

PatrollingSetting PatrollingSetting::Build(const RawGraph& raw) {
  PatrollingSetting s;
  if (raw.vertices.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "graph has no vertices");
  }
  s.vertex_ids_ = raw.vertices;
  for (int v = 0; v < static_cast<int>(raw.vertices.size()); ++v) {
    if (!s.vertex_index_.emplace(raw.vertices[v], v).second) {
      throw Error(ErrorCode::kDuplicateVertex,
                  "vertex '" + raw.vertices[v] + "' declared twice");
    }
  }
  const int n = s.num_vertices();
  s.adjacency_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : raw.edges) {
    auto ia = s.vertex_index_.find(a);
    auto ib = s.vertex_index_.find(b);
    if (ia == s.vertex_index_.end() || ib == s.vertex_index_.end()) {
      throw Error(ErrorCode::kDanglingEdge, "edge (" + a + ", " + b +
                                                ") references an undeclared "
                                                "vertex");
    }
    int u = ia->second, v = ib->second;
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop, "self-loop on vertex '" + a + "'");
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "edge (" + a + ", " + b + ") declared twice");
    }
    s.edges_.emplace_back(u, v);
    s.adjacency_[u].push_back(v);
    s.adjacency_[v].push_back(u);
  }
  for (auto& adj : s.adjacency_) std::sort(adj.begin(), adj.end());

  // Connectivity.
  std::vector<char> reached(n, 0);
  std::deque<int> queue = {0};
  reached[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : s.adjacency_[u]) {
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        queue.push_back(w);
      }
    }
  }
  if (count != n) {
    int missing = static_cast<int>(
        std::find(reached.begin(), reached.end(), 0) - reached.begin());
    throw Error(ErrorCode::kDisconnectedGraph,
                "vertex '" + s.vertex_ids_[missing] +
                    "' is not reachable from '" + s.vertex_ids_[0] + "'");
  }

  s.vertex_target_.assign(n, -1);
  for (const RawTarget& t : raw.targets) {
    auto it = s.vertex_index_.find(t.id);
    if (it == s.vertex_index_.end()) {
      throw Error(ErrorCode::kUnknownVertex,
                  "target '" + t.id + "' is not a declared vertex");
    }
    if (s.vertex_target_[it->second] >= 0) {
      throw Error(ErrorCode::kDuplicateVertex,
                  "target '" + t.id + "' declared twice");
    }
    if (!(t.value > 0.0 && t.value <= 1.0)) {
      throw Error(ErrorCode::kBadValue, "target '" + t.id + "' has value " +
                                            std::to_string(t.value) +
                                            " outside (0, 1]");
    }
    if (t.deadline < 1) {
      throw Error(ErrorCode::kBadDeadline,
                  "target '" + t.id + "' has deadline " +
                      std::to_string(t.deadline) + " < 1");
    }
    s.vertex_target_[it->second] = s.num_targets();
    s.target_vertex_.push_back(it->second);
    s.values_.push_back(t.value);
    s.deadlines_.push_back(t.deadline);
  }
  return s;
}

int PatrollingSetting::VertexIndex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) {
    throw Error(ErrorCode::kUnknownVertex,
                "no vertex '" + std::string(id) + "'");
  }
  return it->second;
}

int PatrollingSetting::TargetIndex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end() || vertex_target_[it->second] < 0) {
    throw Error(ErrorCode::kUnknownTarget,
                "no target '" + std::string(id) + "'");
  }
  return vertex_target_[it->second];
}

double PatrollingSetting::MaxValue() const {
  double best = 0.0;
  for (double v : values_) best = std::max(best, v);
  return best;
}

RawGraph PatrollingSetting::ToRaw() const {
  RawGraph raw;
  raw.vertices = vertex_ids_;
  for (const auto& [u, v] : edges_) {
    raw.edges.emplace_back(vertex_ids_[u], vertex_ids_[v]);
  }
  for (int t = 0; t < num_targets(); ++t) {
    raw.targets.push_back({target_id(t), values_[t], deadlines_[t]});
  }
  return raw;
}

DistanceMatrix AllPairsDistances(const PatrollingSetting& setting) {
  const int n = setting.num_vertices();
  std::vector<int> dist(static_cast<std::size_t>(n) * n, kInfinity);
  std::vector<int> queue(n);
  for (int src = 0; src < n; ++src) {
    int* row = dist.data() + static_cast<std::size_t>(src) * n;
    int head = 0, tail = 0;
    row[src] = 0;
    queue[tail++] = src;
    while (head < tail) {
      int u = queue[head++];
      for (int w : setting.neighbors(u)) {
        if (row[w] == kInfinity) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(dist));
}

AlarmSystem AlarmSystem::Build(const PatrollingSetting& setting,
                               const std::vector<RawSignal>& raw) {
  AlarmSystem alarm;
  alarm.num_targets_ = setting.num_targets();
  if (raw.empty() && setting.num_targets() > 0) {
    throw Error(ErrorCode::kBadProbability, "alarm system has no signals");
  }
  alarm.probs_.assign(raw.size() * setting.num_targets(), 0.0);
  std::set<std::string> ids;
  for (int s = 0; s < static_cast<int>(raw.size()); ++s) {
    if (!ids.insert(raw[s].id).second) {
      throw Error(ErrorCode::kBadProbability,
                  "signal '" + raw[s].id + "' declared twice");
    }
    alarm.signal_ids_.push_back(raw[s].id);
    for (const auto& [target, p] : raw[s].probs) {
      int v = setting.VertexIndex(target);
      if (!setting.IsTarget(v)) {
        throw Error(ErrorCode::kBadProbability,
                    "signal '" + raw[s].id +
                        "' assigns probability to non-target vertex '" +
                        target + "'");
      }
      if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::kBadProbability,
                    "p(" + raw[s].id + " | " + target + ") = " +
                        std::to_string(p) + " outside [0, 1]");
      }
      alarm.probs_[static_cast<std::size_t>(s) * alarm.num_targets_ +
                   setting.TargetOfVertex(v)] = p;
    }
  }
  for (int t = 0; t < setting.num_targets(); ++t) {
    double total = 0.0;
    for (int s = 0; s < alarm.num_signals(); ++s) total += alarm.prob(s, t);
    if (std::abs(total - 1.0) > 1e-9) {
      throw Error(ErrorCode::kBadProbability,
                  "signal probabilities of target '" + setting.target_id(t) +
                      "' sum to " + std::to_string(total) + ", expected 1");
    }
  }
  return alarm;
}

AlarmSystem AlarmSystem::SingleSignal(const PatrollingSetting& setting,
                                      std::string id) {
  AlarmSystem alarm;
  alarm.num_targets_ = setting.num_targets();
  alarm.signal_ids_.push_back(std::move(id));
  alarm.probs_.assign(setting.num_targets(), 1.0);
  return alarm;
}

int AlarmSystem::SignalIndex(std::string_view id) const {
  for (int s = 0; s < num_signals(); ++s) {
    if (signal_ids_[s] == id) return s;
  }
  throw Error(ErrorCode::kUnknownSignal, "no signal '" + std::string(id) + "'");
}

std::vector<int> AlarmSystem::SignalSupport(int s) const {
  if (s < 0 || s >= num_signals()) {
    throw Error(ErrorCode::kUnknownSignal,
                "signal index " + std::to_string(s) + " out of range");
  }
  std::vector<int> support;
  for (int t = 0; t < num_targets_; ++t) {
    if (prob(s, t) > 0.0) support.push_back(t);
  }
  return support;
}

std::vector<int> AlarmSystem::TargetSupport(int t) const {
  if (t < 0 || t >= num_targets_) {
    throw Error(ErrorCode::kUnknownTarget,
                "target index " + std::to_string(t) + " out of range");
  }
  std::vector<int> support;
  for (int s = 0; s < num_signals(); ++s) {
    if (prob(s, t) > 0.0) support.push_back(s);
  }
  return support;
}

std::vector<RawSignal> AlarmSystem::ToRaw(
    const PatrollingSetting& setting) const {
  std::vector<RawSignal> raw;
  for (int s = 0; s < num_signals(); ++s) {
    RawSignal signal{signal_ids_[s], {}};
    for (int t = 0; t < num_targets_; ++t) {
      if (prob(s, t) > 0.0) signal.probs[setting.target_id(t)] = prob(s, t);
    }
    raw.push_back(std::move(signal));
  }
  return raw;
}

std::vector<int> CoverageSet(const PatrollingSetting& setting,
                             const DistanceMatrix& dist, int v) {
  if (v < 0 || v >= setting.num_vertices()) {
    throw Error(ErrorCode::kUnknownVertex,
                "vertex index " + std::to_string(v) + " out of range");
  }
  std::vector<int> covered;
  for (int t = 0; t < setting.num_targets(); ++t) {
    if (dist(v, setting.target_vertex(t)) <= setting.deadline(t)) {
      covered.push_back(t);
    }
  }
  return covered;
}

}  // namespace alarmgame
