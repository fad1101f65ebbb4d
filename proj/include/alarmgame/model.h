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

#ifndef ALARMGAME_MODEL_H_
#define ALARMGAME_MODEL_H_

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alarmgame/error.h"

namespace alarmgame {

// Unbounded deadline / distance sentinel. Ordered above every real value.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

struct RawTarget {
  std::string id;
  double value = 1.0;
  int deadline = 1;
};

// Unvalidated graph description, as read from an instance file.
struct RawGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<RawTarget> targets;
};

// Undirected, unit-cost, connected graph with valued targets.
//
// Vertices are addressed by dense indices in declaration order; targets by
// dense indices in the order of the `targets` list. Every target is also a
// vertex. Immutable after construction.
class PatrollingSetting {
 public:
  // Validates `raw` and builds the setting. Throws Error on
  // DisconnectedGraph, BadValue, BadDeadline, DanglingEdge, DuplicateVertex,
  // SelfLoop or DuplicateEdge.
  static PatrollingSetting Build(const RawGraph& raw);

  int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
  int num_targets() const { return static_cast<int>(target_vertex_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  // Throws UnknownVertex.
  int VertexIndex(std::string_view id) const;

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int target_vertex(int t) const { return target_vertex_[t]; }
  // Returns -1 for non-target vertices.
  int TargetOfVertex(int v) const { return vertex_target_[v]; }
  bool IsTarget(int v) const { return vertex_target_[v] >= 0; }
  const std::string& target_id(int t) const {
    return vertex_ids_[target_vertex_[t]];
  }
  // Throws UnknownTarget.
  int TargetIndex(std::string_view id) const;

  double value(int t) const { return values_[t]; }
  int deadline(int t) const { return deadlines_[t]; }
  // Deadline of the target hosted at `v`, kInfinity for non-targets.
  int VertexDeadline(int v) const {
    return IsTarget(v) ? deadlines_[vertex_target_[v]] : kInfinity;
  }
  double MaxValue() const;

  RawGraph ToRaw() const;

 private:
  std::vector<std::string> vertex_ids_;
  std::unordered_map<std::string, int> vertex_index_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> target_vertex_;
  std::vector<int> vertex_target_;
  std::vector<double> values_;
  std::vector<int> deadlines_;
};

// Shortest hop counts between every pair of vertices.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> dist)
      : n_(n), dist_(std::move(dist)) {}

  int operator()(int u, int v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  int size() const { return n_; }

 private:
  int n_ = 0;
  std::vector<int> dist_;
};

// Breadth-first search from every vertex.
DistanceMatrix AllPairsDistances(const PatrollingSetting& setting);

struct RawSignal {
  std::string id;
  // Target id -> p(signal | target).
  std::map<std::string, double> probs;
};

// Signal set S with the conditional table p(s|t). Each attack triggers
// exactly one signal: for every target the column sums to 1.
class AlarmSystem {
 public:
  // Throws BadProbability, UnknownTarget or UnknownVertex (probability mass
  // on a non-target vertex).
  static AlarmSystem Build(const PatrollingSetting& setting,
                           const std::vector<RawSignal>& raw);
  // One signal that every target triggers with probability one.
  static AlarmSystem SingleSignal(const PatrollingSetting& setting,
                                  std::string id = "s0");

  int num_signals() const { return static_cast<int>(signal_ids_.size()); }
  int num_targets() const { return num_targets_; }
  const std::string& signal_id(int s) const { return signal_ids_[s]; }
  // Throws UnknownSignal.
  int SignalIndex(std::string_view id) const;

  double prob(int s, int t) const {
    return probs_[static_cast<std::size_t>(s) * num_targets_ + t];
  }

  // T(s) = {t | p(s|t) > 0}, ascending target indices. Throws UnknownSignal.
  std::vector<int> SignalSupport(int s) const;
  // S(t) = {s | p(s|t) > 0}, ascending signal indices. Throws UnknownTarget.
  std::vector<int> TargetSupport(int t) const;

  std::vector<RawSignal> ToRaw(const PatrollingSetting& setting) const;

 private:
  std::vector<std::string> signal_ids_;
  int num_targets_ = 0;
  std::vector<double> probs_;
};

// A patrolling setting together with its alarm system.
struct Instance {
  PatrollingSetting setting;
  AlarmSystem alarm;
};

// {t in T | dist(v, t) <= deadline(t)}, ascending. Throws UnknownVertex.
std::vector<int> CoverageSet(const PatrollingSetting& setting,
                             const DistanceMatrix& dist, int v);

}  // namespace alarmgame

#endif  // ALARMGAME_MODEL_H_
