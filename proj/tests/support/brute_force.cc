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

#include "brute_force.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <string>

namespace alarmgame::testing {
namespace {

constexpr int kUnreached = std::numeric_limits<int>::max() / 4;

double Uniform01(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

std::vector<int> RandomDeadlines(int n, int dmin, int dmax,
                                 double target_fraction, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(dmin, dmax);
  std::vector<int> deadline(n, 0);
  for (int v = 0; v < n; ++v) {
    if (Uniform01(rng) < target_fraction) deadline[v] = d(rng);
  }
  if (std::all_of(deadline.begin(), deadline.end(),
                  [](int x) { return x == 0; })) {
    deadline[std::uniform_int_distribution<int>(0, n - 1)(rng)] = d(rng);
  }
  return deadline;
}

std::vector<double> RandomValues(int n, std::mt19937_64& rng) {
  std::vector<double> values(n);
  for (double& x : values) x = 0.05 + 0.95 * Uniform01(rng);
  return values;
}

std::vector<std::pair<int, int>> RandomTreeEdges(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  }
  return edges;
}

// Gaussian elimination with partial pivoting; false when singular.
bool Solve(std::vector<std::vector<double>> a, std::vector<double> b,
           std::vector<double>& x) {
  const int n = static_cast<int>(b.size());
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (std::abs(a[p][c]) < 1e-10) return false;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x.resize(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

void ForEachSubset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!f(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Instance MakeInstance(int n, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<int>& deadline,
                      const std::vector<double>& values) {
  RawGraph raw;
  for (int v = 0; v < n; ++v) raw.vertices.push_back("v" + std::to_string(v));
  for (const auto& [a, b] : edges) {
    raw.edges.emplace_back(raw.vertices[a], raw.vertices[b]);
  }
  for (int v = 0; v < n; ++v) {
    if (deadline[v] > 0) raw.targets.push_back({raw.vertices[v], values[v], deadline[v]});
  }
  PatrollingSetting setting = PatrollingSetting::Build(raw);
  AlarmSystem alarm = AlarmSystem::SingleSignal(setting);
  return Instance{std::move(setting), std::move(alarm)};
}

Instance RandomTree(int n, int dmin, int dmax, double target_fraction,
                    std::mt19937_64& rng) {
  auto edges = RandomTreeEdges(n, rng);
  return MakeInstance(n, edges, RandomDeadlines(n, dmin, dmax, target_fraction, rng),
                      RandomValues(n, rng));
}

Instance RandomCycle(int n, int dmin, int dmax, double target_fraction,
                     std::mt19937_64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(order[i], order[(i + 1) % n]);
  return MakeInstance(n, edges, RandomDeadlines(n, dmin, dmax, target_fraction, rng),
                      RandomValues(n, rng));
}

Instance RandomGraph(int n, int extra_edges, int dmin, int dmax,
                     double target_fraction, std::mt19937_64& rng) {
  auto edges = RandomTreeEdges(n, rng);
  std::set<std::pair<int, int>> present;
  for (auto [a, b] : edges) present.insert({std::min(a, b), std::max(a, b)});
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < extra_edges &&
                  static_cast<long long>(present.size()) < max_edges;) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (!present.insert({std::min(a, b), std::max(a, b)}).second) continue;
    edges.emplace_back(a, b);
    ++k;
  }
  return MakeInstance(n, edges, RandomDeadlines(n, dmin, dmax, target_fraction, rng),
                      RandomValues(n, rng));
}

std::vector<int> RelaxationDistances(const PatrollingSetting& setting,
                                     int source) {
  std::vector<int> d(setting.num_vertices(), kUnreached);
  d[source] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [a, b] : setting.edges()) {
      if (d[a] + 1 < d[b]) { d[b] = d[a] + 1; changed = true; }
      if (d[b] + 1 < d[a]) { d[a] = d[b] + 1; changed = true; }
    }
  }
  return d;
}

std::vector<int> BruteCoverageSet(const PatrollingSetting& setting, int v) {
  const std::vector<int> d = RelaxationDistances(setting, v);
  std::vector<int> out;
  for (int t = 0; t < setting.num_targets(); ++t) {
    if (d[setting.target_vertex(t)] <= setting.deadline(t)) out.push_back(t);
  }
  return out;
}

namespace {

std::vector<std::vector<bool>> CoverTable(const PatrollingSetting& setting) {
  std::vector<std::vector<bool>> table(setting.num_vertices(),
                                       std::vector<bool>(setting.num_targets()));
  for (int v = 0; v < setting.num_vertices(); ++v) {
    for (int t : BruteCoverageSet(setting, v)) table[v][t] = true;
  }
  return table;
}

bool Covers(const std::vector<std::vector<bool>>& table,
            const std::vector<int>& subset, int num_targets) {
  for (int t = 0; t < num_targets; ++t) {
    bool hit = false;
    for (int v : subset) hit = hit || table[v][t];
    if (!hit) return false;
  }
  return true;
}

}  // namespace

int BruteForceMinCoverSize(const PatrollingSetting& setting) {
  const auto table = CoverTable(setting);
  const int n = setting.num_vertices();
  for (int k = 1; k <= n; ++k) {
    bool found = false;
    ForEachSubset(n, k, [&](const std::vector<int>& s) {
      found = Covers(table, s, setting.num_targets());
      return !found;
    });
    if (found) return k;
  }
  return -1;
}

std::vector<std::vector<int>> AllCoveringPlacements(
    const PatrollingSetting& setting, int size) {
  const auto table = CoverTable(setting);
  std::vector<std::vector<int>> out;
  ForEachSubset(setting.num_vertices(), size, [&](const std::vector<int>& s) {
    if (Covers(table, s, setting.num_targets())) out.push_back(s);
    return true;
  });
  return out;
}

double SupportEnumerationValue(const MatrixGame& game) {
  // Shift to strictly positive payoffs so every basic solution has v != 0.
  double lo = std::numeric_limits<double>::infinity();
  for (double x : game.payoff) lo = std::min(lo, x);
  const double shift = 1.0 - lo;
  const int kmax = std::min(game.rows, game.cols);
  double best = std::numeric_limits<double>::quiet_NaN();
  for (int k = 1; k <= kmax && std::isnan(best); ++k) {
    ForEachSubset(game.rows, k, [&](const std::vector<int>& rows) {
      ForEachSubset(game.cols, k, [&](const std::vector<int>& cols) {
        // x^T M = v 1^T and M y = v 1 with sum x = sum y = 1.
        std::vector<std::vector<double>> m(k, std::vector<double>(k));
        std::vector<std::vector<double>> mt(k, std::vector<double>(k));
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) {
            m[i][j] = game.at(rows[i], cols[j]) + shift;
            mt[j][i] = m[i][j];
          }
        }
        std::vector<double> u, w;
        if (!Solve(mt, std::vector<double>(k, 1.0), u)) return true;
        if (!Solve(m, std::vector<double>(k, 1.0), w)) return true;
        const double su = std::accumulate(u.begin(), u.end(), 0.0);
        const double sw = std::accumulate(w.begin(), w.end(), 0.0);
        if (std::abs(su) < 1e-12 || std::abs(sw) < 1e-12) return true;
        const double v = 1.0 / su;
        std::vector<double> x(game.rows, 0.0), y(game.cols, 0.0);
        for (int i = 0; i < k; ++i) {
          x[rows[i]] = u[i] * v;
          y[cols[i]] = w[i] * v;
          if (x[rows[i]] < -1e-9 || y[cols[i]] < -1e-9) return true;
        }
        for (int c = 0; c < game.cols; ++c) {
          double p = 0.0;
          for (int r = 0; r < game.rows; ++r) p += x[r] * (game.at(r, c) + shift);
          if (p < v - 1e-9) return true;
        }
        for (int r = 0; r < game.rows; ++r) {
          double p = 0.0;
          for (int c = 0; c < game.cols; ++c) p += y[c] * (game.at(r, c) + shift);
          if (p > v + 1e-9) return true;
        }
        best = v - shift;
        return false;
      });
      return std::isnan(best);
    });
  }
  return best;
}

std::vector<std::vector<int>> PermutationRouteSets(
    const PatrollingSetting& setting, int start,
    const std::vector<int>& support) {
  std::vector<std::vector<int>> dist(setting.num_vertices());
  for (int v = 0; v < setting.num_vertices(); ++v) {
    dist[v] = RelaxationDistances(setting, v);
  }
  std::set<std::vector<int>> feasible;
  std::vector<int> visited;
  std::function<void(int, int)> extend = [&](int at, int time) {
    std::vector<int> sorted = visited;
    std::sort(sorted.begin(), sorted.end());
    feasible.insert(sorted);
    for (int t : support) {
      if (std::find(visited.begin(), visited.end(), t) != visited.end()) continue;
      const int v = setting.target_vertex(t);
      const int arrival = time + dist[at][v];
      if (arrival > setting.deadline(t)) continue;
      visited.push_back(t);
      extend(v, arrival);
      visited.pop_back();
    }
  };
  extend(start, 0);
  std::vector<std::vector<int>> maximal;
  for (const auto& s : feasible) {
    bool dominated = false;
    for (const auto& o : feasible) {
      if (o.size() > s.size() &&
          std::includes(o.begin(), o.end(), s.begin(), s.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(s);
  }
  return maximal;
}

std::vector<bool> CoveredTargets(const ResponseGame& game,
                                 const JointChoice& choice) {
  std::vector<bool> covered(game.num_targets(), false);
  for (int i = 0; i < game.num_resources(); ++i) {
    for (int global : game.route_sets[i].routes[choice[i]].visits) {
      const auto it = std::find(game.targets.begin(), game.targets.end(), global);
      covered[it - game.targets.begin()] = true;
    }
  }
  return covered;
}

namespace {

void ForEachJoint(const ResponseGame& game,
                  const std::function<void(const JointChoice&)>& f) {
  JointChoice c(game.num_resources(), 0);
  while (true) {
    f(c);
    int i = 0;
    while (i < game.num_resources() && ++c[i] == game.num_routes(i)) {
      c[i] = 0;
      ++i;
    }
    if (i == game.num_resources()) return;
  }
}

}  // namespace

double BruteForceBestResponse(const ResponseGame& game,
                              const std::vector<double>& attacker) {
  double best = -std::numeric_limits<double>::infinity();
  ForEachJoint(game, [&](const JointChoice& c) {
    const std::vector<bool> covered = CoveredTargets(game, c);
    double loss = 0.0;
    for (int t = 0; t < game.num_targets(); ++t) {
      if (!covered[t]) loss += attacker[t] * game.values[t];
    }
    best = std::max(best, 1.0 - loss);
  });
  return best;
}

double FullJointValue(const ResponseGame& game, int* num_joint) {
  std::vector<std::vector<bool>> rows;
  ForEachJoint(game, [&](const JointChoice& c) {
    rows.push_back(CoveredTargets(game, c));
  });
  MatrixGame matrix(static_cast<int>(rows.size()), game.num_targets());
  for (int r = 0; r < matrix.rows; ++r) {
    for (int t = 0; t < matrix.cols; ++t) {
      matrix.at(r, t) = rows[r][t] ? 1.0 : 1.0 - game.values[t];
    }
  }
  if (num_joint != nullptr) *num_joint = matrix.rows;
  return SolveZeroSum(matrix).value;
}

double GridTeamMaxmin(const ResponseGame& game, double step) {
  const int a = game.num_routes(0) <= game.num_routes(1) ? 0 : 1;
  const int b = 1 - a;
  const int n = game.num_targets();
  const int ka = game.num_routes(a), kb = game.num_routes(b);
  std::vector<std::vector<bool>> cover_a(ka), cover_b(kb);
  for (int r = 0; r < ka; ++r) {
    cover_a[r].assign(n, false);
    for (int global : game.route_sets[a].routes[r].visits) {
      cover_a[r][std::find(game.targets.begin(), game.targets.end(), global) -
                 game.targets.begin()] = true;
    }
  }
  for (int r = 0; r < kb; ++r) {
    cover_b[r].assign(n, false);
    for (int global : game.route_sets[b].routes[r].visits) {
      cover_b[r][std::find(game.targets.begin(), game.targets.end(), global) -
                 game.targets.begin()] = true;
    }
  }
  const int units = static_cast<int>(std::lround(1.0 / step));
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> parts(ka, 0);
  MatrixGame reply(kb, n);
  // Compositions of `units` into ka non-negative parts.
  std::function<void(int, int)> scan = [&](int idx, int left) {
    if (idx == ka - 1) {
      parts[idx] = left;
      for (int t = 0; t < n; ++t) {
        double miss_a = 0.0;
        for (int r = 0; r < ka; ++r) {
          if (!cover_a[r][t]) miss_a += parts[r] * step;
        }
        for (int r = 0; r < kb; ++r) {
          reply.at(r, t) = 1.0 - game.values[t] * miss_a * (cover_b[r][t] ? 0.0 : 1.0);
        }
      }
      best = std::max(best, SolveZeroSum(reply).value);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      parts[idx] = x;
      scan(idx + 1, left - x);
    }
  };
  scan(0, units);
  return best;
}

double Pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

double Harmonic(int n) {
  double h = 0.0;
  for (int k = 1; k <= n; ++k) h += 1.0 / k;
  return h;
}

}  // namespace alarmgame::testing
