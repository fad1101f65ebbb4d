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

#include "alarmgame/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alarmgame/error.h"

namespace alarmgame {
namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kCostTolerance = 1e-9;

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * std::size_t(cols + 1)) {}

  double& at(int r, int c) { return data_[std::size_t(r) * (cols_ + 1) + c]; }
  double at(int r, int c) const {
    return data_[std::size_t(r) * (cols_ + 1) + c];
  }
  double& rhs(int r) { return at(r, cols_); }
  // Row `rows_` holds reduced costs; its rhs cell holds minus the objective.
  double& cost(int c) { return at(rows_, c); }

  void Pivot(int pr, int pc) {
    const double inv = 1.0 / at(pr, pc);
    double* prow = &at(pr, 0);
    for (int c = 0; c <= cols_; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      double* row = &at(r, 0);
      const double f = row[pc];
      if (f == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) row[c] -= f * prow[c];
      row[pc] = 0.0;
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_, cols_;
  std::vector<double> data_;
};

enum class PhaseResult { kOptimal, kUnbounded, kIterationLimit };

// Maximizes the cost row currently loaded in the tableau.
PhaseResult RunPhase(Tableau& t, std::vector<int>& basis,
                     const std::vector<char>& blocked, int& iterations,
                     int iteration_limit) {
  const int m = t.rows(), n = t.cols();
  const int degenerate_limit = 10 * (m + n);
  int degenerate_run = 0;
  bool bland = false;
  while (true) {
    if (iterations >= iteration_limit) return PhaseResult::kIterationLimit;
    int enter = -1;
    double best = kCostTolerance;
    for (int c = 0; c < n; ++c) {
      if (blocked[c]) continue;
      const double rc = t.cost(c);
      if (rc > best) {
        enter = c;
        if (bland) break;
        best = rc;
      }
    }
    if (enter < 0) return PhaseResult::kOptimal;

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m; ++r) {
      const double a = t.at(r, enter);
      if (a <= kPivotTolerance) continue;
      const double ratio = std::max(0.0, t.rhs(r)) / a;
      if (ratio < best_ratio - 1e-12 ||
          (ratio <= best_ratio + 1e-12 && leave >= 0 &&
           basis[r] < basis[leave])) {
        best_ratio = std::min(best_ratio, ratio);
        leave = r;
      }
    }
    if (leave < 0) return PhaseResult::kUnbounded;

    if (best_ratio <= 1e-12) {
      if (++degenerate_run > degenerate_limit) bland = true;
    } else {
      degenerate_run = 0;
    }
    t.Pivot(leave, enter);
    basis[leave] = enter;
    ++iterations;
  }
}

}  // namespace

std::string_view LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration_limit";
  }
  return "unknown";
}

LpSolution SolveLp(const LinearProgram& lp) {
  const int n = lp.num_variables;
  const int m = static_cast<int>(lp.rows.size());
  for (const auto& row : lp.rows) {
    if (static_cast<int>(row.coefficients.size()) != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "constraint row width does not match variable count");
    }
  }

  // Column layout: structural | slack or surplus | artificial.
  std::vector<ConstraintSense> sense(m);
  std::vector<double> sign(m, 1.0);
  int num_slack = 0, num_art = 0;
  for (int i = 0; i < m; ++i) {
    sense[i] = lp.rows[i].sense;
    if (lp.rows[i].rhs < 0) {
      sign[i] = -1.0;
      if (sense[i] == ConstraintSense::kLessEqual) {
        sense[i] = ConstraintSense::kGreaterEqual;
      } else if (sense[i] == ConstraintSense::kGreaterEqual) {
        sense[i] = ConstraintSense::kLessEqual;
      }
    }
    if (sense[i] != ConstraintSense::kEqual) ++num_slack;
    if (sense[i] != ConstraintSense::kLessEqual) ++num_art;
  }
  const int cols = n + num_slack + num_art;
  const int first_art = n + num_slack;
  Tableau t(m, cols);
  std::vector<int> basis(m);
  int slack = n, art = first_art;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t.at(i, j) = sign[i] * lp.rows[i].coefficients[j];
    t.rhs(i) = sign[i] * lp.rows[i].rhs;
    switch (sense[i]) {
      case ConstraintSense::kLessEqual:
        t.at(i, slack) = 1.0;
        basis[i] = slack++;
        break;
      case ConstraintSense::kGreaterEqual:
        t.at(i, slack++) = -1.0;
        t.at(i, art) = 1.0;
        basis[i] = art++;
        break;
      case ConstraintSense::kEqual:
        t.at(i, art) = 1.0;
        basis[i] = art++;
        break;
    }
  }

  LpSolution solution;
  const int iteration_limit = 50 * (m + cols) + 1000;
  std::vector<char> blocked(cols, 0);

  if (num_art > 0) {
    // Phase 1: maximize -(sum of artificials).
    for (int c = 0; c <= cols; ++c) t.cost(c) = 0.0;
    for (int c = first_art; c < cols; ++c) t.cost(c) = -1.0;
    for (int i = 0; i < m; ++i) {
      if (basis[i] >= first_art) {
        for (int c = 0; c <= cols; ++c) t.cost(c) += t.at(i, c);
      }
    }
    PhaseResult r = RunPhase(t, basis, blocked, solution.iterations,
                             iteration_limit);
    if (r == PhaseResult::kIterationLimit) {
      solution.status = LpStatus::kIterationLimit;
      return solution;
    }
    if (-t.cost(cols) < -kFeasibilityTolerance ||
        t.cost(cols) > kFeasibilityTolerance) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    // Drive artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (basis[i] < first_art) continue;
      int pc = -1;
      double best = kPivotTolerance;
      for (int c = 0; c < first_art; ++c) {
        if (std::abs(t.at(i, c)) > best) {
          best = std::abs(t.at(i, c));
          pc = c;
        }
      }
      if (pc >= 0) {
        t.Pivot(i, pc);
        basis[i] = pc;
      }
    }
    for (int c = first_art; c < cols; ++c) blocked[c] = 1;
  }

  // Phase 2.
  const double direction = lp.maximize ? 1.0 : -1.0;
  for (int c = 0; c <= cols; ++c) t.cost(c) = 0.0;
  for (int j = 0; j < n; ++j) t.cost(j) = direction * lp.objective[j];
  for (int i = 0; i < m; ++i) {
    const int b = basis[i];
    const double cb = b < n ? direction * lp.objective[b] : 0.0;
    if (cb == 0.0) continue;
    for (int c = 0; c <= cols; ++c) t.cost(c) -= cb * t.at(i, c);
  }
  PhaseResult r =
      RunPhase(t, basis, blocked, solution.iterations, iteration_limit);
  if (r == PhaseResult::kIterationLimit) {
    solution.status = LpStatus::kIterationLimit;
    return solution;
  }
  if (r == PhaseResult::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }
  solution.status = LpStatus::kOptimal;
  solution.x.assign(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) solution.x[basis[i]] = std::max(0.0, t.rhs(i));
  }
  solution.objective = 0.0;
  for (int j = 0; j < n; ++j) solution.objective += lp.objective[j] * solution.x[j];
  return solution;
}

void CleanStrategy(MixedStrategy& strategy) {
  double total = 0.0;
  for (double& p : strategy) {
    if (!(p >= 1e-9)) p = 0.0;
    total += p;
  }
  if (total <= 0.0) {
    if (!strategy.empty()) {
      std::fill(strategy.begin(), strategy.end(), 0.0);
      strategy[0] = 1.0;
    }
    return;
  }
  for (double& p : strategy) p /= total;
}

ZeroSumSolution SolveZeroSum(const MatrixGame& game) {
  if (game.rows <= 0 || game.cols <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty payoff matrix");
  }
  const int R = game.rows, C = game.cols;
  double lo = game.payoff[0];
  for (double p : game.payoff) lo = std::min(lo, p);
  // Shift payoffs to be >= 1 so the non-negative value variable is exact.
  const double shift = 1.0 - lo;

  ZeroSumSolution out;
  {
    LinearProgram lp(R + 1);
    lp.objective[R] = 1.0;
    for (int c = 0; c < C; ++c) {
      std::vector<double> row(R + 1);
      for (int r = 0; r < R; ++r) row[r] = -(game.at(r, c) + shift);
      row[R] = 1.0;
      lp.AddRow(std::move(row), ConstraintSense::kLessEqual, 0.0);
    }
    std::vector<double> sum(R + 1, 1.0);
    sum[R] = 0.0;
    lp.AddRow(std::move(sum), ConstraintSense::kEqual, 1.0);
    LpSolution s = SolveLp(lp);
    out.status = s.status;
    if (s.status != LpStatus::kOptimal) return out;
    out.row_strategy.assign(s.x.begin(), s.x.begin() + R);
    out.value = s.x[R] - shift;
  }
  {
    LinearProgram lp(C + 1);
    lp.maximize = false;
    lp.objective[C] = 1.0;
    for (int r = 0; r < R; ++r) {
      std::vector<double> row(C + 1);
      for (int c = 0; c < C; ++c) row[c] = game.at(r, c) + shift;
      row[C] = -1.0;
      lp.AddRow(std::move(row), ConstraintSense::kLessEqual, 0.0);
    }
    std::vector<double> sum(C + 1, 1.0);
    sum[C] = 0.0;
    lp.AddRow(std::move(sum), ConstraintSense::kEqual, 1.0);
    LpSolution s = SolveLp(lp);
    if (s.status != LpStatus::kOptimal) {
      out.status = s.status;
      return out;
    }
    out.col_strategy.assign(s.x.begin(), s.x.begin() + C);
    out.col_value = s.x[C] - shift;
  }
  CleanStrategy(out.row_strategy);
  CleanStrategy(out.col_strategy);
  return out;
}

}  // namespace alarmgame
