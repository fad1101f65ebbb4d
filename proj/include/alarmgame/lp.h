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

#ifndef ALARMGAME_LP_H_
#define ALARMGAME_LP_H_

#include <string_view>
#include <vector>

namespace alarmgame {

enum class ConstraintSense { kLessEqual, kGreaterEqual, kEqual };

// Linear program over non-negative variables:
//   maximize (or minimize) objective . x
//   subject to rows[i].coefficients . x  <sense>  rows[i].rhs,  x >= 0.
struct LinearProgram {
  struct Row {
    std::vector<double> coefficients;
    ConstraintSense sense = ConstraintSense::kLessEqual;
    double rhs = 0.0;
  };

  int num_variables = 0;
  std::vector<double> objective;
  bool maximize = true;
  std::vector<Row> rows;

  explicit LinearProgram(int n = 0) : num_variables(n), objective(n, 0.0) {}

  void AddRow(std::vector<double> coefficients, ConstraintSense sense,
              double rhs) {
    rows.push_back({std::move(coefficients), sense, rhs});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string_view LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
  int iterations = 0;
};

inline constexpr double kFeasibilityTolerance = 1e-7;

// Dense two-phase tableau simplex. Dantzig pricing switches to Bland's rule
// after 10 * (rows + columns) consecutive degenerate pivots, which also
// makes repeated solves of the same program pivot identically.
LpSolution SolveLp(const LinearProgram& lp);

// Probability vector over a finite action set.
using MixedStrategy = std::vector<double>;

// Zeroes probabilities below 1e-9 and renormalizes to sum one.
void CleanStrategy(MixedStrategy& strategy);

// Row player maximizes payoff(r, c); the column player minimizes it.
struct MatrixGame {
  int rows = 0;
  int cols = 0;
  std::vector<double> payoff;  // row-major

  MatrixGame() = default;
  MatrixGame(int r, int c) : rows(r), cols(c), payoff(std::size_t(r) * c) {}

  double& at(int r, int c) { return payoff[std::size_t(r) * cols + c]; }
  double at(int r, int c) const { return payoff[std::size_t(r) * cols + c]; }
};

struct ZeroSumSolution {
  MixedStrategy row_strategy;  // maxmin
  MixedStrategy col_strategy;  // minmax
  double value = 0.0;          // row player's maxmin value
  double col_value = 0.0;      // column player's minmax value
  LpStatus status = LpStatus::kOptimal;
};

// Solves the maxmin and minmax linear programs of the game separately.
// Throws Error(InvalidArgument) on an empty matrix.
ZeroSumSolution SolveZeroSum(const MatrixGame& game);

}  // namespace alarmgame

#endif  // ALARMGAME_LP_H_
