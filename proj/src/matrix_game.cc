// Copyright 2026 The cccr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cccr/matrix_game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cccr {
namespace {

constexpr double kPivotEpsilon = 1e-11;
constexpr double kRatioSlack = 1e-9;

// Dense tableau for
//   maximize sum(y)  subject to  C y <= 1, y >= 0
// with every entry of C in (0, 1]. The origin is feasible, so the slack
// basis starts the method. Dantzig pricing with a two-pass ratio test that
// prefers large pivots among near ties; Bland's rule takes over if the
// method stalls.
class Simplex {
 public:
  Simplex(int rows, int cols, std::span<const double> c)
      : m_(rows), n_(cols), width_(cols + rows + 1),
        tableau_(static_cast<std::size_t>(rows + 1) * (cols + rows + 1), 0.0),
        basis_(rows) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) at(i, j) = c[i * n_ + j];
      at(i, n_ + i) = 1.0;
      at(i, width_ - 1) = 1.0;
      basis_[i] = n_ + i;
    }
    for (int j = 0; j < n_; ++j) at(m_, j) = -1.0;
  }

  void Run() {
    const int bland_after = 5 * (m_ + n_) + 20;
    const int max_pivots = 50 * (m_ + n_) + 100;
    for (int pivots = 0; pivots < max_pivots; ++pivots) {
      const int enter = Entering(pivots >= bland_after);
      if (enter < 0) return;
      double bound = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        if (at(i, enter) > kPivotEpsilon) {
          bound = std::min(bound, (rhs(i) + kRatioSlack) / at(i, enter));
        }
      }
      int leave = -1;
      for (int i = 0; i < m_; ++i) {
        if (at(i, enter) <= kPivotEpsilon) continue;
        if (rhs(i) / at(i, enter) > bound) continue;
        if (leave < 0 || at(i, enter) > at(leave, enter)) leave = i;
      }
      if (leave < 0) throw std::runtime_error("matrix game LP is unbounded");
      Pivot(leave, enter);
    }
    throw std::runtime_error("simplex exceeded its pivot budget");
  }

  double objective() const { return at(m_, width_ - 1); }
  std::vector<double> primal() const {
    std::vector<double> y(n_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) y[basis_[i]] = at(i, width_ - 1);
    }
    return y;
  }
  std::vector<double> dual() const {
    std::vector<double> x(m_);
    for (int i = 0; i < m_; ++i) x[i] = at(m_, n_ + i);
    return x;
  }

 private:
  double& at(int i, int j) { return tableau_[i * width_ + j]; }
  double rhs(int i) const { return std::max(at(i, width_ - 1), 0.0); }

  int Entering(bool bland) const {
    int enter = -1;
    for (int j = 0; j < n_ + m_; ++j) {
      if (at(m_, j) >= -kPivotEpsilon) continue;
      if (bland) return j;
      if (enter < 0 || at(m_, j) < at(m_, enter)) enter = j;
    }
    return enter;
  }
  double at(int i, int j) const { return tableau_[i * width_ + j]; }

  void Pivot(int row, int col) {
    const double p = at(row, col);
    for (int j = 0; j < width_; ++j) at(row, j) /= p;
    at(row, col) = 1.0;
    for (int i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (int j = 0; j < width_; ++j) at(i, j) -= f * at(row, j);
      at(i, col) = 0.0;
    }
    basis_[row] = col;
  }

  int m_;
  int n_;
  int width_;
  std::vector<double> tableau_;
  std::vector<int> basis_;
};

std::vector<double> Normalized(std::vector<double> mix) {
  for (double& p : mix) p = std::max(p, 0.0);
  const double total = std::accumulate(mix.begin(), mix.end(), 0.0);
  for (double& p : mix) p /= total;
  return mix;
}

std::vector<double> PointMass(int size, int at) {
  std::vector<double> mix(size, 0.0);
  mix[at] = 1.0;
  return mix;
}

}  // namespace

MatrixGame::MatrixGame(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("matrix game needs at least one row and column");
  }
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("matrix game entry count does not match shape");
  }
  for (double a : entries_) {
    if (!std::isfinite(a)) {
      throw std::invalid_argument("matrix game entries must be finite");
    }
  }
}

MatrixGame::MatrixGame(std::initializer_list<std::initializer_list<double>> rows)
    : MatrixGame(FromRows(std::vector<std::vector<double>>(rows.begin(),
                                                           rows.end()))) {}

MatrixGame MatrixGame::FromRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("matrix game needs at least one row and column");
  }
  std::vector<double> entries;
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) {
      throw std::invalid_argument("ragged matrix game rows");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return MatrixGame(static_cast<int>(rows.size()),
                    static_cast<int>(rows.front().size()), std::move(entries));
}

double RowSecurityLevel(const MatrixGame& game,
                        std::span<const double> row_mix) {
  double worst = std::numeric_limits<double>::infinity();
  for (int c = 0; c < game.cols(); ++c) {
    double payoff = 0.0;
    for (int r = 0; r < game.rows(); ++r) payoff += row_mix[r] * game(r, c);
    worst = std::min(worst, payoff);
  }
  return worst;
}

double ColumnSecurityLevel(const MatrixGame& game,
                           std::span<const double> col_mix) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < game.rows(); ++r) {
    double payoff = 0.0;
    for (int c = 0; c < game.cols(); ++c) payoff += col_mix[c] * game(r, c);
    worst = std::max(worst, payoff);
  }
  return worst;
}

std::optional<GameSolution> SaddlePointShortcut(const MatrixGame& game) {
  int best_row = 0;
  double maximin = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < game.rows(); ++r) {
    double row_min = std::numeric_limits<double>::infinity();
    for (int c = 0; c < game.cols(); ++c) row_min = std::min(row_min, game(r, c));
    if (row_min > maximin) {
      maximin = row_min;
      best_row = r;
    }
  }
  int best_col = 0;
  double minimax = std::numeric_limits<double>::infinity();
  for (int c = 0; c < game.cols(); ++c) {
    double col_max = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < game.rows(); ++r) col_max = std::max(col_max, game(r, c));
    if (col_max < minimax) {
      minimax = col_max;
      best_col = c;
    }
  }
  if (maximin != minimax) return std::nullopt;
  return GameSolution{maximin, PointMass(game.rows(), best_row),
                      PointMass(game.cols(), best_col)};
}

GameSolution SolveMatrixGame(const MatrixGame& game, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (auto saddle = SaddlePointShortcut(game)) return *saddle;

  const auto entries = game.entries();
  const auto [lo_it, hi_it] = std::minmax_element(entries.begin(), entries.end());
  // Shift to [1, 1 + spread], then scale into (0, 1].
  const double shift = *lo_it - 1.0;
  const double scale = *hi_it - shift;
  std::vector<double> c(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    c[i] = (entries[i] - shift) / scale;
  }

  Simplex lp(game.rows(), game.cols(), c);
  lp.Run();
  const double z = lp.objective();

  GameSolution solution;
  solution.value = scale / z + shift;
  solution.row_mix = Normalized(lp.dual());
  solution.col_mix = Normalized(lp.primal());

  const double lower = RowSecurityLevel(game, solution.row_mix);
  const double upper = ColumnSecurityLevel(game, solution.col_mix);
  const double slack = tol * std::max(1.0, std::abs(solution.value));
  if (solution.value - lower > slack || upper - solution.value > slack) {
    throw std::runtime_error("matrix game solution misses its security level (" +
                             std::to_string(lower) + ", " +
                             std::to_string(upper) + ")");
  }
  return solution;
}

}  // namespace cccr
