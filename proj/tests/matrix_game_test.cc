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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace cccr {
namespace {

void ExpectMix(const std::vector<double>& mix, std::size_t size) {
  ASSERT_EQ(mix.size(), size);
  for (double p : mix) EXPECT_GE(p, 0.0);
  EXPECT_NEAR(std::accumulate(mix.begin(), mix.end(), 0.0), 1.0, 1e-12);
}

// Residuals of a claimed solution: both security levels must meet the value.
void ExpectOptimal(const MatrixGame& game, const GameSolution& s, double tol) {
  ExpectMix(s.row_mix, game.rows());
  ExpectMix(s.col_mix, game.cols());
  const double lower = RowSecurityLevel(game, s.row_mix);
  const double upper = ColumnSecurityLevel(game, s.col_mix);
  EXPECT_LT(upper - lower, tol);
  EXPECT_LT(std::abs(s.value - lower), tol);
  EXPECT_LT(std::abs(upper - s.value), tol);
}

TEST(MatrixGameTest, ConstructorValidation) {
  EXPECT_THROW(MatrixGame(0, 1, {}), std::invalid_argument);
  EXPECT_THROW(MatrixGame(2, 2, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(MatrixGame(1, 2, {1, std::nan("")}), std::invalid_argument);
  EXPECT_THROW(MatrixGame(1, 1, {std::numeric_limits<double>::infinity()}),
               std::invalid_argument);
  EXPECT_THROW(MatrixGame::FromRows({{1, 2}, {3}}), std::invalid_argument);
  const MatrixGame g{{1, 2}, {3, 4}};
  EXPECT_EQ(g.rows(), 2);
  EXPECT_EQ(g(1, 0), 3);
}

TEST(MatrixGameTest, RejectsNonPositiveTolerance) {
  EXPECT_THROW(SolveMatrixGame(MatrixGame{{1}}, 0.0), std::invalid_argument);
  EXPECT_THROW(SolveMatrixGame(MatrixGame{{1}}, -1.0), std::invalid_argument);
}

TEST(MatrixGameTest, SaddlePoint) {
  const MatrixGame g{{3, 1, 4}, {2, 0, 1}};
  const auto saddle = SaddlePointShortcut(g);
  ASSERT_TRUE(saddle.has_value());
  EXPECT_EQ(saddle->value, 1);
  EXPECT_EQ(saddle->row_mix, (std::vector<double>{1, 0}));
  EXPECT_EQ(saddle->col_mix, (std::vector<double>{0, 1, 0}));
  EXPECT_FALSE(SaddlePointShortcut(MatrixGame{{1, 0}, {0, 1}}).has_value());
}

TEST(MatrixGameTest, MatchingPennies) {
  const GameSolution s = SolveMatrixGame(MatrixGame{{1, -1}, {-1, 1}});
  EXPECT_NEAR(s.value, 0.0, 1e-12);
  EXPECT_NEAR(s.row_mix[0], 0.5, 1e-12);
  EXPECT_NEAR(s.col_mix[0], 0.5, 1e-12);
}

// Closed form for 2x2 games without a saddle point.
TEST(MatrixGameTest, TwoByTwoAnalytic) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10, 10);
  int checked = 0;
  while (checked < 500) {
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    const MatrixGame g{{a, b}, {c, d}};
    if (SaddlePointShortcut(g)) continue;
    const double den = a + d - b - c;
    const double value = (a * d - b * c) / den;
    const double p = (d - c) / den;
    const double q = (d - b) / den;
    const GameSolution s = SolveMatrixGame(g);
    EXPECT_NEAR(s.value, value, 1e-9);
    EXPECT_NEAR(s.row_mix[0], p, 1e-9);
    EXPECT_NEAR(s.col_mix[0], q, 1e-9);
    ++checked;
  }
}

// 2 x n games: the maximizer's best security level over a fine grid of
// mixes brackets the value from below, within the grid's resolution.
TEST(MatrixGameTest, TwoRowGridSearch) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const int cols = 2 + trial % 5;
    std::vector<double> entries(2 * cols);
    for (double& e : entries) e = u(rng);
    const MatrixGame g(2, cols, entries);
    double best = -std::numeric_limits<double>::infinity();
    const int steps = 20000;
    for (int k = 0; k <= steps; ++k) {
      const double p = static_cast<double>(k) / steps;
      const double mix[] = {p, 1 - p};
      best = std::max(best, RowSecurityLevel(g, mix));
    }
    const GameSolution s = SolveMatrixGame(g);
    EXPECT_LE(best, s.value + 1e-9);
    EXPECT_NEAR(best, s.value, 5.0 * 5.0 / steps);
  }
}

TEST(MatrixGameTest, RandomGamesCloseDualityGap) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 8);
    const int cols = 1 + static_cast<int>(rng() % 8);
    std::vector<double> entries(rows * cols);
    switch (trial % 3) {
      case 0:
        for (double& e : entries) e = std::uniform_real_distribution<>(-1, 1)(rng);
        break;
      case 1:
        for (double& e : entries) e = static_cast<double>(rng() % 3);
        break;
      default:
        for (double& e : entries) e = 1.0 + 20.0 * static_cast<double>(rng() % 2);
    }
    const MatrixGame g(rows, cols, entries);
    ExpectOptimal(g, SolveMatrixGame(g), 1e-7);
  }
}

// Nearly tied entries, as produced by value iteration on a large fixture.
TEST(MatrixGameTest, NearlyDegenerate) {
  const MatrixGame g = MatrixGame::FromRows(
      {{1, 8.8336263996534719, 8.8336263996534399, 9.1663841096097691,
        9.2974298473646648},
       {9.3036634573129255, 1, 1, 9.1663841096097656, 9.1732726922204932},
       {9.3036634573129255, 8.8295053520476987, 1, 9.1663841096097673,
        9.2976473705612079},
       {9.3036634573129326, 8.9606481858852476, 8.9606481858852458, 1,
        9.2980569261999317},
       {9.3036634573129326, 8.9519210774543865, 8.3194883819729064,
        9.1835967044209958, 9.2980569261999211}});
  const GameSolution s = SolveMatrixGame(g);
  ExpectOptimal(g, s, 1e-9);
  EXPECT_NEAR(s.value, 8.432177985113857, 1e-9);
}

TEST(MatrixGameTest, ShiftAndScaleCovariance) {
  const MatrixGame g{{0, 2, 1}, {3, 0, 1}, {1, 1, 0}};
  const GameSolution base = SolveMatrixGame(g);
  std::vector<double> moved(g.entries().begin(), g.entries().end());
  for (double& e : moved) e = 3.0 * e - 7.0;
  const GameSolution s = SolveMatrixGame(MatrixGame(3, 3, moved));
  EXPECT_NEAR(s.value, 3.0 * base.value - 7.0, 1e-9);
}

TEST(MatrixGameTest, SingleRowAndColumn) {
  const GameSolution row = SolveMatrixGame(MatrixGame{{4, 2, 3}});
  EXPECT_EQ(row.value, 2);
  EXPECT_EQ(row.col_mix, (std::vector<double>{0, 1, 0}));
  const GameSolution col = SolveMatrixGame(MatrixGame{{4}, {2}, {3}});
  EXPECT_EQ(col.value, 4);
  EXPECT_EQ(col.row_mix, (std::vector<double>{1, 0, 0}));
}

}  // namespace
}  // namespace cccr
