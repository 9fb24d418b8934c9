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

#ifndef CCCR_MATRIX_GAME_H_
#define CCCR_MATRIX_GAME_H_

// One-shot two-person zero-sum games. Rows belong to the maximizer (the
// robber), columns to the minimizer (the cops); entry (r, c) is paid by the
// column player to the row player.

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace cccr {

class MatrixGame {
 public:
  // Row-major entries. Throws std::invalid_argument for an empty shape, a
  // size mismatch or a non-finite entry.
  MatrixGame(int rows, int cols, std::vector<double> entries);
  MatrixGame(std::initializer_list<std::initializer_list<double>> rows);
  static MatrixGame FromRows(const std::vector<std::vector<double>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int r, int c) const { return entries_[r * cols_ + c]; }
  std::span<const double> entries() const { return entries_; }

 private:
  int rows_;
  int cols_;
  std::vector<double> entries_;
};

struct GameSolution {
  double value = 0.0;
  std::vector<double> row_mix;
  std::vector<double> col_mix;
};

inline constexpr double kDefaultMatrixTolerance = 1e-9;

// Minimax value and optimal mixes. Pure saddle points are returned directly;
// otherwise the game is shifted to positive entries and solved as a linear
// program by the simplex method, reading the row player's mix off the dual.
// Throws std::invalid_argument if tol <= 0, and std::runtime_error if the
// returned mixes miss their security levels by more than tol.
GameSolution SolveMatrixGame(const MatrixGame& game,
                             double tol = kDefaultMatrixTolerance);

// The pure solution when max_r min_c a(r,c) == min_c max_r a(r,c).
std::optional<GameSolution> SaddlePointShortcut(const MatrixGame& game);

// Worst case for the row player: min over columns of row_mix' A e_c.
double RowSecurityLevel(const MatrixGame& game, std::span<const double> row_mix);
// Worst case for the column player: max over rows of e_r' A col_mix.
double ColumnSecurityLevel(const MatrixGame& game,
                           std::span<const double> col_mix);

}  // namespace cccr

#endif  // CCCR_MATRIX_GAME_H_
