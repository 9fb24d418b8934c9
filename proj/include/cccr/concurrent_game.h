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

#ifndef CCCR_CONCURRENT_GAME_H_
#define CCCR_CONCURRENT_GAME_H_

// The simultaneous-move game. Each round both sides pick a target in their
// closed neighbourhoods at once; the robber collects one unit for every
// position it occupies uncaught, so a position's value is the expected
// number of rounds until capture, counting the current one.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cccr/graph.h"
#include "cccr/matrix_game.h"
#include "cccr/position.h"

namespace cccr {

struct Transition {
  ConcurrentPosition next;
  bool captured = false;    // capture happened in this round
  bool en_passant = false;  // ... by a cop and the robber swapping nodes
};

// Applies one simultaneous round. Captured positions are absorbing. A token
// whose move leaves its closed neighbourhood stays put. Capture happens when
// a cop lands on the robber's new node, or when a cop and the robber trade
// places along an edge; either way every token ends on the capture node.
// Throws GraphError for nodes outside the graph or a wrong cop count.
Transition CccrTransition(const Graph& g, const ConcurrentPosition& p,
                          std::span<const Node> cop_moves, Node robber_move);

// 0 on a captured position, 1 otherwise.
int StagePayoff(const ConcurrentPosition& p);

// A distribution over one side's moves. Cop moves carry one node per cop,
// robber moves exactly one node.
struct MoveDistribution {
  std::vector<CopMove> moves;
  std::vector<double> probs;

  friend bool operator==(const MoveDistribution&,
                         const MoveDistribution&) = default;
};

struct ValueTable {
  PositionSpace space;
  // +infinity marks positions classified as uncatchable.
  std::vector<double> values;
  int iterations_used = 0;
  bool converged = false;

  double Value(const ConcurrentPosition& p) const;

  friend bool operator==(const ValueTable&, const ValueTable&) = default;
};

struct MixedStrategyTable {
  PositionSpace space;
  // Indexed by position; empty on captured and infinite-value positions.
  std::vector<std::optional<MoveDistribution>> cop_policy;
  std::vector<std::optional<MoveDistribution>> robber_policy;

  friend bool operator==(const MixedStrategyTable&,
                         const MixedStrategyTable&) = default;
};

// The stored mix of `side` at `p`, listing every legal move (zero
// probabilities included). Throws std::invalid_argument at captured or
// infinite-value positions.
const MoveDistribution& QueryStrategy(const MixedStrategyTable& table,
                                      const ConcurrentPosition& p, Side side);

// Legal moves at a position, in the row/column order of LocalGame.
std::vector<Node> RobberMoves(const Graph& g, const ConcurrentPosition& p);
std::vector<CopMove> CopMoves(const Graph& g, const ConcurrentPosition& p);

// One-round game at a non-captured position: rows are robber moves, columns
// joint cop moves, entry = StagePayoff(p) + v(next), with infinite or
// larger values clamped to `ceiling`. Throws std::invalid_argument on a
// captured position.
MatrixGame LocalGame(const Graph& g, const ConcurrentPosition& p,
                     const ValueTable& v, double ceiling);

// 10 * |V|^(K+1).
double DefaultCeiling(int num_nodes, int num_cops);

struct ValueIterationOptions {
  double tol = 1e-2;
  int max_iter = 10000;
  // <= 0 selects DefaultCeiling.
  double ceiling = 0.0;
  // Positions of one sweep are independent; results do not depend on this.
  int threads = 1;
  // Called after every sweep with the new iterate.
  std::function<void(int sweep, std::span<const double> values)> on_sweep;
};

struct ConcurrentSolution {
  ValueTable values;
  MixedStrategyTable strategies;
};

// Jacobi value iteration from the zero vector. Stops once the largest change
// among finite positions drops below tol (converged) or after max_iter
// sweeps. Iterates that pass the ceiling are frozen at +infinity; this is a
// numerical classification, exact only when num_cops is at least the cop
// number. Strategies are the matrix-game mixes of the final sweep.
ConcurrentSolution ValueIterate(const Graph& g, int num_cops = 1,
                                const ValueIterationOptions& options = {});

// Largest value over all positions (+infinity if any is infinite).
double CaptureTime(const ValueTable& v);

}  // namespace cccr

#endif  // CCCR_CONCURRENT_GAME_H_
