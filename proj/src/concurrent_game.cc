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

#include "cccr/concurrent_game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace cccr {
namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Matrix-game layout of one non-captured position, fixed across sweeps.
struct LocalLayout {
  std::vector<Node> robber_moves;
  std::vector<CopMove> cop_moves;
  std::vector<int> next;  // robber_moves.size() x cop_moves.size()
};

std::vector<LocalLayout> BuildLayouts(const Graph& g,
                                      const PositionSpace& space) {
  std::vector<LocalLayout> layouts(space.size());
  for (int i = 0; i < space.size(); ++i) {
    if (space.IsCapture(i)) continue;
    const ConcurrentPosition p = space.Decode(i);
    LocalLayout& layout = layouts[i];
    layout.robber_moves = RobberMoves(g, p);
    layout.cop_moves = CopMoves(g, p);
    layout.next.reserve(layout.robber_moves.size() * layout.cop_moves.size());
    for (Node y : layout.robber_moves) {
      for (const CopMove& x : layout.cop_moves) {
        layout.next.push_back(space.Encode(CccrTransition(g, p, x, y).next));
      }
    }
  }
  return layouts;
}

template <typename Fn>
void ParallelFor(int size, int threads, Fn&& fn) {
  threads = std::clamp(threads, 1, std::max(1, size));
  if (threads == 1) {
    fn(0, size);
    return;
  }
  std::vector<std::thread> workers;
  const int chunk = (size + threads - 1) / threads;
  for (int begin = 0; begin < size; begin += chunk) {
    workers.emplace_back(fn, begin, std::min(size, begin + chunk));
  }
  for (auto& w : workers) w.join();
}

}  // namespace

Transition CccrTransition(const Graph& g, const ConcurrentPosition& p,
                          std::span<const Node> cop_moves, Node robber_move) {
  if (cop_moves.size() != p.cops.size()) {
    throw GraphError("expected " + std::to_string(p.cops.size()) +
                     " cop moves, got " + std::to_string(cop_moves.size()));
  }
  for (Node m : cop_moves) {
    if (!g.Contains(m)) throw GraphError("unknown node index " + std::to_string(m));
  }
  if (!g.Contains(robber_move)) {
    throw GraphError("unknown node index " + std::to_string(robber_move));
  }

  Transition t{p, false, false};
  if (IsCapture(p)) return t;

  ConcurrentPosition& next = t.next;
  for (std::size_t i = 0; i < p.cops.size(); ++i) {
    if (g.InClosedNeighborhood(p.cops[i], cop_moves[i])) {
      next.cops[i] = cop_moves[i];
    }
  }
  if (g.InClosedNeighborhood(p.robber, robber_move)) next.robber = robber_move;

  Node capture_node = -1;
  if (IsCapture(next)) {
    capture_node = next.robber;
  } else {
    for (std::size_t i = 0; i < p.cops.size(); ++i) {
      if (next.cops[i] == p.robber && next.robber == p.cops[i]) {
        capture_node = p.robber;
        t.en_passant = true;
        break;
      }
    }
  }
  if (capture_node >= 0) {
    t.captured = true;
    std::fill(next.cops.begin(), next.cops.end(), capture_node);
    next.robber = capture_node;
  }
  return t;
}

int StagePayoff(const ConcurrentPosition& p) { return IsCapture(p) ? 0 : 1; }

double ValueTable::Value(const ConcurrentPosition& p) const {
  space.Validate(p);
  return values[space.Encode(p)];
}

const MoveDistribution& QueryStrategy(const MixedStrategyTable& table,
                                      const ConcurrentPosition& p, Side side) {
  table.space.Validate(p);
  if (IsCapture(p)) {
    throw std::invalid_argument("no strategy at a captured position");
  }
  const int index = table.space.Encode(p);
  const auto& entry = side == Side::kCop ? table.cop_policy[index]
                                         : table.robber_policy[index];
  if (!entry) {
    throw std::invalid_argument("no strategy at an infinite-value position");
  }
  return *entry;
}

std::vector<Node> RobberMoves(const Graph& g, const ConcurrentPosition& p) {
  const auto hood = g.ClosedNeighborhood(p.robber);
  return {hood.begin(), hood.end()};
}

std::vector<CopMove> CopMoves(const Graph& g, const ConcurrentPosition& p) {
  return JointCopMoves(g, p.cops);
}

MatrixGame LocalGame(const Graph& g, const ConcurrentPosition& p,
                     const ValueTable& v, double ceiling) {
  v.space.Validate(p);
  if (IsCapture(p)) {
    throw std::invalid_argument("no local game at a captured position");
  }
  const auto robber_moves = RobberMoves(g, p);
  const auto cop_moves = CopMoves(g, p);
  const double stage = StagePayoff(p);
  std::vector<double> entries;
  entries.reserve(robber_moves.size() * cop_moves.size());
  for (Node y : robber_moves) {
    for (const CopMove& x : cop_moves) {
      const double future = v.values[v.space.Encode(CccrTransition(g, p, x, y).next)];
      entries.push_back(stage + std::min(future, ceiling));
    }
  }
  return MatrixGame(static_cast<int>(robber_moves.size()),
                    static_cast<int>(cop_moves.size()), std::move(entries));
}

double DefaultCeiling(int num_nodes, int num_cops) {
  return 10.0 * std::pow(static_cast<double>(num_nodes), num_cops + 1);
}

ConcurrentSolution ValueIterate(const Graph& g, int num_cops,
                                const ValueIterationOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (options.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  const PositionSpace space(g.num_nodes(), num_cops);
  const double ceiling = options.ceiling > 0.0
                             ? options.ceiling
                             : DefaultCeiling(g.num_nodes(), num_cops);
  const std::vector<LocalLayout> layouts = BuildLayouts(g, space);
  const int size = space.size();

  std::vector<double> current(size, 0.0);
  std::vector<double> next(size, 0.0);
  std::vector<GameSolution> mixes(size);

  ConcurrentSolution result;
  result.values.space = space;
  int sweep = 0;
  bool converged = false;
  while (sweep < options.max_iter && !converged) {
    ++sweep;
    ParallelFor(size, options.threads, [&](int begin, int end) {
      std::vector<double> entries;
      for (int i = begin; i < end; ++i) {
        const LocalLayout& layout = layouts[i];
        if (layout.next.empty() || std::isinf(current[i])) {
          next[i] = current[i];
          continue;
        }
        entries.resize(layout.next.size());
        for (std::size_t k = 0; k < layout.next.size(); ++k) {
          entries[k] = 1.0 + std::min(current[layout.next[k]], ceiling);
        }
        mixes[i] = SolveMatrixGame(
            MatrixGame(static_cast<int>(layout.robber_moves.size()),
                       static_cast<int>(layout.cop_moves.size()), entries));
        next[i] = mixes[i].value > ceiling ? kInfinity : mixes[i].value;
      }
    });
    double change = 0.0;
    for (int i = 0; i < size; ++i) {
      if (!std::isinf(next[i])) change = std::max(change, std::abs(next[i] - current[i]));
    }
    std::swap(current, next);
    if (options.on_sweep) options.on_sweep(sweep, current);
    converged = change < options.tol;
  }

  result.values.values = current;
  result.values.iterations_used = sweep;
  result.values.converged = converged;

  MixedStrategyTable& strategies = result.strategies;
  strategies.space = space;
  strategies.cop_policy.resize(size);
  strategies.robber_policy.resize(size);
  for (int i = 0; i < size; ++i) {
    const LocalLayout& layout = layouts[i];
    if (layout.next.empty() || std::isinf(current[i])) continue;
    MoveDistribution cop{layout.cop_moves, mixes[i].col_mix};
    MoveDistribution robber;
    for (Node y : layout.robber_moves) robber.moves.push_back(CopMove{y});
    robber.probs = mixes[i].row_mix;
    strategies.cop_policy[i] = std::move(cop);
    strategies.robber_policy[i] = std::move(robber);
  }
  return result;
}

double CaptureTime(const ValueTable& v) {
  double best = 0.0;
  for (double x : v.values) best = std::max(best, x);
  return best;
}

}  // namespace cccr
