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

#include "cccr/turn_based.h"

#include <algorithm>
#include <stdexcept>

namespace cccr {
namespace {

// Index of the cop tuple `cops` in V^K.
int CopTupleIndex(std::span<const Node> cops, int n) {
  int index = 0;
  for (Node c : cops) index = index * n + c;
  return index;
}

std::vector<Node> CopTuple(int index, int n, int k) {
  std::vector<Node> cops(k);
  for (int i = k - 1; i >= 0; --i) {
    cops[i] = index % n;
    index /= n;
  }
  return cops;
}

}  // namespace

TurnPosition TbcrTransition(const Graph& g, const TurnPosition& p,
                            std::span<const Node> move) {
  const std::size_t expected = p.turn == Side::kCop ? p.cops.size() : 1;
  if (move.size() != expected) {
    throw std::invalid_argument("move has " + std::to_string(move.size()) +
                                " entries, expected " +
                                std::to_string(expected));
  }
  for (Node m : move) {
    if (!g.Contains(m)) {
      throw GraphError("unknown node index " + std::to_string(m));
    }
  }
  TurnPosition next = p;
  next.turn = Opponent(p.turn);
  if (IsCapture(ConcurrentPosition{p.cops, p.robber})) return next;
  if (p.turn == Side::kCop) {
    for (std::size_t i = 0; i < p.cops.size(); ++i) {
      if (g.InClosedNeighborhood(p.cops[i], move[i])) next.cops[i] = move[i];
    }
  } else if (g.InClosedNeighborhood(p.robber, move[0])) {
    next.robber = move[0];
  }
  return next;
}

int CopwinTable::Rank(const TurnPosition& p) const {
  const ConcurrentPosition at{p.cops, p.robber};
  space_.Validate(at);
  return Rank(space_.Encode(at), p.turn);
}

int CopwinTable::MaxFiniteRank() const {
  int best = 0;
  for (int r : cop_rank_) {
    if (r != kInfiniteRank) best = std::max(best, r);
  }
  return best;
}

bool CopwinTable::AllCopTurnsFinite() const {
  return std::none_of(cop_rank_.begin(), cop_rank_.end(),
                      [](int r) { return r == kInfiniteRank; });
}

bool CopwinTable::HasInfiniteRobberTurns() const {
  return std::any_of(robber_rank_.begin(), robber_rank_.end(),
                     [](int r) { return r == kInfiniteRank; });
}

CopwinTable SolveCopwin(const Graph& g, int num_cops) {
  const int n = g.num_nodes();
  CopwinTable table(g, PositionSpace(n, num_cops));
  const PositionSpace& space = table.space_;
  const int size = space.size();
  const int tuples = size / n;

  // Successor cop tuples of every cop tuple under a joint cop move.
  std::vector<std::vector<int>> cop_successors(tuples);
  for (int t = 0; t < tuples; ++t) {
    for (const CopMove& m : JointCopMoves(g, CopTuple(t, n, num_cops))) {
      cop_successors[t].push_back(CopTupleIndex(m, n));
    }
  }

  auto& cop_rank = table.cop_rank_;
  auto& robber_rank = table.robber_rank_;
  cop_rank.assign(size, kInfiniteRank);
  robber_rank.assign(size, kInfiniteRank);
  for (int i = 0; i < size; ++i) {
    if (space.IsCapture(i)) cop_rank[i] = robber_rank[i] = 0;
  }

  for (int r = 1;; ++r) {
    bool changed = false;
    // A cop turn needs r if some joint move reaches a robber turn that
    // needs at most r - 1.
    for (int i = 0; i < size; ++i) {
      if (cop_rank[i] != kInfiniteRank) continue;
      const int tuple = i / n;
      const Node robber = i % n;
      for (int next : cop_successors[tuple]) {
        if (robber_rank[next * n + robber] <= r - 1) {
          cop_rank[i] = r;
          changed = true;
          break;
        }
      }
    }
    // A robber turn needs r if every robber move reaches a cop turn that
    // needs at most r.
    for (int i = 0; i < size; ++i) {
      if (robber_rank[i] != kInfiniteRank) continue;
      const int base = (i / n) * n;
      const auto hood = g.ClosedNeighborhood(i % n);
      const bool forced = std::all_of(hood.begin(), hood.end(), [&](Node y) {
        return cop_rank[base + y] <= r;
      });
      if (forced) {
        robber_rank[i] = r;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return table;
}

std::optional<int> TbcrMinimaxCopMoves(const CopwinTable& table) {
  const int n = table.graph().num_nodes();
  const int tuples = table.space().size() / n;
  std::optional<int> best;
  for (int t = 0; t < tuples; ++t) {
    int worst = 0;
    for (Node y = 0; y < n; ++y) {
      worst = std::max(worst, table.Rank(t * n + y, Side::kCop));
    }
    if (worst != kInfiniteRank && (!best || worst < *best)) best = worst;
  }
  return best;
}

std::optional<int> TbcrCaptureTime(const Graph& g, int num_cops) {
  const auto moves = TbcrMinimaxCopMoves(SolveCopwin(g, num_cops));
  if (!moves) return std::nullopt;
  return *moves + 1;
}

std::optional<int> CopNumber(const Graph& g, int max_cops) {
  if (max_cops < 1) throw std::invalid_argument("max_cops must be >= 1");
  for (int k = 1; k <= max_cops; ++k) {
    if (TbcrMinimaxCopMoves(SolveCopwin(g, k))) return k;
  }
  return std::nullopt;
}

bool DeterministicStrategy::Defined(const ConcurrentPosition& at) const {
  space_.Validate(at);
  return moves_[space_.Encode(at)].has_value();
}

CopMove DeterministicStrategy::Move(const ConcurrentPosition& at) const {
  space_.Validate(at);
  const auto& move = moves_[space_.Encode(at)];
  if (!move) {
    throw std::invalid_argument(
        side_ == Side::kCop
            ? "cop strategy undefined: position has infinite rank"
            : "robber strategy undefined: position has finite rank");
  }
  return *move;
}

std::optional<Node> DeterministicStrategy::PlacementReply(
    std::span<const Node> cops) const {
  if (side_ != Side::kRobber) {
    throw std::invalid_argument("placement replies belong to the robber");
  }
  space_.Validate(ConcurrentPosition{{cops.begin(), cops.end()}, 0});
  return placement_[CopTupleIndex(cops, space_.num_nodes())];
}

DeterministicStrategy ExtractCopStrategy(const CopwinTable& table) {
  const Graph& g = table.graph();
  const PositionSpace& space = table.space();
  DeterministicStrategy strategy(Side::kCop, space);
  strategy.moves_.resize(space.size());
  for (int i = 0; i < space.size(); ++i) {
    const int rank = table.Rank(i, Side::kCop);
    if (rank == kInfiniteRank) continue;
    const ConcurrentPosition p = space.Decode(i);
    if (rank == 0) {
      strategy.moves_[i] = p.cops;
      continue;
    }
    for (CopMove& m : JointCopMoves(g, p.cops)) {
      if (table.Rank(space.Encode(m, p.robber), Side::kRobber) <= rank - 1) {
        strategy.moves_[i] = std::move(m);
        break;
      }
    }
  }
  return strategy;
}

DeterministicStrategy ExtractRobberStrategy(const CopwinTable& table) {
  if (!table.HasInfiniteRobberTurns()) {
    throw std::invalid_argument(
        "no robber-turn position has infinite rank: the cops always win");
  }
  const Graph& g = table.graph();
  const PositionSpace& space = table.space();
  const int n = g.num_nodes();
  DeterministicStrategy strategy(Side::kRobber, space);
  strategy.moves_.resize(space.size());
  for (int i = 0; i < space.size(); ++i) {
    if (table.IsFinite(i, Side::kRobber)) continue;
    const int base = (i / n) * n;
    for (Node y : g.ClosedNeighborhood(i % n)) {
      if (!table.IsFinite(base + y, Side::kCop)) {
        strategy.moves_[i] = CopMove{y};
        break;
      }
    }
  }
  strategy.placement_.resize(space.size() / n);
  for (int t = 0; t < space.size() / n; ++t) {
    for (Node y = 0; y < n; ++y) {
      if (!table.IsFinite(t * n + y, Side::kCop)) {
        strategy.placement_[t] = y;
        break;
      }
    }
  }
  return strategy;
}

}  // namespace cccr
