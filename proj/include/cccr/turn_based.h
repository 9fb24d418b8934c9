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

#ifndef CCCR_TURN_BASED_H_
#define CCCR_TURN_BASED_H_

// Classical turn-based cops and robbers: cops move (jointly) first, then the
// robber, alternating. Ranks count cop turns to a forced capture.

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cccr/graph.h"
#include "cccr/position.h"

namespace cccr {

inline constexpr int kInfiniteRank = std::numeric_limits<int>::max();

struct TurnPosition {
  std::vector<Node> cops;
  Node robber = 0;
  Side turn = Side::kCop;

  friend bool operator==(const TurnPosition&, const TurnPosition&) = default;
};

// One move of the side to play. `move` holds one node per cop on a cop turn
// and a single node on a robber turn. Moves outside the mover's closed
// neighbourhood leave that token in place; a captured position only flips
// the turn. Throws GraphError for nodes outside the graph.
TurnPosition TbcrTransition(const Graph& g, const TurnPosition& p,
                            std::span<const Node> move);

class CopwinTable {
 public:
  const Graph& graph() const { return graph_; }
  int num_cops() const { return space_.num_cops(); }
  const PositionSpace& space() const { return space_; }

  // Cop turns still needed to force capture, or kInfiniteRank.
  int Rank(const TurnPosition& p) const;
  int Rank(int index, Side turn) const {
    return turn == Side::kCop ? cop_rank_[index] : robber_rank_[index];
  }
  bool IsFinite(int index, Side turn) const {
    return Rank(index, turn) != kInfiniteRank;
  }

  // Largest finite rank of any cop-turn position.
  int MaxFiniteRank() const;
  bool AllCopTurnsFinite() const;
  bool HasInfiniteRobberTurns() const;

 private:
  friend CopwinTable SolveCopwin(const Graph& g, int num_cops);
  CopwinTable(Graph g, PositionSpace space)
      : graph_(std::move(g)), space_(space) {}

  Graph graph_;
  PositionSpace space_;
  std::vector<int> cop_rank_;
  std::vector<int> robber_rank_;
};

// Least fixpoint of backward induction over all positions of `num_cops`
// cops on `g`. Throws std::invalid_argument if num_cops < 1.
CopwinTable SolveCopwin(const Graph& g, int num_cops);

// Best cop placement against the best robber reply: the smallest, over cop
// placements, of the largest rank over robber placements. nullopt if the
// robber can always place into an infinite-rank position.
std::optional<int> TbcrMinimaxCopMoves(const CopwinTable& table);

// Rounds of the turn-based game under optimal placement and play, where the
// cops' placement phase counts as the first round. nullopt if the robber
// wins.
std::optional<int> TbcrCaptureTime(const Graph& g, int num_cops);

// Smallest K <= max_cops whose cops win with optimal placement; nullopt if
// none does.
std::optional<int> CopNumber(const Graph& g, int max_cops);

// Memoryless deterministic strategy for one side of the turn-based game.
// Queries at positions outside the strategy's domain throw
// std::invalid_argument.
class DeterministicStrategy {
 public:
  Side side() const { return side_; }
  const PositionSpace& space() const { return space_; }

  bool Defined(const ConcurrentPosition& at) const;
  // The mover's target(s) at the position (x, y, side()): one node per cop,
  // or a single node for the robber.
  CopMove Move(const ConcurrentPosition& at) const;
  // Robber strategies only: the placement reply to the cops at `cops`,
  // chosen so the robber is never caught, if such a node exists.
  std::optional<Node> PlacementReply(std::span<const Node> cops) const;

 private:
  friend DeterministicStrategy ExtractCopStrategy(const CopwinTable& table);
  friend DeterministicStrategy ExtractRobberStrategy(const CopwinTable& table);
  DeterministicStrategy(Side side, PositionSpace space)
      : side_(side), space_(space) {}

  Side side_;
  PositionSpace space_;
  std::vector<std::optional<CopMove>> moves_;
  std::vector<std::optional<Node>> placement_;
};

// Defined on every finite-rank cop-turn position: takes the
// lexicographically first joint move that lowers the rank (stays put on
// captured positions).
DeterministicStrategy ExtractCopStrategy(const CopwinTable& table);

// Defined on every infinite-rank robber-turn position: the lexicographically
// first move that keeps the rank infinite. Throws std::invalid_argument if
// the table has no such position.
DeterministicStrategy ExtractRobberStrategy(const CopwinTable& table);

}  // namespace cccr

#endif  // CCCR_TURN_BASED_H_
