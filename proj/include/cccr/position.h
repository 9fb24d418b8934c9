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

#ifndef CCCR_POSITION_H_
#define CCCR_POSITION_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cccr/graph.h"

namespace cccr {

enum class Side { kCop, kRobber };

inline Side Opponent(Side s) {
  return s == Side::kCop ? Side::kRobber : Side::kCop;
}
// "C" / "R".
std::string SideName(Side s);
// Accepts "C", "R", "cop", "robber" (case-sensitive). Throws
// std::invalid_argument otherwise.
Side ParseSide(std::string_view name);

// Cop locations (one entry per cop, order significant) plus the robber.
struct ConcurrentPosition {
  std::vector<Node> cops;
  Node robber = 0;

  friend bool operator==(const ConcurrentPosition&,
                         const ConcurrentPosition&) = default;
};

// Some cop shares the robber's node.
bool IsCapture(const ConcurrentPosition& p);

// "(c1,c2;r)" in labels, for messages and logs.
std::string Describe(const Graph& g, const ConcurrentPosition& p);

// A joint cop move: target node per cop.
using CopMove = std::vector<Node>;

// Mixed-radix indexing of V^K x V, with the robber as the fastest digit.
class PositionSpace {
 public:
  PositionSpace() = default;
  // Throws std::invalid_argument if num_cops < 1 or the space would exceed
  // kMaxPositions.
  PositionSpace(int num_nodes, int num_cops);

  static constexpr std::int64_t kMaxPositions = std::int64_t{1} << 24;

  int num_nodes() const { return num_nodes_; }
  int num_cops() const { return num_cops_; }
  int size() const { return size_; }

  int Encode(std::span<const Node> cops, Node robber) const;
  int Encode(const ConcurrentPosition& p) const {
    return Encode(p.cops, p.robber);
  }
  ConcurrentPosition Decode(int index) const;
  Node RobberOf(int index) const { return index % num_nodes_; }
  bool IsCapture(int index) const;

  // Throws GraphError when the position references nodes outside the space
  // or has the wrong number of cops.
  void Validate(const ConcurrentPosition& p) const;

  friend bool operator==(const PositionSpace&, const PositionSpace&) = default;

 private:
  int num_nodes_ = 0;
  int num_cops_ = 0;
  int size_ = 0;
};

// Every joint move of the cops at `cops`: the product of their closed
// neighbourhoods, in lexicographic order of node indices.
std::vector<CopMove> JointCopMoves(const Graph& g, std::span<const Node> cops);

}  // namespace cccr

#endif  // CCCR_POSITION_H_
