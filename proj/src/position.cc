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

#include "cccr/position.h"

#include <algorithm>
#include <stdexcept>

namespace cccr {

std::string SideName(Side s) { return s == Side::kCop ? "C" : "R"; }

Side ParseSide(std::string_view name) {
  if (name == "C" || name == "cop") return Side::kCop;
  if (name == "R" || name == "robber") return Side::kRobber;
  throw std::invalid_argument("unknown side '" + std::string(name) + "'");
}

bool IsCapture(const ConcurrentPosition& p) {
  return std::find(p.cops.begin(), p.cops.end(), p.robber) != p.cops.end();
}

std::string Describe(const Graph& g, const ConcurrentPosition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.cops.size(); ++i) {
    if (i > 0) out += ',';
    out += g.label(p.cops[i]);
  }
  out += ';';
  out += g.label(p.robber);
  out += ')';
  return out;
}

PositionSpace::PositionSpace(int num_nodes, int num_cops)
    : num_nodes_(num_nodes), num_cops_(num_cops) {
  if (num_cops < 1) throw std::invalid_argument("need at least one cop");
  if (num_nodes < 1) throw std::invalid_argument("need at least one node");
  std::int64_t size = num_nodes;
  for (int i = 0; i < num_cops; ++i) {
    size *= num_nodes;
    if (size > kMaxPositions) {
      throw std::invalid_argument(
          "position space too large for " + std::to_string(num_cops) +
          " cops on " + std::to_string(num_nodes) + " nodes");
    }
  }
  size_ = static_cast<int>(size);
}

int PositionSpace::Encode(std::span<const Node> cops, Node robber) const {
  int index = 0;
  for (Node c : cops) index = index * num_nodes_ + c;
  return index * num_nodes_ + robber;
}

ConcurrentPosition PositionSpace::Decode(int index) const {
  ConcurrentPosition p;
  p.robber = index % num_nodes_;
  index /= num_nodes_;
  p.cops.resize(num_cops_);
  for (int i = num_cops_ - 1; i >= 0; --i) {
    p.cops[i] = index % num_nodes_;
    index /= num_nodes_;
  }
  return p;
}

bool PositionSpace::IsCapture(int index) const {
  const Node robber = index % num_nodes_;
  index /= num_nodes_;
  for (int i = 0; i < num_cops_; ++i) {
    if (index % num_nodes_ == robber) return true;
    index /= num_nodes_;
  }
  return false;
}

void PositionSpace::Validate(const ConcurrentPosition& p) const {
  if (static_cast<int>(p.cops.size()) != num_cops_) {
    throw GraphError("expected " + std::to_string(num_cops_) +
                     " cop locations, got " + std::to_string(p.cops.size()));
  }
  auto check = [&](Node u) {
    if (u < 0 || u >= num_nodes_) {
      throw GraphError("unknown node index " + std::to_string(u));
    }
  };
  for (Node c : p.cops) check(c);
  check(p.robber);
}

std::vector<CopMove> JointCopMoves(const Graph& g,
                                   std::span<const Node> cops) {
  std::vector<CopMove> moves{CopMove{}};
  for (Node c : cops) {
    std::vector<CopMove> extended;
    const auto hood = g.ClosedNeighborhood(c);
    extended.reserve(moves.size() * hood.size());
    for (const CopMove& prefix : moves) {
      for (Node target : hood) {
        CopMove m = prefix;
        m.push_back(target);
        extended.push_back(std::move(m));
      }
    }
    moves = std::move(extended);
  }
  return moves;
}

}  // namespace cccr
