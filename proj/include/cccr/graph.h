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

#ifndef CCCR_GRAPH_H_
#define CCCR_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cccr {

// Dense node index into Graph::label(). External I/O always goes through
// labels; solvers work on indices.
using Node = int;

// Raised for malformed edge lists, generator specs, invariant violations and
// unknown node references.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An undirected, simple, connected graph with opaque string labels.
// Immutable after construction.
class Graph {
 public:
  // `edges` are pairs of indices into `labels`. Throws GraphError if the
  // result has a self-loop, fewer than two nodes or is disconnected.
  // Duplicate edges (in either orientation) are merged.
  static Graph FromEdges(std::vector<std::string> labels,
                         const std::vector<std::pair<Node, Node>>& edges);

  int num_nodes() const { return static_cast<int>(labels_.size()); }
  int num_edges() const { return num_edges_; }

  const std::string& label(Node u) const;
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<Node> Find(std::string_view label) const;
  // Like Find, but throws GraphError for an unknown label.
  Node NodeOf(std::string_view label) const;

  bool Contains(Node u) const { return u >= 0 && u < num_nodes(); }
  bool Adjacent(Node u, Node v) const;
  // N[u]: u itself plus its neighbours, ascending by index.
  std::span<const Node> ClosedNeighborhood(Node u) const;
  bool InClosedNeighborhood(Node u, Node v) const {
    return u == v || Adjacent(u, v);
  }

  // Each edge once as (u, v) with u < v, sorted.
  std::vector<std::pair<Node, Node>> Edges() const;

  // FNV-1a over the edge list with each edge and the list sorted by label,
  // so node numbering does not matter. Stable across platforms; used as the
  // content address of solved games.
  std::uint64_t Fingerprint() const;

 private:
  Graph() = default;
  void CheckNode(Node u) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Node> index_;
  std::vector<std::vector<Node>> closed_;
  std::vector<std::uint8_t> adjacency_;
  int num_edges_ = 0;
};

// Parses "u v" lines. Blank lines and lines starting with '#' are skipped;
// nodes are numbered in order of first appearance.
Graph ParseEdgeList(std::string_view text);

// Inverse of ParseEdgeList: one "u v" line per edge in Edges() order.
std::string ToEdgeList(const Graph& g);

// Named fixtures and families:
//   path:n (n >= 2), cycle:n (n >= 3), clique:n (n >= 2), paper-tree,
//   gavenciak
Graph Generate(std::string_view spec);

// Breadth-first distances from `source` to every node.
std::vector<int> Distances(const Graph& g, Node source);
int Distance(const Graph& g, Node u, Node v);

}  // namespace cccr

#endif  // CCCR_GRAPH_H_
