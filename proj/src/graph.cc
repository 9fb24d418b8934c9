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

#include "cccr/graph.h"

#include <algorithm>
#include <charconv>
#include <queue>

namespace cccr {
namespace {

constexpr int kMaxGeneratedNodes = 1000;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::vector<std::string> NumberedLabels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

// Edges listed with 1-based labels, as they appear in the figures.
Graph FromOneBased(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<Node, Node>> zero_based;
  zero_based.reserve(edges.size());
  for (auto [u, v] : edges) zero_based.emplace_back(u - 1, v - 1);
  return Graph::FromEdges(NumberedLabels(n), zero_based);
}

}  // namespace

Graph Graph::FromEdges(std::vector<std::string> labels,
                       const std::vector<std::pair<Node, Node>>& edges) {
  Graph g;
  const int n = static_cast<int>(labels.size());
  if (n < 2) throw GraphError("graph must have at least two nodes");
  g.labels_ = std::move(labels);
  for (Node u = 0; u < n; ++u) {
    if (!g.index_.emplace(g.labels_[u], u).second) {
      throw GraphError("duplicate node label '" + g.labels_[u] + "'");
    }
  }
  g.adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge endpoint out of range");
    }
    if (u == v) throw GraphError("self-loop on '" + g.labels_[u] + "'");
    auto& uv = g.adjacency_[static_cast<std::size_t>(u) * n + v];
    if (uv) continue;
    uv = 1;
    g.adjacency_[static_cast<std::size_t>(v) * n + u] = 1;
    ++g.num_edges_;
  }
  g.closed_.resize(n);
  for (Node u = 0; u < n; ++u) {
    for (Node v = 0; v < n; ++v) {
      if (u == v || g.Adjacent(u, v)) g.closed_[u].push_back(v);
    }
  }
  const std::vector<int> dist = Distances(g, 0);
  for (Node u = 0; u < n; ++u) {
    if (dist[u] < 0) {
      throw GraphError("graph is disconnected: '" + g.labels_[0] + "' and '" +
                       g.labels_[u] + "' are not joined by a path");
    }
  }
  return g;
}

const std::string& Graph::label(Node u) const {
  CheckNode(u);
  return labels_[u];
}

std::optional<Node> Graph::Find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Node Graph::NodeOf(std::string_view label) const {
  if (auto u = Find(label)) return *u;
  throw GraphError("unknown node '" + std::string(label) + "'");
}

bool Graph::Adjacent(Node u, Node v) const {
  CheckNode(u);
  CheckNode(v);
  return adjacency_[static_cast<std::size_t>(u) * num_nodes() + v] != 0;
}

std::span<const Node> Graph::ClosedNeighborhood(Node u) const {
  CheckNode(u);
  return closed_[u];
}

std::vector<std::pair<Node, Node>> Graph::Edges() const {
  std::vector<std::pair<Node, Node>> edges;
  edges.reserve(num_edges_);
  for (Node u = 0; u < num_nodes(); ++u) {
    for (Node v : closed_[u]) {
      if (v > u) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::uint64_t Graph::Fingerprint() const {
  std::vector<std::pair<std::string, std::string>> named;
  for (auto [u, v] : Edges()) {
    named.emplace_back(std::min(labels_[u], labels_[v]),
                       std::max(labels_[u], labels_[v]));
  }
  std::sort(named.begin(), named.end());
  std::string text;
  for (const auto& [a, b] : named) text += a + " " + b + "\n";
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

void Graph::CheckNode(Node u) const {
  if (!Contains(u)) {
    throw GraphError("unknown node index " + std::to_string(u));
  }
}

Graph ParseEdgeList(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Node> index;
  std::vector<std::pair<Node, Node>> edges;
  auto intern = [&](std::string_view label) {
    auto [it, inserted] =
        index.emplace(std::string(label), static_cast<Node>(labels.size()));
    if (inserted) labels.emplace_back(label);
    return it->second;
  };

  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_number;
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = SplitWhitespace(line);
    if (tokens.size() != 2) {
      throw GraphError("line " + std::to_string(line_number) +
                       ": expected two node labels, got '" +
                       std::string(line) + "'");
    }
    if (tokens[0] == tokens[1]) {
      throw GraphError("line " + std::to_string(line_number) +
                       ": self-loop on '" + std::string(tokens[0]) + "'");
    }
    const Node u = intern(tokens[0]);
    const Node v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw GraphError("empty edge list");
  return Graph::FromEdges(std::move(labels), edges);
}

std::string ToEdgeList(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.Edges()) {
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

Graph Generate(std::string_view spec) {
  if (spec == "paper-tree") {
    return FromOneBased(5, {{1, 2}, {1, 3}, {3, 4}, {3, 5}});
  }
  if (spec == "gavenciak") {
    return FromOneBased(10, {{1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 4},
                             {2, 5}, {3, 4}, {3, 6}, {4, 5}, {4, 6}, {4, 7},
                             {5, 7}, {6, 7}, {7, 8}, {8, 9}, {9, 10}});
  }
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw GraphError("unknown generator '" + std::string(spec) + "'");
  }
  const std::string_view family = spec.substr(0, colon);
  const std::string_view count = spec.substr(colon + 1);
  int n = 0;
  const auto [ptr, ec] =
      std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc() || ptr != count.data() + count.size()) {
    throw GraphError("malformed generator size in '" + std::string(spec) + "'");
  }
  auto require = [&](int min_n) {
    if (n < min_n || n > kMaxGeneratedNodes) {
      throw GraphError("generator '" + std::string(spec) + "' needs " +
                       std::to_string(min_n) + " <= n <= " +
                       std::to_string(kMaxGeneratedNodes));
    }
  };
  std::vector<std::pair<int, int>> edges;
  if (family == "path") {
    require(2);
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  } else if (family == "cycle") {
    require(3);
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
  } else if (family == "clique") {
    require(2);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    }
  } else {
    throw GraphError("unknown generator '" + std::string(spec) + "'");
  }
  return FromOneBased(n, edges);
}

std::vector<int> Distances(const Graph& g, Node source) {
  if (!g.Contains(source)) {
    throw GraphError("unknown node index " + std::to_string(source));
  }
  std::vector<int> dist(g.num_nodes(), -1);
  std::queue<Node> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Node u = frontier.front();
    frontier.pop();
    for (Node v : g.ClosedNeighborhood(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

int Distance(const Graph& g, Node u, Node v) {
  if (!g.Contains(v)) throw GraphError("unknown node index " + std::to_string(v));
  return Distances(g, u)[v];
}

}  // namespace cccr
