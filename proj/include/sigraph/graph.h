// Copyright 2026 The sigraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIGRAPH_GRAPH_H_
#define SIGRAPH_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sigraph {

using Vertex = std::uint32_t;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..order()-1.
//
// Construction normalizes the edge list (sorted, deduplicated) and rejects
// self-loops and out-of-range endpoints with ArgumentError.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order,
        std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }

  // Sorted neighbor list. Throws ArgumentError for v >= order().
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  void CheckVertex(Vertex v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Degree of v; ArgumentError when v is out of range.
std::size_t Degree(const Graph& g, Vertex v);

std::size_t MinDegree(const Graph& g);
std::size_t MaxDegree(const Graph& g);

// Single traversal from vertex 0. ArgumentError on the empty graph.
bool IsConnected(const Graph& g);

// Connected components, each a sorted vertex list, ordered by smallest member.
std::vector<std::vector<Vertex>> Components(const Graph& g);

struct BipartiteCheck {
  bool is_bipartite = false;
  // 0/1 color per vertex when bipartite.
  std::vector<int> coloring;
  // Closed walk v0, v1, ..., v_{2k} (v_{2k} adjacent to v0) of odd length
  // when not bipartite. Consecutive entries are adjacent.
  std::vector<Vertex> odd_cycle;
};

BipartiteCheck CheckBipartite(const Graph& g);
bool IsBipartite(const Graph& g);

// m - n + 1. ArgumentError when g is disconnected or empty.
long CyclomaticNumber(const Graph& g);

// Subgraph induced by `vertices` (relabelled densely in the given order).
Graph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices);

// Graph with vertex v renamed to perm[v].
Graph Relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace sigraph

#endif  // SIGRAPH_GRAPH_H_
