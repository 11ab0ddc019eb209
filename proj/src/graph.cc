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

#include "sigraph/graph.h"

#include <algorithm>
#include <queue>
#include <string>

#include "sigraph/errors.h"

namespace sigraph {

Graph::Graph(std::size_t order) : adjacency_(order) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges)
    : adjacency_(order) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw ArgumentError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= order) {
      throw ArgumentError("edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + ") has endpoint >= order " +
                          std::to_string(order));
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

namespace {

std::vector<Edge> ToEdges(
    std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a == b) throw ArgumentError("self-loop at vertex " + std::to_string(a));
    edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace

Graph::Graph(std::size_t order,
             std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(order, ToEdges(edges)) {}

void Graph::CheckVertex(Vertex v) const {
  if (v >= order()) {
    throw ArgumentError("vertex " + std::to_string(v) +
                        " out of range for order " + std::to_string(order()));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  CheckVertex(v);
  return adjacency_[v];
}

std::size_t Graph::degree(Vertex v) const {
  CheckVertex(v);
  return adjacency_[v].size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  CheckVertex(u);
  CheckVertex(v);
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order());
  for (std::size_t v = 0; v < order(); ++v) out[v] = adjacency_[v].size();
  return out;
}

std::size_t Degree(const Graph& g, Vertex v) { return g.degree(v); }

std::size_t MinDegree(const Graph& g) {
  const auto d = g.degrees();
  return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

std::size_t MaxDegree(const Graph& g) {
  const auto d = g.degrees();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

std::vector<std::vector<Vertex>> Components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool IsConnected(const Graph& g) {
  if (g.order() == 0) throw ArgumentError("connectivity of the empty graph");
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

BipartiteCheck CheckBipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);

  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    parent[s] = s;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push(w);
        } else if (color[w] == color[v]) {
          // Both BFS paths back to the common ancestor plus the edge v-w
          // close an odd cycle.
          std::vector<Vertex> left{v};
          std::vector<Vertex> right{w};
          Vertex a = v;
          Vertex b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // common ancestor already in `left`
          BipartiteCheck out;
          out.odd_cycle.assign(left.rbegin(), left.rend());
          out.odd_cycle.insert(out.odd_cycle.end(), right.begin(),
                               right.end());
          return out;
        }
      }
    }
  }
  BipartiteCheck out;
  out.is_bipartite = true;
  out.coloring = std::move(color);
  return out;
}

bool IsBipartite(const Graph& g) { return CheckBipartite(g).is_bipartite; }

long CyclomaticNumber(const Graph& g) {
  if (!IsConnected(g)) {
    throw ArgumentError("cyclomatic number requires a connected graph");
  }
  return static_cast<long>(g.size()) - static_cast<long>(g.order()) + 1;
}

Graph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<long> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) {
      throw ArgumentError("induced subgraph vertex out of range");
    }
    index[vertices[i]] = static_cast<long>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      edges.emplace_back(static_cast<Vertex>(index[e.u]),
                         static_cast<Vertex>(index[e.v]));
    }
  }
  return Graph(vertices.size(), edges);
}

Graph Relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) {
    throw ArgumentError("relabelling must cover every vertex");
  }
  std::vector<char> used(g.order(), 0);
  for (Vertex p : perm) {
    if (p >= g.order() || used[p]) {
      throw ArgumentError("relabelling is not a permutation");
    }
    used[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), edges);
}

}  // namespace sigraph
