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

#include "sigraph/transforms.h"

#include <algorithm>
#include <string>

#include "sigraph/errors.h"
#include "sigraph/si_metrics.h"

namespace sigraph {
namespace {

bool IsRegularOfDegree(const Graph& g, std::size_t d) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return g.order() > 0;
}

bool IsEdgeless(const Graph& g) { return g.size() == 0; }

}  // namespace

Graph DeleteEdge(const Graph& g, const Edge& e) {
  if (e.v >= g.order() || e.u == e.v || !g.has_edge(e)) {
    throw ArgumentError("(" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") is not an edge");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size() - 1);
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  return Graph(g.order(), edges);
}

VertexDeletion DeleteVertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range");
  }
  VertexDeletion out;
  out.old_to_new.resize(g.order());
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w != v) out.old_to_new[w] = w < v ? w : w - 1;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) {
      edges.emplace_back(*out.old_to_new[e.u], *out.old_to_new[e.v]);
    }
  }
  out.graph = Graph(g.order() - 1, edges);
  return out;
}

Graph Complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(g.order(), edges);
}

Graph Subdivision(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  const auto original = g.edges();
  for (std::size_t i = 0; i < original.size(); ++i) {
    const auto mid = static_cast<Vertex>(n + i);
    edges.emplace_back(original[i].u, mid);
    edges.emplace_back(mid, original[i].v);
  }
  return Graph(n + g.size(), edges);
}

Graph LineGraph(const Graph& g) {
  if (g.size() == 0) throw ArgumentError("line graph of an edgeless graph");
  const auto original = g.edges();
  // incident[v] lists the indices of edges touching v.
  std::vector<std::vector<Vertex>> incident(g.order());
  for (std::size_t i = 0; i < original.size(); ++i) {
    incident[original[i].u].push_back(static_cast<Vertex>(i));
    incident[original[i].v].push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> edges;
  for (const auto& bundle : incident) {
    for (std::size_t a = 0; a < bundle.size(); ++a) {
      for (std::size_t b = a + 1; b < bundle.size(); ++b) {
        edges.emplace_back(bundle[a], bundle[b]);
      }
    }
  }
  return Graph(original.size(), edges);
}

Graph TotalGraph(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const Graph line = g.size() > 0 ? LineGraph(g) : Graph();
  for (const Edge& e : line.edges()) {
    edges.emplace_back(static_cast<Vertex>(n + e.u),
                       static_cast<Vertex>(n + e.v));
  }
  const auto original = g.edges();
  for (std::size_t i = 0; i < original.size(); ++i) {
    const auto node = static_cast<Vertex>(n + i);
    edges.emplace_back(original[i].u, node);
    edges.emplace_back(original[i].v, node);
  }
  return Graph(n + g.size(), edges);
}

Graph DisjointUnion(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.order());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : h.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(g.order() + h.order(), edges);
}

Graph Join(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) {
    throw ArgumentError("join needs two non-empty graphs");
  }
  const auto shift = static_cast<Vertex>(g.order());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : h.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = 0; b < h.order(); ++b) edges.emplace_back(a, b + shift);
  }
  return Graph(g.order() + h.order(), edges);
}

std::string_view TransformOpName(TransformOp op) {
  switch (op) {
    case TransformOp::kEdgeDelete:
      return "edge-del";
    case TransformOp::kVertexDelete:
      return "vertex-del";
    case TransformOp::kComplement:
      return "complement";
    case TransformOp::kSubdivision:
      return "subdivision";
    case TransformOp::kLine:
      return "line";
    case TransformOp::kTotal:
      return "total";
    case TransformOp::kUnion:
      return "union";
    case TransformOp::kJoin:
      return "join";
  }
  return "?";
}

TransformOp ParseTransformOp(std::string_view name) {
  for (TransformOp op :
       {TransformOp::kEdgeDelete, TransformOp::kVertexDelete,
        TransformOp::kComplement, TransformOp::kSubdivision, TransformOp::kLine,
        TransformOp::kTotal, TransformOp::kUnion, TransformOp::kJoin}) {
    if (TransformOpName(op) == name) return op;
  }
  throw ArgumentError("unknown transform '" + std::string(name) + "'");
}

TransformOutcome ApplyTransform(TransformOp op, const Graph& g,
                                const TransformArgs& args) {
  TransformOutcome out;
  out.op = op;
  out.si_before = IsSi(g);
  const bool connected = g.order() > 0 && IsConnected(g);

  // SI verdict the governing claim predicts for the result, when it applies.
  std::optional<bool> predicted;

  auto need_other = [&args]() -> const Graph& {
    if (!args.other) throw ArgumentError("this transform needs a second graph");
    return *args.other;
  };

  switch (op) {
    case TransformOp::kEdgeDelete: {
      if (!args.edge) throw ArgumentError("edge-del needs an edge");
      out.result = DeleteEdge(g, *args.edge);
      out.theorem_tag = "edge-deletion-breaks-si";
      if (out.si_before && g.size() >= 2) predicted = false;
      break;
    }
    case TransformOp::kVertexDelete: {
      if (!args.vertex) throw ArgumentError("vertex-del needs a vertex");
      auto deletion = DeleteVertex(g, *args.vertex);
      out.result = std::move(deletion.graph);
      out.vertex_map = std::move(deletion.old_to_new);
      out.theorem_tag = "vertex-deletion-breaks-si";
      if (out.si_before && g.order() >= 2) predicted = false;
      break;
    }
    case TransformOp::kComplement:
      out.result = Complement(g);
      out.theorem_tag = "complement-breaks-si";
      if (out.si_before && connected) predicted = false;
      break;
    case TransformOp::kSubdivision:
      out.result = Subdivision(g);
      if (out.si_before) {
        out.theorem_tag = "subdivision-breaks-si";
        predicted = false;
      } else {
        out.theorem_tag = "subdivision-characterization";
        if (connected) {
          const bool listed = g.order() >= 2 &&
                              (IsRegularOfDegree(g, 3) ||
                               (g.order() == 2 && g.size() == 1) ||
                               (g.order() == 4 && g.size() == 3 &&
                                MaxDegree(g) == 3));
          predicted = listed;
        }
      }
      break;
    case TransformOp::kLine: {
      out.result = LineGraph(g);
      if (out.si_before) {
        out.theorem_tag = "line-graph-breaks-si";
        predicted = false;
      } else {
        out.theorem_tag = "line-graph-characterization";
        if (connected) {
          const bool is_p4 = g.order() == 4 && g.size() == 3 &&
                             MaxDegree(g) == 2;
          predicted = is_p4;
        }
      }
      break;
    }
    case TransformOp::kTotal:
      out.result = TotalGraph(g);
      out.theorem_tag = "total-graph-never-si";
      if (!IsEdgeless(g)) predicted = false;
      break;
    case TransformOp::kUnion: {
      const Graph& h = need_other();
      out.result = DisjointUnion(g, h);
      out.theorem_tag = "union-preserves-si";
      if (out.si_before && IsSi(h)) predicted = true;
      break;
    }
    case TransformOp::kJoin: {
      const Graph& h = need_other();
      out.result = Join(g, h);
      out.theorem_tag = "join-bipartite-exception";
      // Any edge on either side closes a triangle with a vertex of the other.
      const std::size_t a = std::min(g.order(), h.order());
      const std::size_t b = std::max(g.order(), h.order());
      predicted = IsEdgeless(g) && IsEdgeless(h) && b == a + 1;
      break;
    }
  }
  out.si_after = IsSi(out.result);
  if (predicted) out.contract_holds = *predicted == out.si_after;
  return out;
}

}  // namespace sigraph
