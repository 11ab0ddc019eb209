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

#ifndef SIGRAPH_TRANSFORMS_H_
#define SIGRAPH_TRANSFORMS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigraph/graph.h"

namespace sigraph {

// ArgumentError when e is not an edge of g.
Graph DeleteEdge(const Graph& g, const Edge& e);

struct VertexDeletion {
  Graph graph;
  // old_to_new[v] is v's id in `graph`, empty for the deleted vertex.
  std::vector<std::optional<Vertex>> old_to_new;
};

// Removes v and its edges; later vertices shift down by one.
VertexDeletion DeleteVertex(const Graph& g, Vertex v);

Graph Complement(const Graph& g);

// Vertices 0..n-1 are the originals; n+i subdivides the i-th edge of
// g.edges().
Graph Subdivision(const Graph& g);

// Vertex i stands for the i-th edge of g.edges(). ArgumentError if g has no
// edges.
Graph LineGraph(const Graph& g);

// Vertices 0..n-1 are the originals, n+i is the i-th edge of g.edges().
Graph TotalGraph(const Graph& g);

// h's vertices follow g's.
Graph DisjointUnion(const Graph& g, const Graph& h);

// DisjointUnion plus every edge between the two sides. ArgumentError if
// either side has no vertices.
Graph Join(const Graph& g, const Graph& h);

enum class TransformOp {
  kEdgeDelete,
  kVertexDelete,
  kComplement,
  kSubdivision,
  kLine,
  kTotal,
  kUnion,
  kJoin,
};

std::string_view TransformOpName(TransformOp op);
// edge-del, vertex-del, complement, subdivision, line, total, union, join.
TransformOp ParseTransformOp(std::string_view name);

struct TransformArgs {
  std::optional<Edge> edge;           // kEdgeDelete
  std::optional<Vertex> vertex;       // kVertexDelete
  std::optional<Graph> other;         // kUnion, kJoin
};

struct TransformOutcome {
  TransformOp op = TransformOp::kComplement;
  Graph result;
  bool si_before = false;
  bool si_after = false;
  // Identifier of the structural claim governing this (input, result) pair.
  std::string theorem_tag;
  // Whether that claim's predicted verdict matches si_after. Absent when the
  // claim does not apply to this input (e.g. non-SI input to a deletion).
  std::optional<bool> contract_holds;
  // Vertex deletion only.
  std::vector<std::optional<Vertex>> vertex_map;
};

TransformOutcome ApplyTransform(TransformOp op, const Graph& g,
                                const TransformArgs& args);

}  // namespace sigraph

#endif  // SIGRAPH_TRANSFORMS_H_
