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

#ifndef SIGRAPH_SI_METRICS_H_
#define SIGRAPH_SI_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sigraph/graph.h"

namespace sigraph {

using BigInt = boost::multiprecision::cpp_int;

struct ComponentVerdict {
  std::vector<Vertex> vertices;
  bool is_si = false;
};

// Outcome of the stepwise-irregularity test.
//
// A graph is SI when it has at least one vertex, no isolated vertices, and
// every edge joins vertices whose degrees differ by exactly one. A
// disconnected graph is SI iff each component is. When is_si is false exactly
// one witness is set: the smallest offending edge if there is one, otherwise
// the smallest isolated vertex. The empty graph has neither.
struct SiReport {
  bool is_si = false;
  std::optional<Edge> witness;
  std::optional<Vertex> isolated_vertex;
  // Filled only for disconnected graphs.
  std::vector<ComponentVerdict> components;
};

SiReport CheckSi(const Graph& g);
bool IsSi(const Graph& g);

// |d(u) - d(v)| for an edge.
std::size_t Imbalance(const Graph& g, const Edge& e);

struct IndexBundle {
  std::uint64_t irr = 0;  // sum of edge imbalances
  std::uint64_t m1 = 0;   // sum of squared degrees
  std::uint64_t m2 = 0;   // sum over edges of degree products
  BigInt pi1 = 1;         // product of squared degrees
  BigInt pi2 = 1;         // product over edges of degree products
  std::vector<std::size_t> degree_set;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  // m - n + 1, present only for connected graphs.
  std::optional<long> cyclomatic;
};

IndexBundle ComputeIndices(const Graph& g);

// m is even. Throws PreconditionError when g is not SI.
bool SiEdgeCountIsEven(const Graph& g);

// Degree set is {delta, delta+1, ..., Delta}. ArgumentError if disconnected.
bool DegreeSetIsContiguous(const Graph& g);

struct EdgeCountBounds {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
};

// (n - 1, floor((n^2 - 1) / 4)): the edge-count window for a connected SI
// graph of order n. ArgumentError for n == 0.
EdgeCountBounds EdgeCountBoundsFor(std::size_t n);

}  // namespace sigraph

#endif  // SIGRAPH_SI_METRICS_H_
