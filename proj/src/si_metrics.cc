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

#include "sigraph/si_metrics.h"

#include <algorithm>
#include <set>

#include "sigraph/errors.h"

namespace sigraph {
namespace {

// Per-vertex-set verdict without the component bookkeeping.
bool VerticesAreSi(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) return false;
  for (Vertex v : vertices) {
    if (g.degree(v) == 0) return false;
    for (Vertex w : g.neighbors(v)) {
      if (Imbalance(g, Edge(v, w)) != 1) return false;
    }
  }
  return true;
}

}  // namespace

std::size_t Imbalance(const Graph& g, const Edge& e) {
  const std::size_t a = g.degree(e.u);
  const std::size_t b = g.degree(e.v);
  return a > b ? a - b : b - a;
}

SiReport CheckSi(const Graph& g) {
  SiReport report;
  if (g.order() == 0) return report;

  for (const Edge& e : g.edges()) {
    if (Imbalance(g, e) != 1) {
      report.witness = e;
      break;
    }
  }
  if (!report.witness) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 0) {
        report.isolated_vertex = v;
        break;
      }
    }
  }
  report.is_si = !report.witness && !report.isolated_vertex;

  auto components = Components(g);
  if (components.size() > 1) {
    for (auto& comp : components) {
      const bool ok = VerticesAreSi(g, comp);
      report.components.push_back({std::move(comp), ok});
    }
  }
  return report;
}

bool IsSi(const Graph& g) {
  if (g.order() == 0) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return false;
  }
  for (const Edge& e : g.edges()) {
    if (Imbalance(g, e) != 1) return false;
  }
  return true;
}

IndexBundle ComputeIndices(const Graph& g) {
  IndexBundle out;
  const auto degrees = g.degrees();
  std::set<std::size_t> distinct;
  for (std::size_t d : degrees) {
    out.m1 += static_cast<std::uint64_t>(d) * d;
    out.pi1 *= BigInt(d) * d;
    distinct.insert(d);
  }
  for (const Edge& e : g.edges()) {
    const std::uint64_t du = degrees[e.u];
    const std::uint64_t dv = degrees[e.v];
    out.irr += du > dv ? du - dv : dv - du;
    out.m2 += du * dv;
    out.pi2 *= BigInt(du) * dv;
  }
  out.degree_set.assign(distinct.begin(), distinct.end());
  if (!degrees.empty()) {
    out.min_degree = out.degree_set.front();
    out.max_degree = out.degree_set.back();
    if (IsConnected(g)) out.cyclomatic = CyclomaticNumber(g);
  }
  return out;
}

bool SiEdgeCountIsEven(const Graph& g) {
  if (!IsSi(g)) {
    throw PreconditionError("edge-count parity is stated for SI graphs only");
  }
  return g.size() % 2 == 0;
}

bool DegreeSetIsContiguous(const Graph& g) {
  if (!IsConnected(g)) {
    throw ArgumentError("degree-set contiguity requires a connected graph");
  }
  const auto bundle = ComputeIndices(g);
  return bundle.degree_set.size() ==
         bundle.max_degree - bundle.min_degree + 1;
}

EdgeCountBounds EdgeCountBoundsFor(std::size_t n) {
  if (n == 0) throw ArgumentError("edge-count bounds need order >= 1");
  const std::uint64_t nn = n;
  return {nn - 1, (nn * nn - 1) / 4};
}

}  // namespace sigraph
