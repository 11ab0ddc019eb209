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

#include "sigraph/seeds.h"

#include <charconv>
#include <string>

#include "sigraph/errors.h"

namespace sigraph {

Graph Path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph Cycle(std::size_t n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  }
  return Graph(n, edges);
}

Graph Star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph Complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph Edgeless(std::size_t n) { return Graph(n); }

Graph CompleteBipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) {
      edges.emplace_back(i, static_cast<Vertex>(a + j));
    }
  }
  return Graph(a + b, edges);
}

Graph BicyclicOrder5() {
  return Graph(5, {{0, 1}, {0, 4}, {4, 3}, {3, 1}, {3, 2}, {2, 0}});
}

Graph BicyclicOrder9() {
  return Graph(9, {{0, 1},
                   {1, 2},
                   {2, 3},
                   {3, 0},
                   {3, 5},
                   {5, 6},
                   {6, 4},
                   {4, 1},
                   {6, 7},
                   {7, 8}});
}

Graph SeedByName(std::string_view name) {
  if (name == "p3") return Path(3);
  if (name == "k2") return Complete(2);
  if (name == "k13") return Star(3);
  if (name == "fig1-order5") return BicyclicOrder5();
  if (name == "fig1-order9") return BicyclicOrder9();
  constexpr std::string_view kKmm1 = "kmm1:";
  if (name.starts_with(kKmm1)) {
    const std::string_view digits = name.substr(kKmm1.size());
    std::size_t m = 0;
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc() && end == digits.data() + digits.size() && m >= 1 &&
        m <= 1000) {
      return CompleteBipartite(m, m + 1);
    }
  }
  throw UnknownSeedError("unknown seed '" + std::string(name) +
                         "' (expected p3, k2, k13, kmm1:<m>, fig1-order5, "
                         "fig1-order9)");
}

std::vector<std::string> SeedNames() {
  return {"p3", "k2", "k13", "kmm1:<m>", "fig1-order5", "fig1-order9"};
}

}  // namespace sigraph
