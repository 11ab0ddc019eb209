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

#ifndef SIGRAPH_CANONICAL_H_
#define SIGRAPH_CANONICAL_H_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "sigraph/graph.h"

namespace sigraph {

// Largest order Canonicalize accepts by default.
inline constexpr std::size_t kCanonicalMaxOrder = 16;

// Isomorphism-invariant encoding of a graph. Two graphs have equal forms iff
// they are isomorphic. `key` is the graph6 encoding of the canonically
// relabelled graph and doubles as a compact dedup key.
struct CanonicalForm {
  std::size_t order = 0;
  std::vector<Edge> edges;
  std::string key;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.key == b.key;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm& a,
                                          const CanonicalForm& b) {
    return a.key <=> b.key;
  }
};

struct CanonicalLabeling {
  CanonicalForm form;
  // labeling[v] is the position of input vertex v in the canonical graph.
  std::vector<Vertex> labeling;
};

// Colour refinement followed by an individualisation search that keeps the
// lexicographically smallest upper-triangle adjacency encoding. Automorphisms
// found along the way prune sibling branches in the same orbit.
//
// Throws CapacityError when g.order() > max_order.
CanonicalLabeling CanonicalLabel(const Graph& g,
                                 std::size_t max_order = kCanonicalMaxOrder);

CanonicalForm Canonicalize(const Graph& g,
                           std::size_t max_order = kCanonicalMaxOrder);

Graph ToGraph(const CanonicalForm& form);

bool AreIsomorphic(const Graph& a, const Graph& b);

}  // namespace sigraph

#endif  // SIGRAPH_CANONICAL_H_
