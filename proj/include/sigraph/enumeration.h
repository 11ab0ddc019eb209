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

#ifndef SIGRAPH_ENUMERATION_H_
#define SIGRAPH_ENUMERATION_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigraph/canonical.h"
#include "sigraph/graph.h"

namespace sigraph {

// Orders up to this are enumerated without opting in.
inline constexpr std::size_t kDefaultEnumerationCeiling = 10;
// Absolute limit, reachable with EnumerationOptions::allow_beyond_ceiling.
inline constexpr std::size_t kMaxEnumerationOrder = kCanonicalMaxOrder;
inline constexpr std::size_t kConnectedEnumerationMaxOrder = 7;

struct EnumerationOptions {
  // Keep only graphs with this cyclomatic number.
  std::optional<long> gamma;
  // Wall-clock limit; the summary is flagged incomplete when it runs out.
  std::optional<std::chrono::milliseconds> budget;
  // Degree profiles are handed out to this many threads.
  unsigned workers = 1;
  bool allow_beyond_ceiling = false;
};

struct SearchStats {
  std::uint64_t degree_profiles = 0;  // feasible profiles explored
  std::uint64_t nodes = 0;            // adjacency rows tried
  std::uint64_t leaves = 0;           // labelled realisations reached
  std::uint64_t duplicates = 0;       // leaves whose class was already seen
};

struct EnumerationSummary {
  std::size_t order = 0;
  std::optional<long> gamma;
  std::size_t count = 0;
  // graph6 of each canonical representative, sorted.
  std::vector<std::string> representatives;
  // False when the budget ran out; count and representatives are then a
  // lower bound.
  bool complete = true;
  std::chrono::duration<double> elapsed{0};
  SearchStats stats;
};

// All connected SI graphs of the given order up to isomorphism.
//
// Vertices are grouped by final degree. Edges may only join consecutive
// degree classes, which fixes the number of edges between each pair of
// classes, so a degree profile is feasible only if those counts fit. For each
// feasible profile the adjacency rows are filled vertex by vertex; unprocessed
// vertices that are still interchangeable form cells, and a row may only take
// a prefix of each cell. Leaves are deduplicated by canonical form.
//
// Throws CapacityError above kDefaultEnumerationCeiling unless opted in, and
// above kMaxEnumerationOrder always; ArgumentError for order 0.
EnumerationSummary EnumerateSi(std::size_t order,
                               const EnumerationOptions& options = {});

// All connected graphs of the given order up to isomorphism, sorted by key.
// CapacityError above kConnectedEnumerationMaxOrder.
std::vector<CanonicalForm> EnumerateConnected(std::size_t order);

// Every connected SI graph with order in [1, max_order], decoded.
std::vector<Graph> SiCorpus(std::size_t max_order);

}  // namespace sigraph

#endif  // SIGRAPH_ENUMERATION_H_
