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

#ifndef SIGRAPH_SEEDS_H_
#define SIGRAPH_SEEDS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sigraph/graph.h"

namespace sigraph {

Graph Path(std::size_t n);
Graph Cycle(std::size_t n);
Graph Star(std::size_t leaves);  // K_{1,leaves}, centre is vertex 0
Graph Complete(std::size_t n);
Graph Edgeless(std::size_t n);
// Part A is 0..a-1, part B is a..a+b-1.
Graph CompleteBipartite(std::size_t a, std::size_t b);

// Bicyclic SI graph of order 5 (isomorphic to K_{2,3}), degrees (3,2,2,3,2).
Graph BicyclicOrder5();
// Bicyclic SI graph of order 9: the 4-cycle 0-1-2-3, the path 3-5-6-4-1
// joining two of its corners, and the pendant path 6-7-8.
Graph BicyclicOrder9();

// Resolves a catalog name: p3, k2, k13, kmm1:<m>, fig1-order5, fig1-order9.
// Throws UnknownSeedError for anything else.
Graph SeedByName(std::string_view name);

std::vector<std::string> SeedNames();

}  // namespace sigraph

#endif  // SIGRAPH_SEEDS_H_
