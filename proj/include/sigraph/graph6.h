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

#ifndef SIGRAPH_GRAPH6_H_
#define SIGRAPH_GRAPH6_H_

#include <string>
#include <string_view>
#include <vector>

#include "sigraph/graph.h"

namespace sigraph {

// Standard graph6 encoding: size prefix N(n), then the upper triangle of the
// adjacency matrix column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...),
// packed big-endian into 6-bit groups offset by 63. No trailing newline.
std::string ToGraph6(const Graph& g);

// Parses one graph6 record. An optional ">>graph6<<" header and trailing
// whitespace are accepted. Throws Graph6Error on anything else that is not a
// canonical graph6 string (bad characters, wrong length, nonzero padding).
Graph FromGraph6(std::string_view text);

// One graph per non-empty line.
std::vector<Graph> ReadGraph6Lines(std::string_view text);

}  // namespace sigraph

#endif  // SIGRAPH_GRAPH6_H_
