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

#ifndef SIGRAPH_DOT_H_
#define SIGRAPH_DOT_H_

#include <string>
#include <string_view>

#include "sigraph/graph.h"

namespace sigraph {

// Undirected DOT with each vertex labelled by its degree. Edges whose endpoint
// degrees do not differ by exactly one are drawn in red.
std::string ToDot(const Graph& g, std::string_view name = "G");

}  // namespace sigraph

#endif  // SIGRAPH_DOT_H_
