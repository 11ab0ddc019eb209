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

#include "sigraph/dot.h"

#include <sstream>

namespace sigraph {

std::string ToDot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << g.degree(v) << "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    const long du = static_cast<long>(g.degree(e.u));
    const long dv = static_cast<long>(g.degree(e.v));
    out << "  " << e.u << " -- " << e.v;
    if (du - dv != 1 && dv - du != 1) out << " [color=red]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sigraph
