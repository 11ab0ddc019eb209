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

#include "sigraph/graph6.h"

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sigraph/errors.h"
#include "sigraph/seeds.h"

namespace sigraph {
namespace {

// Written by an independent encoder.
constexpr char kPath70[] = R"(~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C??????????@???????????G)";

TEST(Graph6Test, EncodesKnownGraphs) {
  EXPECT_EQ(ToGraph6(Graph(0)), "?");
  EXPECT_EQ(ToGraph6(Graph(1)), "@");
  EXPECT_EQ(ToGraph6(Path(2)), "A_");
  EXPECT_EQ(ToGraph6(Path(3)), "Bg");
  EXPECT_EQ(ToGraph6(Complete(4)), "C~");
  EXPECT_EQ(ToGraph6(Cycle(5)), "Dhc");
  EXPECT_EQ(ToGraph6(Path(70)), kPath70);
}

TEST(Graph6Test, DecodesKnownGraphs) {
  EXPECT_EQ(FromGraph6("Dhc"), Cycle(5));
  EXPECT_EQ(FromGraph6(">>graph6<<C~\n"), Complete(4));
  EXPECT_EQ(FromGraph6(kPath70), Path(70));
  const Graph petersen = FromGraph6("IheA@GUAo");
  EXPECT_EQ(petersen.order(), 10);
  EXPECT_EQ(petersen.size(), 15);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(petersen.degree(v), 3);
}

TEST(Graph6Test, RoundTripsEveryGraphOfOrder5) {
  oracle::ForEachLabelledGraph(5, [](const Graph& g) {
    const std::string s = ToGraph6(g);
    ASSERT_EQ(FromGraph6(s), g);
    ASSERT_EQ(ToGraph6(FromGraph6(s)), s);
  });
}

TEST(Graph6Test, RoundTripsRandomGraphsAcrossSizeFieldBoundaries) {
  std::mt19937 rng(11);
  for (std::size_t n : {61, 62, 63, 64, 200}) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng() % 7 == 0) edges.emplace_back(u, v);
      }
    }
    const Graph g(n, edges);
    const std::string s = ToGraph6(g);
    EXPECT_EQ(s[0] == '~', n >= 63) << n;
    EXPECT_EQ(FromGraph6(s), g) << n;
  }
}

TEST(Graph6Test, RejectsMalformedInput) {
  EXPECT_THROW(FromGraph6(""), Graph6Error);
  EXPECT_THROW(FromGraph6("A"), Graph6Error);      // missing body
  EXPECT_THROW(FromGraph6("A_?"), Graph6Error);    // extra byte
  EXPECT_THROW(FromGraph6("A`"), Graph6Error);     // padding bit set
  EXPECT_THROW(FromGraph6("B\x7f"), Graph6Error);  // out of range byte
  EXPECT_THROW(FromGraph6(":Bc"), Graph6Error);    // sparse6
  EXPECT_THROW(FromGraph6("&Bg"), Graph6Error);    // digraph6
  EXPECT_THROW(FromGraph6("~??~"), Graph6Error);   // non-canonical size
  EXPECT_THROW(FromGraph6("~"), Graph6Error);
}

TEST(Graph6Test, ReadsOneGraphPerLine) {
  const auto graphs = ReadGraph6Lines("A_\r\n\nBg\n>>graph6<<C~");
  ASSERT_EQ(graphs.size(), 3);
  EXPECT_EQ(graphs[0], Path(2));
  EXPECT_EQ(graphs[1], Path(3));
  EXPECT_EQ(graphs[2], Complete(4));
}

}  // namespace
}  // namespace sigraph
