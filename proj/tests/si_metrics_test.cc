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

#include <cstdint>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "sigraph/canonical.h"
#include "sigraph/errors.h"
#include "sigraph/seeds.h"

namespace sigraph {
namespace {

using ::testing::ElementsAre;
using ::testing::Optional;

TEST(CheckSiTest, SmallExamples) {
  EXPECT_TRUE(IsSi(Path(3)));
  EXPECT_TRUE(IsSi(BicyclicOrder5()));
  EXPECT_TRUE(IsSi(BicyclicOrder9()));
  EXPECT_TRUE(IsSi(CompleteBipartite(3, 4)));
  EXPECT_FALSE(IsSi(Path(4)));
  EXPECT_FALSE(IsSi(Cycle(4)));
}

TEST(CheckSiTest, K2WitnessIsItsOnlyEdge) {
  const SiReport r = CheckSi(Path(2));
  EXPECT_FALSE(r.is_si);
  EXPECT_THAT(r.witness, Optional(Edge(0, 1)));
  EXPECT_FALSE(r.isolated_vertex.has_value());
}

TEST(CheckSiTest, WitnessIsSmallestBadEdge) {
  // Star K_{1,3} plus a pendant on leaf 3: edge (0,3) is 3-2, (0,1) is 3-1.
  Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  const SiReport r = CheckSi(g);
  EXPECT_FALSE(r.is_si);
  EXPECT_THAT(r.witness, Optional(Edge(0, 1)));
  EXPECT_NE(Imbalance(g, *r.witness), 1);
}

TEST(CheckSiTest, IsolatedVerticesAreNotSi) {
  const SiReport k1 = CheckSi(Graph(1));
  EXPECT_FALSE(k1.is_si);
  EXPECT_FALSE(k1.witness.has_value());
  EXPECT_THAT(k1.isolated_vertex, Optional(0));

  // P3 plus an isolated vertex.
  const SiReport r = CheckSi(Graph(4, {{0, 1}, {1, 2}}));
  EXPECT_FALSE(r.is_si);
  EXPECT_THAT(r.isolated_vertex, Optional(3));
  ASSERT_EQ(r.components.size(), 2);
  EXPECT_TRUE(r.components[0].is_si);
  EXPECT_FALSE(r.components[1].is_si);

  EXPECT_FALSE(IsSi(Graph(0)));
}

TEST(CheckSiTest, DisconnectedIsConjunctionOverComponents) {
  const SiReport two = CheckSi(Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}));
  EXPECT_TRUE(two.is_si);
  EXPECT_EQ(two.components.size(), 2);
  EXPECT_FALSE(IsSi(Graph(5, {{0, 1}, {1, 2}, {3, 4}})));
}

TEST(CheckSiTest, AgreesWithNaivePredicateOnAllGraphsOfOrder6) {
  oracle::ForEachLabelledGraph(6, [](const Graph& g) {
    const SiReport r = CheckSi(g);
    ASSERT_EQ(r.is_si, oracle::NaiveIsSi(g));
    ASSERT_EQ(r.is_si, !r.witness && !r.isolated_vertex);
    if (r.witness) ASSERT_NE(Imbalance(g, *r.witness), 1);
  });
}

TEST(IndicesTest, PathOfOrder3) {
  const IndexBundle idx = ComputeIndices(Path(3));
  EXPECT_EQ(idx.irr, 2);
  EXPECT_EQ(idx.m1, 6);
  EXPECT_EQ(idx.m2, 4);
  EXPECT_EQ(idx.pi1, 4);  // 1^2 * 2^2 * 1^2
  EXPECT_EQ(idx.pi2, 4);
  EXPECT_THAT(idx.degree_set, ElementsAre(1, 2));
  EXPECT_EQ(idx.min_degree, 1);
  EXPECT_EQ(idx.max_degree, 2);
  EXPECT_THAT(idx.cyclomatic, Optional(0));
}

TEST(IndicesTest, CompleteBipartiteAndFixture) {
  const IndexBundle k23 = ComputeIndices(CompleteBipartite(2, 3));
  EXPECT_EQ(k23.irr, 6);
  EXPECT_EQ(k23.m1, 30);
  EXPECT_EQ(k23.m2, 36);
  EXPECT_EQ(ComputeIndices(BicyclicOrder5()).irr, 6);
  EXPECT_FALSE(ComputeIndices(Edgeless(3)).cyclomatic.has_value());
}

TEST(IndicesTest, ProductsExceed64Bits) {
  // K_{8,8}: Pi1 = 64^16 = 2^96.
  const IndexBundle idx = ComputeIndices(CompleteBipartite(8, 8));
  EXPECT_EQ(idx.pi1, BigInt(1) << 96);
  EXPECT_EQ(idx.pi2.str(), (BigInt(1) << 384).str());
}

TEST(IndicesTest, AgreesWithNaiveSummationOnAllGraphsOfOrder6) {
  oracle::ForEachLabelledGraph(6, [](const Graph& g) {
    const auto d = oracle::NaiveDegrees(g);
    std::uint64_t irr = 0;
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;
    BigInt pi1 = 1;
    BigInt pi2 = 1;
    for (std::size_t x : d) {
      m1 += x * x;
      pi1 *= x * x;
    }
    for (const Edge& e : g.edges()) {
      const std::size_t a = d[e.u];
      const std::size_t b = d[e.v];
      irr += a > b ? a - b : b - a;
      m2 += a * b;
      pi2 *= a * b;
    }
    const IndexBundle idx = ComputeIndices(g);
    ASSERT_EQ(idx.irr, irr);
    ASSERT_EQ(idx.m1, m1);
    ASSERT_EQ(idx.m2, m2);
    ASSERT_EQ(idx.pi1, pi1);
    ASSERT_EQ(idx.pi2, pi2);
  });
}

TEST(SiEdgeCountTest, EvenOnSiInputsAndRejectsOthers) {
  EXPECT_TRUE(SiEdgeCountIsEven(Path(3)));
  EXPECT_TRUE(SiEdgeCountIsEven(BicyclicOrder5()));
  EXPECT_TRUE(SiEdgeCountIsEven(BicyclicOrder9()));
  EXPECT_THROW(SiEdgeCountIsEven(Path(2)), PreconditionError);
}

TEST(DegreeSetTest, Contiguity) {
  EXPECT_TRUE(DegreeSetIsContiguous(CompleteBipartite(3, 4)));
  EXPECT_TRUE(DegreeSetIsContiguous(BicyclicOrder9()));
  EXPECT_FALSE(DegreeSetIsContiguous(Star(5)));
  EXPECT_THROW(DegreeSetIsContiguous(Edgeless(2)), ArgumentError);
}

TEST(EdgeCountBoundsTest, Examples) {
  EXPECT_EQ(EdgeCountBoundsFor(3).lower, 2);
  EXPECT_EQ(EdgeCountBoundsFor(3).upper, 2);
  EXPECT_EQ(EdgeCountBoundsFor(5).lower, 4);
  EXPECT_EQ(EdgeCountBoundsFor(5).upper, 6);
  EXPECT_EQ(EdgeCountBoundsFor(7).upper, 12);
  EXPECT_EQ(CompleteBipartite(3, 4).size(), 12);
  EXPECT_EQ(BicyclicOrder5().size(), EdgeCountBoundsFor(5).upper);
  EXPECT_TRUE(AreIsomorphic(BicyclicOrder5(), CompleteBipartite(2, 3)));
  EXPECT_THROW(EdgeCountBoundsFor(0), ArgumentError);
}

}  // namespace
}  // namespace sigraph
