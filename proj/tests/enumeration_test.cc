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

#include "sigraph/enumeration.h"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sigraph/canonical.h"
#include "sigraph/errors.h"
#include "sigraph/graph6.h"
#include "sigraph/seeds.h"
#include "sigraph/si_metrics.h"

namespace sigraph {
namespace {

std::size_t CountSi(std::size_t n, std::optional<long> gamma = {}) {
  EnumerationOptions options;
  options.gamma = gamma;
  return EnumerateSi(n, options).count;
}

TEST(EnumerateSiTest, Examples) {
  EXPECT_EQ(CountSi(4), 0);
  EXPECT_EQ(CountSi(3), 1);
  EXPECT_TRUE(
      AreIsomorphic(FromGraph6(EnumerateSi(3).representatives.front()), Path(3)));
  EXPECT_GE(CountSi(5, 2), 1);
  EXPECT_EQ(CountSi(7, 2), 0);
}

TEST(EnumerateSiTest, FrozenCounts) {
  const std::vector<std::size_t> expected = {0, 0, 1, 0, 1, 0, 2, 2, 4, 2};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    EXPECT_EQ(CountSi(n), expected[n - 1]) << n;
  }
}

TEST(EnumerateSiTest, ContainsTheFixtures) {
  const auto five = EnumerateSi(5);
  EXPECT_EQ(five.representatives,
            std::vector<std::string>{ToGraph6(ToGraph(Canonicalize(
                BicyclicOrder5())))});
  const auto nine = EnumerateSi(9).representatives;
  const std::string key = ToGraph6(ToGraph(Canonicalize(BicyclicOrder9())));
  EXPECT_NE(std::find(nine.begin(), nine.end(), key), nine.end());
}

TEST(EnumerateSiTest, MatchesLabelledScanUpTo6) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto summary = EnumerateSi(n);
    const auto keys = oracle::LabelledScanSiKeys(n);
    ASSERT_EQ(summary.count, keys.size()) << n;
    std::set<std::string> ours;
    for (const auto& g6 : summary.representatives) {
      ours.insert(oracle::BruteForceKey(FromGraph6(g6)));
    }
    EXPECT_EQ(ours, std::set<std::string>(keys.begin(), keys.end())) << n;
  }
}

TEST(EnumerateSiTest, MatchesBipartiteScanUpTo9) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto summary = EnumerateSi(n);
    const auto oracle_graphs = oracle::BipartiteScanSi(n);
    ASSERT_EQ(summary.count, oracle_graphs.size()) << n;
    for (const Graph& h : oracle_graphs) {
      const bool found = std::any_of(
          summary.representatives.begin(), summary.representatives.end(),
          [&h](const std::string& g6) {
            return oracle::BacktrackIsomorphic(FromGraph6(g6), h);
          });
      EXPECT_TRUE(found) << n;
    }
  }
}

TEST(EnumerateSiTest, EmittedGraphsSatisfyTheInvariants) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto summary = EnumerateSi(n);
    EXPECT_TRUE(summary.complete);
    EXPECT_TRUE(std::is_sorted(summary.representatives.begin(),
                               summary.representatives.end()));
    std::set<std::string> keys;
    for (const auto& g6 : summary.representatives) {
      const Graph g = FromGraph6(g6);
      EXPECT_TRUE(oracle::NaiveIsSi(g)) << g6;
      EXPECT_TRUE(oracle::NaiveIsConnected(g)) << g6;
      EXPECT_TRUE(IsBipartite(g)) << g6;
      EXPECT_EQ(g.size() % 2, 0) << g6;
      keys.insert(Canonicalize(g).key);
    }
    EXPECT_EQ(keys.size(), summary.count);
  }
}

TEST(EnumerateSiTest, GammaFilter) {
  for (std::size_t n = 1; n <= 10; ++n) {
    std::size_t total = 0;
    for (long gamma = 0; gamma <= 20; ++gamma) {
      EnumerationOptions options;
      options.gamma = gamma;
      const auto s = EnumerateSi(n, options);
      for (const auto& g6 : s.representatives) {
        EXPECT_EQ(CyclomaticNumber(FromGraph6(g6)), gamma);
      }
      total += s.count;
    }
    EXPECT_EQ(total, CountSi(n)) << n;
  }
}

TEST(EnumerateSiTest, DeterministicAcrossWorkerCounts) {
  for (std::size_t n : {9, 10}) {
    const auto one = EnumerateSi(n);
    for (unsigned w : {2u, 4u, 8u}) {
      EnumerationOptions options;
      options.workers = w;
      const auto many = EnumerateSi(n, options);
      EXPECT_EQ(many.representatives, one.representatives) << n << "/" << w;
    }
  }
}

TEST(EnumerateSiTest, ExhaustedBudgetIsFlaggedPartial) {
  EnumerationOptions options;
  options.allow_beyond_ceiling = true;
  options.budget = std::chrono::milliseconds(0);
  const auto s = EnumerateSi(14, options);
  EXPECT_FALSE(s.complete);
}

TEST(EnumerateSiTest, Limits) {
  EXPECT_THROW(EnumerateSi(0), ArgumentError);
  EXPECT_THROW(EnumerateSi(11), CapacityError);
  EnumerationOptions options;
  options.allow_beyond_ceiling = true;
  EXPECT_THROW(EnumerateSi(17, options), CapacityError);
  EXPECT_EQ(EnumerateSi(11, options).count, 10);
}

TEST(EnumerateConnectedTest, KnownCounts) {
  const std::vector<std::size_t> expected = {1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(EnumerateConnected(n).size(), expected[n - 1]) << n;
  }
  EXPECT_THROW(EnumerateConnected(8), CapacityError);
}

TEST(EnumerateConnectedTest, MatchesBruteForceUpTo5) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::string> brute;
    oracle::ForEachLabelledGraph(n, [&](const Graph& g) {
      if (oracle::NaiveIsConnected(g)) brute.insert(oracle::BruteForceKey(g));
    });
    std::set<std::string> ours;
    for (const auto& form : EnumerateConnected(n)) {
      ours.insert(oracle::BruteForceKey(ToGraph(form)));
    }
    EXPECT_EQ(ours, brute) << n;
  }
}

TEST(SiCorpusTest, ConcatenatesOrders) {
  EXPECT_EQ(SiCorpus(10).size(), 12);
}

}  // namespace
}  // namespace sigraph
