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

#include "sigraph/theorem_check.h"

#include <map>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "sigraph/errors.h"

namespace sigraph {
namespace {

using ::testing::Contains;
using ::testing::IsEmpty;
using ::testing::Not;

TEST(VerifyTheoremsTest, UpToOrder6) {
  const TheoremReport r = VerifyTheorems(6);
  EXPECT_EQ(r.max_order, 6);
  const std::map<std::size_t, std::size_t> counts = {
      {1, 0}, {2, 0}, {3, 1}, {4, 0}, {5, 1}, {6, 0}};
  EXPECT_EQ(r.si_counts, counts);
  for (const auto& row : r.rows) {
    EXPECT_THAT(row.anchor, Not(IsEmpty())) << row.id;
    if (row.id == "subdivision-characterization") continue;
    EXPECT_EQ(row.status, TheoremStatus::kPass) << row.id;
    EXPECT_GT(row.checked, 0) << row.id;
  }
}

TEST(VerifyTheoremsTest, SubdivisionClaimFailsFromOrder6) {
  const TheoremReport five = VerifyTheorems(5);
  ASSERT_NE(five.Find("subdivision-characterization"), nullptr);
  EXPECT_EQ(five.Find("subdivision-characterization")->status,
            TheoremStatus::kPass);
  EXPECT_TRUE(five.AllPass());

  const TheoremReport six = VerifyTheorems(6);
  const TheoremRow* row = six.Find("subdivision-characterization");
  ASSERT_NE(row, nullptr);
  EXPECT_EQ(row->status, TheoremStatus::kFail);
  // The double star on 6 vertices.
  EXPECT_THAT(row->counterexamples, Contains("E?NG"));
  EXPECT_EQ(six.Find("subdivision-degree-rule")->status, TheoremStatus::kPass);
}

TEST(VerifyTheoremsTest, ExistenceCountsUpTo9) {
  const TheoremReport r = VerifyTheorems(9);
  for (std::size_t n = 1; n <= 9; ++n) {
    EXPECT_EQ(r.bicyclic_counts.at(n) > 0, n == 5 || n == 9) << n;
    EXPECT_EQ(r.tricyclic_counts.at(n), 0) << n;
  }
  EXPECT_EQ(r.Find("bicyclic-orders")->status, TheoremStatus::kPass);
  EXPECT_EQ(r.Find("tricyclic-orders")->status, TheoremStatus::kPass);
  EXPECT_EQ(r.Find("existence-by-order")->status, TheoremStatus::kPass);
}

TEST(VerifyTheoremsTest, Limits) {
  EXPECT_THROW(VerifyTheorems(0), ArgumentError);
  EXPECT_THROW(VerifyTheorems(11), CapacityError);
}

}  // namespace
}  // namespace sigraph
