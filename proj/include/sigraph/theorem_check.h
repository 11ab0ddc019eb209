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

#ifndef SIGRAPH_THEOREM_CHECK_H_
#define SIGRAPH_THEOREM_CHECK_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sigraph {

enum class TheoremStatus { kPass, kFail };

std::string_view TheoremStatusName(TheoremStatus status);

struct TheoremRow {
  std::string id;
  // One-line statement of the claim being checked.
  std::string anchor;
  TheoremStatus status = TheoremStatus::kPass;
  std::uint64_t checked = 0;
  // graph6 strings (or "order N: ..." notes for existence rows), capped.
  std::vector<std::string> counterexamples;
  std::uint64_t violations = 0;
};

struct TheoremReport {
  std::size_t max_order = 0;
  std::vector<TheoremRow> rows;
  // Connected SI graphs per order, overall and for cyclomatic number 2 and 3.
  std::map<std::size_t, std::size_t> si_counts;
  std::map<std::size_t, std::size_t> bicyclic_counts;
  std::map<std::size_t, std::size_t> tricyclic_counts;

  bool AllPass() const;
  const TheoremRow* Find(std::string_view id) const;
};

inline constexpr std::size_t kMaxCounterexamples = 8;

// Enumerates connected SI graphs up to max_order and all connected graphs up
// to min(max_order, 7), then checks every structural claim on them. Failures
// are report rows, not exceptions. CapacityError above the enumeration
// ceiling.
TheoremReport VerifyTheorems(std::size_t max_order, unsigned workers = 1);

}  // namespace sigraph

#endif  // SIGRAPH_THEOREM_CHECK_H_
