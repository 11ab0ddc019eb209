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
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>

#include "sigraph/errors.h"
#include "sigraph/graph6.h"

namespace sigraph {
namespace {

using Mask = std::uint32_t;
using Clock = std::chrono::steady_clock;

static_assert(kMaxEnumerationOrder <= 32, "row masks are 32 bits wide");

constexpr Mask Bit(std::size_t i) { return Mask{1} << i; }

// Multiplicity of each degree min_degree, min_degree+1, ..., in order.
struct Profile {
  std::size_t min_degree = 0;
  std::vector<std::size_t> counts;
};

class ProfileCollector {
 public:
  ProfileCollector(std::size_t n, std::optional<long> gamma) : n_(n) {
    if (gamma) {
      const long sum = 2 * (static_cast<long>(n) - 1 + *gamma);
      if (sum < 0) {
        impossible_ = true;
      } else {
        target_sum_ = static_cast<std::size_t>(sum);
      }
    }
  }

  std::vector<Profile> Collect() {
    if (impossible_ || n_ < 3) return {};
    for (std::size_t delta = 1; delta + 1 < n_; ++delta) {
      counts_.clear();
      min_degree_ = delta;
      Extend(delta, n_, 0, 0);
    }
    return std::move(out_);
  }

 private:
  // Chooses the multiplicity of degree d. `e_in` edges arrive from class d-1.
  void Extend(std::size_t d, std::size_t remaining, std::size_t e_in,
              std::size_t degree_sum) {
    const std::size_t prev = counts_.empty() ? 0 : counts_.back();
    const std::size_t prev2 =
        counts_.size() >= 2 ? counts_[counts_.size() - 2] : 0;
    for (std::size_t c = 1; c <= remaining; ++c) {
      if (e_in > prev * c && !counts_.empty()) continue;
      if (e_in > d * c) continue;
      // Class d-1 vertices see only classes d-2 and d.
      if (!counts_.empty() && d - 1 > prev2 + c) continue;
      const std::size_t sum = degree_sum + d * c;
      if (target_sum_ && sum > *target_sum_) break;
      const std::size_t e_out = d * c - e_in;
      counts_.push_back(c);
      if (e_out == 0) {
        if (remaining == c && counts_.size() >= 2 && d <= prev &&
            (!target_sum_ || sum == *target_sum_)) {
          out_.push_back({min_degree_, counts_});
        }
      } else if (remaining > c) {
        Extend(d + 1, remaining - c, e_out, sum);
      }
      counts_.pop_back();
    }
  }

  std::size_t n_;
  std::optional<std::size_t> target_sum_;
  bool impossible_ = false;
  std::size_t min_degree_ = 0;
  std::vector<std::size_t> counts_;
  std::vector<Profile> out_;
};

struct SharedState {
  std::mutex mu;
  std::unordered_set<std::string> seen;
  std::atomic<bool> out_of_time{false};
  std::optional<Clock::time_point> deadline;
  std::atomic<std::size_t> next_profile{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> leaves{0};
  std::atomic<std::uint64_t> duplicates{0};
};

// Fills adjacency rows for one degree profile.
class ProfileSearch {
 public:
  ProfileSearch(std::size_t n, const Profile& profile, SharedState& shared)
      : n_(n), shared_(shared), target_(n), adj_(n, 0), cur_(n, 0) {
    // Highest degree first.
    std::size_t v = 0;
    const std::size_t classes = profile.counts.size();
    class_mask_.assign(profile.min_degree + classes + 2, 0);
    for (std::size_t k = classes; k-- > 0;) {
      const std::size_t degree = profile.min_degree + k;
      cell_starts_ |= Bit(v);
      for (std::size_t i = 0; i < profile.counts[k]; ++i, ++v) {
        target_[v] = degree;
        class_mask_[degree] |= Bit(v);
      }
    }
    for (std::size_t w = 0; w < n_; ++w) {
      const std::size_t d = target_[w];
      neighbour_classes_.push_back(class_mask_[d - 1] | class_mask_[d + 1]);
      if (target_[w] > 0) open_ |= Bit(w);
    }
  }

  void Run() {
    Row(0);
    shared_.nodes.fetch_add(local_nodes_ % 1024, std::memory_order_relaxed);
  }

 private:
  bool OutOfTime() {
    if (shared_.out_of_time.load(std::memory_order_relaxed)) return true;
    if (++local_nodes_ % 1024 == 0) {
      shared_.nodes.fetch_add(1024, std::memory_order_relaxed);
      if (shared_.deadline && Clock::now() > *shared_.deadline) {
        shared_.out_of_time = true;
        return true;
      }
    }
    return false;
  }

  void Row(std::size_t v) {
    if (OutOfTime()) return;
    if (v == n_) {
      Leaf();
      return;
    }
    const std::size_t need = target_[v] - cur_[v];
    // Candidate cells: twins after v in a neighbouring degree class that can
    // still take edges.
    candidates_[v].clear();
    const Mask allowed = neighbour_classes_[v] & open_;
    for (std::size_t s = v + 1; s < n_;) {
      std::size_t e = s + 1;
      while (e < n_ && !(cell_starts_ & Bit(e))) ++e;
      if (allowed & Bit(s)) candidates_[v].push_back({s, e});
      s = e;
    }
    std::size_t capacity = 0;
    for (const auto& [s, e] : candidates_[v]) capacity += e - s;
    if (capacity < need) return;
    Assign(v, 0, need, capacity);
  }

  // Chooses how many vertices of candidate cell `k` (a prefix) join v.
  void Assign(std::size_t v, std::size_t k, std::size_t need,
              std::size_t capacity) {
    if (need == 0) {
      FinishRow(v);
      return;
    }
    if (k == candidates_[v].size() || capacity < need) return;
    const auto [s, e] = candidates_[v][k];
    const std::size_t size = e - s;
    const std::size_t rest = capacity - size;
    const std::size_t max_take = std::min(size, need);
    const Mask saved_starts = cell_starts_;
    const Mask saved_open = open_;
    for (std::size_t t = 0; t <= max_take; ++t) {
      if (t > 0) {
        const std::size_t x = s + t - 1;
        adj_[v] |= Bit(x);
        adj_[x] |= Bit(v);
        if (++cur_[x] == target_[x]) open_ &= ~Bit(x);
      }
      if (need - t > rest) continue;
      if (t > 0 && s + t < e) {
        cell_starts_ = saved_starts | Bit(s + t);
      } else {
        cell_starts_ = saved_starts;
      }
      Assign(v, k + 1, need - t, rest);
      if (shared_.out_of_time.load(std::memory_order_relaxed)) break;
    }
    for (std::size_t x = s; x < s + max_take; ++x) {
      if (adj_[v] & Bit(x)) {
        adj_[v] &= ~Bit(x);
        adj_[x] &= ~Bit(v);
        --cur_[x];
      }
    }
    cell_starts_ = saved_starts;
    open_ = saved_open;
  }

  void FinishRow(std::size_t v) {
    const std::size_t saved_cur = cur_[v];
    const Mask saved_open = open_;
    cur_[v] = target_[v];
    open_ &= ~Bit(v);
    const Mask later = v + 1 < n_ ? ~Mask{0} << (v + 1) : 0;
    bool feasible = true;
    for (std::size_t w = v + 1; w < n_ && feasible; ++w) {
      const std::size_t need = target_[w] - cur_[w];
      if (need == 0) continue;
      const auto avail = static_cast<std::size_t>(
          std::popcount(neighbour_classes_[w] & open_ & later));
      feasible = need <= avail;
    }
    if (feasible) Row(v + 1);
    cur_[v] = saved_cur;
    open_ = saved_open;
  }

  bool Connected() const {
    Mask seen = Bit(0);
    Mask frontier = Bit(0);
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) {
        next |= adj_[std::countr_zero(f)];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (n_ == 32 ? ~Mask{0} : Bit(n_) - 1);
  }

  void Leaf() {
    shared_.leaves.fetch_add(1, std::memory_order_relaxed);
    if (!Connected()) return;
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n_; ++u) {
      for (Mask row = adj_[u] & ~(Bit(u + 1) - 1); row; row &= row - 1) {
        edges.emplace_back(static_cast<Vertex>(u),
                           static_cast<Vertex>(std::countr_zero(row)));
      }
    }
    std::string key = Canonicalize(Graph(n_, edges), kMaxEnumerationOrder).key;
    std::lock_guard lock(shared_.mu);
    if (!shared_.seen.insert(std::move(key)).second) {
      shared_.duplicates.fetch_add(1, std::memory_order_relaxed);
    }
  }

  struct Interval {
    std::size_t start;
    std::size_t end;
  };

  std::size_t n_;
  SharedState& shared_;
  std::vector<std::size_t> target_;
  std::vector<Mask> adj_;
  std::vector<std::size_t> cur_;
  std::vector<Mask> class_mask_;
  std::vector<Mask> neighbour_classes_;
  Mask cell_starts_ = 0;
  Mask open_ = 0;
  std::uint64_t local_nodes_ = 0;
  std::vector<Interval> candidates_[kMaxEnumerationOrder];
};

}  // namespace

EnumerationSummary EnumerateSi(std::size_t order,
                               const EnumerationOptions& options) {
  if (order == 0) throw ArgumentError("enumeration order must be >= 1");
  if (order > kMaxEnumerationOrder) {
    throw CapacityError("enumeration supports order <= " +
                        std::to_string(kMaxEnumerationOrder));
  }
  if (order > kDefaultEnumerationCeiling && !options.allow_beyond_ceiling) {
    throw CapacityError("order " + std::to_string(order) +
                        " is above the default ceiling " +
                        std::to_string(kDefaultEnumerationCeiling) +
                        "; opt in to go further");
  }

  const auto start = Clock::now();
  EnumerationSummary summary;
  summary.order = order;
  summary.gamma = options.gamma;

  const auto profiles = ProfileCollector(order, options.gamma).Collect();
  summary.stats.degree_profiles = profiles.size();

  SharedState shared;
  if (options.budget) shared.deadline = start + *options.budget;

  auto worker = [&]() {
    while (!shared.out_of_time) {
      const std::size_t i = shared.next_profile.fetch_add(1);
      if (i >= profiles.size()) return;
      ProfileSearch(order, profiles[i], shared).Run();
    }
  };
  const unsigned workers = std::max(1U, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  summary.complete = !shared.out_of_time;
  summary.representatives.assign(shared.seen.begin(), shared.seen.end());
  std::sort(summary.representatives.begin(), summary.representatives.end());
  summary.count = summary.representatives.size();
  summary.stats.nodes = shared.nodes.load();
  summary.stats.leaves = shared.leaves.load();
  summary.stats.duplicates = shared.duplicates.load();
  summary.elapsed = Clock::now() - start;
  return summary;
}

std::vector<CanonicalForm> EnumerateConnected(std::size_t order) {
  if (order == 0) throw ArgumentError("enumeration order must be >= 1");
  if (order > kConnectedEnumerationMaxOrder) {
    throw CapacityError("connected-graph enumeration supports order <= " +
                        std::to_string(kConnectedEnumerationMaxOrder));
  }
  static std::mutex mu;
  static std::map<std::size_t, std::vector<CanonicalForm>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(order); it != cache.end()) return it->second;

  // Every connected graph has a non-cut vertex, so each one arises from a
  // connected graph one order smaller plus a vertex joined to a non-empty
  // subset.
  std::vector<CanonicalForm> level{Canonicalize(Graph(1))};
  for (std::size_t n = 2; n <= order; ++n) {
    if (auto it = cache.find(n); it != cache.end()) {
      level = it->second;
      continue;
    }
    std::map<std::string, CanonicalForm> next;
    for (const CanonicalForm& base : level) {
      const std::size_t subsets = std::size_t{1} << (n - 1);
      for (std::size_t s = 1; s < subsets; ++s) {
        std::vector<Edge> edges = base.edges;
        for (std::size_t i = 0; i + 1 < n; ++i) {
          if (s & (std::size_t{1} << i)) {
            edges.emplace_back(static_cast<Vertex>(i),
                               static_cast<Vertex>(n - 1));
          }
        }
        CanonicalForm form = Canonicalize(Graph(n, edges));
        next.emplace(form.key, std::move(form));
      }
    }
    level.clear();
    for (auto& [key, form] : next) level.push_back(std::move(form));
    cache[n] = level;
  }
  cache[order] = level;
  return level;
}

std::vector<Graph> SiCorpus(std::size_t max_order) {
  std::vector<Graph> out;
  EnumerationOptions options;
  options.allow_beyond_ceiling = true;
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (const auto& g6 : EnumerateSi(n, options).representatives) {
      out.push_back(FromGraph6(g6));
    }
  }
  return out;
}

}  // namespace sigraph
