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

#include "oracles.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace sigraph::oracle {

std::vector<std::size_t> NaiveDegrees(const Graph& g) {
  std::vector<std::size_t> d(g.order(), 0);
  for (const Edge& e : g.edges()) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

bool NaiveIsConnected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t groups = n;
  for (const Edge& e : g.edges()) {
    auto a = find(e.u);
    auto b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --groups;
    }
  }
  return groups == 1;
}

bool NaiveIsSi(const Graph& g) {
  if (g.size() == 0) return false;
  const auto d = NaiveDegrees(g);
  for (std::size_t x : d) {
    if (x == 0) return false;
  }
  for (const Edge& e : g.edges()) {
    const long diff = static_cast<long>(d[e.u]) - static_cast<long>(d[e.v]);
    if (diff != 1 && diff != -1) return false;
  }
  return true;
}

std::string AdjacencyBits(const Graph& g, const std::vector<Vertex>& perm) {
  const std::size_t n = g.order();
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) {
    m[perm[e.u]][perm[e.v]] = 1;
    m[perm[e.v]][perm[e.u]] = 1;
  }
  std::string bits;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) bits.push_back(m[i][j] ? '1' : '0');
  }
  return bits;
}

std::string BruteForceKey(const Graph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::string best = AdjacencyBits(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, AdjacencyBits(g, perm));
  }
  return std::to_string(g.order()) + ":" + best;
}

namespace {

bool Extend(const Graph& a, const Graph& b, const std::vector<std::size_t>& da,
            const std::vector<std::size_t>& db, std::vector<long>& map,
            std::vector<char>& used, std::size_t v) {
  if (v == a.order()) return true;
  for (Vertex w = 0; w < b.order(); ++w) {
    if (used[w] || da[v] != db[w]) continue;
    bool ok = true;
    for (Vertex u = 0; u < v && ok; ++u) {
      ok = a.adjacent(u, static_cast<Vertex>(v)) ==
           b.adjacent(static_cast<Vertex>(map[u]), w);
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (Extend(a, b, da, db, map, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

bool BacktrackIsomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = NaiveDegrees(a);
  auto db = NaiveDegrees(b);
  auto sa = da;
  auto sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<long> map(a.order(), -1);
  std::vector<char> used(b.order(), 0);
  return Extend(a, b, da, db, map, used, 0);
}

void ForEachLabelledGraph(std::size_t n,
                          const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> slots;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (mask >> k & 1) edges.push_back(slots[k]);
    }
    visit(Graph(n, edges));
  }
}

namespace {

// Sorted degree sequence plus, per vertex, its sorted neighbour degrees.
std::vector<std::vector<std::size_t>> Invariant(const Graph& g) {
  const auto d = NaiveDegrees(g);
  std::vector<std::vector<std::size_t>> inv;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<std::size_t> row{d[v]};
    std::vector<std::size_t> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(d[w]);
    std::sort(nd.begin(), nd.end());
    row.insert(row.end(), nd.begin(), nd.end());
    inv.push_back(std::move(row));
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

}  // namespace

std::vector<Graph> BipartiteScanSi(std::size_t n) {
  std::map<std::vector<std::vector<std::size_t>>, std::vector<Graph>> buckets;
  for (std::size_t a = 1; a + a <= n; ++a) {
    const std::size_t b = n - a;
    const std::size_t bits = a * b;
    const std::uint64_t row_mask = (std::uint64_t{1} << b) - 1;
    std::vector<std::uint64_t> rows(a);
    std::vector<int> left(a);
    std::vector<int> right(b);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < a && ok; ++i) {
        rows[i] = (mask >> (i * b)) & row_mask;
        left[i] = __builtin_popcountll(rows[i]);
        ok = left[i] > 0;
      }
      if (!ok) continue;
      for (std::size_t j = 0; j < b && ok; ++j) {
        right[j] = 0;
        for (std::size_t i = 0; i < a; ++i) right[j] += (rows[i] >> j) & 1;
        ok = right[j] > 0;
      }
      for (std::size_t i = 0; i < a && ok; ++i) {
        for (std::size_t j = 0; j < b && ok; ++j) {
          if ((rows[i] >> j) & 1) {
            const int diff = left[i] - right[j];
            ok = diff == 1 || diff == -1;
          }
        }
      }
      if (!ok) continue;
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
          if ((rows[i] >> j) & 1) {
            edges.emplace_back(static_cast<Vertex>(i),
                               static_cast<Vertex>(a + j));
          }
        }
      }
      Graph g(n, edges);
      if (!NaiveIsConnected(g)) continue;
      auto& bucket = buckets[Invariant(g)];
      const bool seen = std::any_of(
          bucket.begin(), bucket.end(),
          [&g](const Graph& r) { return BacktrackIsomorphic(g, r); });
      if (!seen) bucket.push_back(std::move(g));
    }
  }
  std::vector<Graph> out;
  for (auto& [inv, graphs] : buckets) {
    for (auto& g : graphs) out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::string> LabelledScanSiKeys(std::size_t n) {
  std::set<std::string> keys;
  ForEachLabelledGraph(n, [&keys](const Graph& g) {
    if (NaiveIsSi(g) && NaiveIsConnected(g)) keys.insert(BruteForceKey(g));
  });
  return {keys.begin(), keys.end()};
}

}  // namespace sigraph::oracle
