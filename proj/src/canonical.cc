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

#include "sigraph/canonical.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

#include "sigraph/errors.h"
#include "sigraph/graph6.h"

namespace sigraph {
namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;
using Code = std::vector<std::uint64_t>;

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : n_(g.order()), adj_(n_, 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= std::uint64_t{1} << e.v;
      adj_[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  std::vector<Vertex> Run() {
    Partition root{Cell(n_)};
    std::iota(root[0].begin(), root[0].end(), Vertex{0});
    std::vector<Vertex> path;
    Search(Refine(std::move(root)), path);
    return best_labeling_;
  }

 private:
  bool Adjacent(Vertex a, Vertex b) const { return (adj_[a] >> b) & 1U; }

  // Splits cells by neighbour counts into every cell until stable. Cell order
  // depends only on the isomorphism type of (graph, partition).
  Partition Refine(Partition p) const {
    std::vector<std::size_t> cell_of(n_);
    while (true) {
      for (std::size_t c = 0; c < p.size(); ++c) {
        for (Vertex v : p[c]) cell_of[v] = c;
      }
      Partition next;
      next.reserve(n_);
      for (const Cell& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint32_t>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<std::uint32_t> sig(p.size(), 0);
          std::uint64_t row = adj_[v];
          while (row) {
            const int w = __builtin_ctzll(row);
            row &= row - 1;
            ++sig[cell_of[w]];
          }
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        Cell current{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(current));
            current.clear();
          }
          current.push_back(keyed[i].second);
        }
        next.push_back(std::move(current));
      }
      if (next.size() == p.size()) return next;
      p = std::move(next);
    }
  }

  Code Encode(const std::vector<Vertex>& order) const {
    const std::size_t bits = n_ * (n_ - 1) / 2;
    Code code((bits + 63) / 64, 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i, ++k) {
        if (Adjacent(order[i], order[j])) {
          code[k / 64] |= std::uint64_t{1} << (63 - k % 64);
        }
      }
    }
    return code;
  }

  void RecordAutomorphism(const std::vector<Vertex>& leaf_labeling,
                          const std::vector<Vertex>& reference_order) {
    std::vector<Vertex> sigma(n_);
    for (Vertex v = 0; v < n_; ++v) {
      sigma[v] = reference_order[leaf_labeling[v]];
    }
    automorphisms_.push_back(std::move(sigma));
  }

  void Leaf(const Partition& p) {
    std::vector<Vertex> order(n_);
    std::vector<Vertex> labeling(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      order[i] = p[i][0];
      labeling[p[i][0]] = static_cast<Vertex>(i);
    }
    Code code = Encode(order);
    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = code;
      first_order_ = best_order_ = order;
      best_labeling_ = labeling;
      return;
    }
    if (code == first_code_) {
      RecordAutomorphism(labeling, first_order_);
    } else if (code == best_code_) {
      RecordAutomorphism(labeling, best_order_);
    } else if (code < best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
      best_labeling_ = std::move(labeling);
    }
  }

  // True when some automorphism fixing `path` pointwise maps a vertex of
  // `tried` onto w.
  bool SameOrbitAsTried(const std::vector<Vertex>& path,
                        const std::vector<Vertex>& tried, Vertex w) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&parent](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& sigma : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(),
                               [&sigma](Vertex x) { return sigma[x] == x; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        Vertex a = find(v);
        Vertex b = find(sigma[v]);
        if (a != b) parent[a] = b;
      }
    }
    const Vertex root = find(w);
    return std::any_of(tried.begin(), tried.end(),
                       [&](Vertex t) { return find(t) == root; });
  }

  void Search(const Partition& p, std::vector<Vertex>& path) {
    auto target = std::find_if(p.begin(), p.end(),
                               [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      Leaf(p);
      return;
    }
    const std::size_t index = static_cast<std::size_t>(target - p.begin());
    const Cell cell = *target;
    std::vector<Vertex> tried;
    for (Vertex w : cell) {
      if (SameOrbitAsTried(path, tried, w)) continue;
      tried.push_back(w);
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (c != index) {
          child.push_back(p[c]);
          continue;
        }
        child.push_back(Cell{w});
        Cell rest;
        for (Vertex x : cell) {
          if (x != w) rest.push_back(x);
        }
        child.push_back(std::move(rest));
      }
      path.push_back(w);
      Search(Refine(std::move(child)), path);
      path.pop_back();
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  bool have_first_ = false;
  Code first_code_;
  Code best_code_;
  std::vector<Vertex> first_order_;
  std::vector<Vertex> best_order_;
  std::vector<Vertex> best_labeling_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonicalLabeling CanonicalLabel(const Graph& g, std::size_t max_order) {
  const std::size_t limit = std::min<std::size_t>(max_order, 64);
  if (g.order() > limit) {
    throw CapacityError("canonical form supports order <= " +
                        std::to_string(limit) + ", got " +
                        std::to_string(g.order()));
  }
  CanonicalLabeling out;
  if (g.order() == 0) {
    out.form.key = ToGraph6(g);
    return out;
  }
  out.labeling = Canonicalizer(g).Run();
  Graph canonical = Relabel(g, out.labeling);
  out.form.order = g.order();
  out.form.edges.assign(canonical.edges().begin(), canonical.edges().end());
  out.form.key = ToGraph6(canonical);
  return out;
}

CanonicalForm Canonicalize(const Graph& g, std::size_t max_order) {
  return CanonicalLabel(g, max_order).form;
}

Graph ToGraph(const CanonicalForm& form) {
  return Graph(form.order, form.edges);
}

bool AreIsomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return Canonicalize(a) == Canonicalize(b);
}

}  // namespace sigraph
