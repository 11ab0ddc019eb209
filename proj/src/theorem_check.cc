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

#include <algorithm>
#include <functional>
#include <set>

#include "sigraph/canonical.h"
#include "sigraph/constructions.h"
#include "sigraph/enumeration.h"
#include "sigraph/errors.h"
#include "sigraph/graph6.h"
#include "sigraph/seeds.h"
#include "sigraph/si_metrics.h"
#include "sigraph/transforms.h"

namespace sigraph {
namespace {

class RowBuilder {
 public:
  RowBuilder(std::string id, std::string anchor) {
    row_.id = std::move(id);
    row_.anchor = std::move(anchor);
  }

  void Check(bool ok, const std::function<std::string()>& describe) {
    ++row_.checked;
    if (ok) return;
    ++row_.violations;
    row_.status = TheoremStatus::kFail;
    if (row_.counterexamples.size() < kMaxCounterexamples) {
      row_.counterexamples.push_back(describe());
    }
  }

  void Check(bool ok, const Graph& g) {
    Check(ok, [&g] { return ToGraph6(g); });
  }

  TheoremRow Take() { return std::move(row_); }

 private:
  TheoremRow row_;
};

bool IsCompleteBipartiteNearBalanced(const Graph& g) {
  const std::size_t n = g.order();
  if (n % 2 == 0) return false;
  return AreIsomorphic(g, CompleteBipartite((n - 1) / 2, (n + 1) / 2));
}

bool DegreesInOneOrThree(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t d = g.degree(v);
    if (d != 1 && d != 3) return false;
  }
  return true;
}

bool ListedSubdivisionException(const Graph& g) {
  const bool k2 = g.order() == 2 && g.size() == 1;
  const bool claw = g.order() == 4 && g.size() == 3 && MaxDegree(g) == 3;
  bool cubic = g.order() > 0;
  for (Vertex v = 0; v < g.order() && cubic; ++v) cubic = g.degree(v) == 3;
  return k2 || claw || cubic;
}

bool IsP4(const Graph& g) {
  return g.order() == 4 && g.size() == 3 && MaxDegree(g) == 2 &&
         IsConnected(g);
}

void ExistenceRows(const TheoremReport& report,
                   std::vector<TheoremRow>& rows) {
  auto check = [](RowBuilder& row, std::size_t n, std::size_t count,
                  bool expect_some) {
    row.Check((count > 0) == expect_some, [=] {
      return "order " + std::to_string(n) + ": expected " +
             (expect_some ? "some" : "none") + ", found " +
             std::to_string(count);
    });
  };

  RowBuilder any("existence-by-order",
                 "connected SI graphs exist for every order except 1, 2, 4 "
                 "and 6");
  for (const auto& [n, count] : report.si_counts) {
    const bool excluded = n == 1 || n == 2 || n == 4 || n == 6;
    check(any, n, count, !excluded);
  }
  rows.push_back(any.Take());

  RowBuilder bicyclic("bicyclic-orders",
                      "bicyclic SI graphs have odd order, and exist for every "
                      "odd order except 1, 3, 7 and 11");
  for (const auto& [n, count] : report.bicyclic_counts) {
    const bool excluded = n % 2 == 0 || n == 1 || n == 3 || n == 7 || n == 11;
    check(bicyclic, n, count, !excluded);
  }
  rows.push_back(bicyclic.Take());

  RowBuilder tricyclic("tricyclic-orders",
                       "tricyclic SI graphs have even order, and exist for "
                       "every even order except 2, 4, 6 and 8");
  for (const auto& [n, count] : report.tricyclic_counts) {
    const bool excluded = n % 2 == 1 || n <= 8;
    check(tricyclic, n, count, !excluded);
  }
  rows.push_back(tricyclic.Take());
}

void MetricRows(const std::vector<Graph>& corpus,
                std::vector<TheoremRow>& rows) {
  RowBuilder even("si-edge-count-even",
                  "every SI graph has an even number of edges");
  RowBuilder bipartite("si-bipartite", "every SI graph is bipartite");
  RowBuilder parity("si-zagreb-parity",
                    "M1, M2, Pi1 and Pi2 of an SI graph are all even");
  RowBuilder irr("si-irregularity-equals-size",
                 "the irregularity of an SI graph equals its edge count");
  RowBuilder contiguous("si-degree-set-contiguous",
                        "a connected SI graph has every degree between its "
                        "minimum and maximum degree");
  RowBuilder bounds("si-edge-count-bounds",
                    "a connected SI graph of order n has n-1 <= m <= "
                    "(n^2-1)/4, the upper bound reached only by "
                    "K_{(n-1)/2,(n+1)/2}");
  for (const Graph& g : corpus) {
    const auto idx = ComputeIndices(g);
    even.Check(g.size() % 2 == 0, g);
    bipartite.Check(IsBipartite(g), g);
    parity.Check(idx.m1 % 2 == 0 && idx.m2 % 2 == 0 && idx.pi1 % 2 == 0 &&
                     idx.pi2 % 2 == 0,
                 g);
    irr.Check(idx.irr == g.size(), g);
    contiguous.Check(DegreeSetIsContiguous(g), g);
    const std::uint64_t n = g.order();
    const std::uint64_t m = g.size();
    const bool at_upper = 4 * m == n * n - 1;
    bounds.Check(n - 1 <= m && 4 * m <= n * n - 1 &&
                     at_upper == IsCompleteBipartiteNearBalanced(g),
                 g);
  }
  for (RowBuilder* r : {&even, &bipartite, &parity, &irr, &contiguous, &bounds}) {
    rows.push_back(r->Take());
  }
}

void GadgetRows(const std::vector<Graph>& corpus,
                std::vector<TheoremRow>& rows) {
  const GadgetKind kinds[] = {GadgetKind::kAttach4, GadgetKind::kAttach5,
                              GadgetKind::kAttach6, GadgetKind::kAttach7};
  RowBuilder closure("gadget-closure",
                     "attach5 output keeps a pendant vertex and attach7 "
                     "output keeps a degree-2 vertex with degree-3 "
                     "neighbours, so both can be iterated");
  for (GadgetKind kind : kinds) {
    const auto sig = SignatureOf(kind);
    RowBuilder row(
        "gadget-" + std::string(GadgetName(kind)),
        std::string(GadgetName(kind)) +
            " at any eligible anchor of an SI graph gives an SI graph with "
            "order +" +
            std::to_string(sig.added_vertices) + " and cyclomatic number +" +
            std::to_string(sig.added_cycles));
    for (const Graph& g : corpus) {
      const long gamma = CyclomaticNumber(g);
      for (Vertex u : EligibleAnchors(g, kind)) {
        const Graph out = ApplyGadget(g, kind, u);
        bool untouched = true;
        for (Vertex v = 0; v < g.order(); ++v) {
          if (v != u && out.degree(v) != g.degree(v)) untouched = false;
        }
        row.Check(IsSi(out) && IsConnected(out) &&
                      out.order() == g.order() + sig.added_vertices &&
                      CyclomaticNumber(out) == gamma + sig.added_cycles &&
                      untouched,
                  g);
        if (kind == GadgetKind::kAttach5) {
          closure.Check(FirstEligibleAnchor(out, GadgetKind::kAttach4)
                            .has_value(),
                        g);
        } else if (kind == GadgetKind::kAttach7) {
          closure.Check(FirstEligibleAnchor(out, GadgetKind::kAttach7)
                            .has_value(),
                        g);
        }
      }
    }
    rows.push_back(row.Take());
  }
  rows.push_back(closure.Take());
}

void TransformRows(const std::vector<Graph>& si_corpus,
                   const std::vector<Graph>& connected,
                   std::vector<TheoremRow>& rows) {
  RowBuilder edge_del("edge-deletion-breaks-si",
                      "deleting any edge of an SI graph leaves a non-SI graph");
  RowBuilder vertex_del("vertex-deletion-breaks-si",
                        "deleting any vertex of an SI graph leaves a non-SI "
                        "graph");
  RowBuilder complement("complement-breaks-si",
                        "the complement of a connected SI graph is not SI");
  RowBuilder subdivision("subdivision-breaks-si",
                         "the subdivision graph of an SI graph is not SI");
  RowBuilder line("line-graph-breaks-si",
                  "the line graph of an SI graph is not SI");
  RowBuilder line_odd("line-graph-odd-degrees",
                      "every vertex of the line graph of an SI graph has odd "
                      "degree");
  RowBuilder total("total-graph-never-si",
                   "the total graph of a graph with an edge is never SI");
  RowBuilder union_row("union-preserves-si",
                       "the disjoint union of SI graphs is SI");

  for (const Graph& g : si_corpus) {
    if (g.size() >= 2) {
      for (const Edge& e : g.edges()) {
        edge_del.Check(!IsSi(DeleteEdge(g, e)), g);
      }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      vertex_del.Check(!IsSi(DeleteVertex(g, v).graph), g);
    }
    complement.Check(!IsSi(Complement(g)), g);
    subdivision.Check(!IsSi(Subdivision(g)), g);
    const Graph lg = LineGraph(g);
    line.Check(!IsSi(lg), g);
    bool all_odd = true;
    for (Vertex v = 0; v < lg.order(); ++v) all_odd &= lg.degree(v) % 2 == 1;
    line_odd.Check(all_odd, g);
    total.Check(!IsSi(TotalGraph(g)), g);
  }
  for (const Graph& g : si_corpus) {
    for (const Graph& h : si_corpus) {
      union_row.Check(IsSi(DisjointUnion(g, h)), [&] {
        return ToGraph6(g) + " + " + ToGraph6(h);
      });
    }
  }

  RowBuilder sub_iff("subdivision-characterization",
                     "among connected graphs, the subdivision graph is SI "
                     "exactly for K2, K_{1,3} and 3-regular graphs");
  RowBuilder sub_rule("subdivision-degree-rule",
                      "among connected graphs with an edge, the subdivision "
                      "graph is SI exactly when every degree is 1 or 3");
  RowBuilder line_iff("line-graph-characterization",
                      "among connected graphs, the line graph is SI exactly "
                      "for P4");
  RowBuilder degree_rules("line-total-degree-rules",
                          "deg_L(uv) = d(u)+d(v)-2; deg_T(v) = 2d(v); "
                          "deg_T(uv) = d(u)+d(v)");
  for (const Graph& g : connected) {
    sub_iff.Check(IsSi(Subdivision(g)) == ListedSubdivisionException(g), g);
    if (g.size() == 0) continue;
    sub_rule.Check(IsSi(Subdivision(g)) == DegreesInOneOrThree(g), g);
    const Graph lg = LineGraph(g);
    line_iff.Check(IsSi(lg) == IsP4(g), g);
    const Graph tg = TotalGraph(g);
    bool ok = true;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::size_t du = g.degree(edges[i].u);
      const std::size_t dv = g.degree(edges[i].v);
      ok &= lg.degree(static_cast<Vertex>(i)) == du + dv - 2;
      ok &= tg.degree(static_cast<Vertex>(g.order() + i)) == du + dv;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      ok &= tg.degree(v) == 2 * g.degree(v);
    }
    degree_rules.Check(ok, g);
  }

  RowBuilder join("join-bipartite-exception",
                  "a join is SI only when both sides are edgeless with "
                  "orders m and m+1");
  std::vector<Graph> sides;
  for (std::size_t k = 1; k <= 5; ++k) sides.push_back(Edgeless(k));
  for (const Graph& g : connected) {
    if (g.order() <= 4 && g.size() > 0) sides.push_back(g);
  }
  for (const Graph& g : sides) {
    for (const Graph& h : sides) {
      const std::size_t a = std::min(g.order(), h.order());
      const std::size_t b = std::max(g.order(), h.order());
      const bool expect = g.size() == 0 && h.size() == 0 && b == a + 1;
      join.Check(IsSi(Join(g, h)) == expect, [&] {
        return ToGraph6(g) + " + " + ToGraph6(h);
      });
    }
  }

  for (RowBuilder* r : {&edge_del, &vertex_del, &complement, &subdivision,
                        &line, &line_odd, &total, &union_row, &sub_iff,
                        &sub_rule, &line_iff, &degree_rules, &join}) {
    rows.push_back(r->Take());
  }
}

}  // namespace

std::string_view TheoremStatusName(TheoremStatus status) {
  return status == TheoremStatus::kPass ? "pass" : "fail";
}

bool TheoremReport::AllPass() const {
  return std::all_of(rows.begin(), rows.end(), [](const TheoremRow& r) {
    return r.status == TheoremStatus::kPass;
  });
}

const TheoremRow* TheoremReport::Find(std::string_view id) const {
  for (const auto& r : rows) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

TheoremReport VerifyTheorems(std::size_t max_order, unsigned workers) {
  if (max_order == 0) throw ArgumentError("max_order must be >= 1");
  if (max_order > kDefaultEnumerationCeiling) {
    throw CapacityError("theorem verification supports max_order <= " +
                        std::to_string(kDefaultEnumerationCeiling));
  }
  TheoremReport report;
  report.max_order = max_order;

  std::vector<Graph> si_corpus;
  for (std::size_t n = 1; n <= max_order; ++n) {
    EnumerationOptions options;
    options.workers = workers;
    const auto all = EnumerateSi(n, options);
    report.si_counts[n] = all.count;
    std::size_t bicyclic = 0;
    std::size_t tricyclic = 0;
    for (const auto& g6 : all.representatives) {
      Graph g = FromGraph6(g6);
      const long gamma = CyclomaticNumber(g);
      bicyclic += gamma == 2;
      tricyclic += gamma == 3;
      si_corpus.push_back(std::move(g));
    }
    report.bicyclic_counts[n] = bicyclic;
    report.tricyclic_counts[n] = tricyclic;
  }

  std::vector<Graph> connected;
  for (std::size_t n = 1; n <= std::min(max_order, kConnectedEnumerationMaxOrder);
       ++n) {
    for (const auto& form : EnumerateConnected(n)) {
      connected.push_back(ToGraph(form));
    }
  }

  ExistenceRows(report, report.rows);
  MetricRows(si_corpus, report.rows);
  GadgetRows(si_corpus, report.rows);
  TransformRows(si_corpus, connected, report.rows);
  return report;
}

}  // namespace sigraph
