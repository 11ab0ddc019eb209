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

#include "sigraph/constructions.h"

#include <string>

#include "sigraph/errors.h"
#include "sigraph/si_metrics.h"

namespace sigraph {
namespace {

Graph Extend(const Graph& g, std::size_t added,
             std::initializer_list<std::pair<std::size_t, std::size_t>> offs,
             Vertex u) {
  // Offsets: 0 is the anchor, i >= 1 is the i-th appended vertex.
  const std::size_t n = g.order();
  auto id = [&](std::size_t off) {
    return off == 0 ? u : static_cast<Vertex>(n + off - 1);
  };
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const auto& [a, b] : offs) edges.emplace_back(id(a), id(b));
  return Graph(n + added, edges);
}

void RequireAnchor(const Graph& g, Vertex u, GadgetKind kind) {
  if (u >= g.order()) {
    throw ArgumentError("anchor " + std::to_string(u) + " out of range");
  }
  if (!IsSi(g)) {
    throw PreconditionError(std::string(GadgetName(kind)) +
                            ": input graph is not SI");
  }
  const std::size_t d = g.degree(u);
  if (kind != GadgetKind::kAttach7) {
    if (d != 1) {
      throw PreconditionError(std::string(GadgetName(kind)) + ": anchor " +
                              std::to_string(u) + " has degree " +
                              std::to_string(d) + ", needs a pendant vertex");
    }
    return;
  }
  if (d != 2) {
    throw PreconditionError("attach7: anchor " + std::to_string(u) +
                            " has degree " + std::to_string(d) +
                            ", needs degree 2");
  }
  for (Vertex w : g.neighbors(u)) {
    if (g.degree(w) != 3) {
      throw PreconditionError("attach7: neighbour " + std::to_string(w) +
                              " of anchor " + std::to_string(u) +
                              " has degree " + std::to_string(g.degree(w)) +
                              ", needs degree 3");
    }
  }
}

bool HasPendant(const Graph& g) {
  return FirstEligibleAnchor(g, GadgetKind::kAttach4).has_value();
}

}  // namespace

GadgetSignature SignatureOf(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kAttach4:
      return {4, 4, 0};
    case GadgetKind::kAttach5:
      return {5, 6, 1};
    case GadgetKind::kAttach6:
      return {6, 8, 2};
    case GadgetKind::kAttach7:
      return {7, 8, 1};
  }
  return {};
}

std::string_view GadgetName(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kAttach4:
      return "attach4";
    case GadgetKind::kAttach5:
      return "attach5";
    case GadgetKind::kAttach6:
      return "attach6";
    case GadgetKind::kAttach7:
      return "attach7";
  }
  return "?";
}

GadgetKind ParseGadgetKind(std::string_view name) {
  for (GadgetKind k : {GadgetKind::kAttach4, GadgetKind::kAttach5,
                       GadgetKind::kAttach6, GadgetKind::kAttach7}) {
    if (GadgetName(k) == name) return k;
  }
  throw ArgumentError("unknown gadget '" + std::string(name) + "'");
}

bool IsEligibleAnchor(const Graph& g, Vertex u, GadgetKind kind) {
  if (u >= g.order()) return false;
  if (kind != GadgetKind::kAttach7) return g.degree(u) == 1;
  if (g.degree(u) != 2) return false;
  for (Vertex w : g.neighbors(u)) {
    if (g.degree(w) != 3) return false;
  }
  return true;
}

std::vector<Vertex> EligibleAnchors(const Graph& g, GadgetKind kind) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (IsEligibleAnchor(g, v, kind)) out.push_back(v);
  }
  return out;
}

std::optional<Vertex> FirstEligibleAnchor(const Graph& g, GadgetKind kind) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (IsEligibleAnchor(g, v, kind)) return v;
  }
  return std::nullopt;
}

Graph Attach4(const Graph& g, Vertex u) {
  RequireAnchor(g, u, GadgetKind::kAttach4);
  // x1=1, x2=2, x3=3, x4=4
  return Extend(g, 4, {{0, 1}, {1, 3}, {0, 2}, {2, 4}}, u);
}

Graph Attach5(const Graph& g, Vertex u) {
  RequireAnchor(g, u, GadgetKind::kAttach5);
  // a=1, b=2, c=3, d=4, e=5
  return Extend(g, 5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}, u);
}

Graph Attach6(const Graph& g, Vertex u) {
  RequireAnchor(g, u, GadgetKind::kAttach6);
  // x1=1, y1=2, z=3, y2=4, x2=5, w=6
  return Extend(g, 6,
                {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {4, 6},
                 {6, 2}},
                u);
}

Graph Attach7(const Graph& g, Vertex u) {
  RequireAnchor(g, u, GadgetKind::kAttach7);
  // a=1, b=2, c=3, d=4, e=5, f=6, g2=7
  return Extend(g, 7,
                {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {0, 5}, {5, 6},
                 {6, 7}},
                u);
}

Graph ApplyGadget(const Graph& g, GadgetKind kind, Vertex u) {
  switch (kind) {
    case GadgetKind::kAttach4:
      return Attach4(g, u);
    case GadgetKind::kAttach5:
      return Attach5(g, u);
    case GadgetKind::kAttach6:
      return Attach6(g, u);
    case GadgetKind::kAttach7:
      return Attach7(g, u);
  }
  throw ArgumentError("unknown gadget kind");
}

std::string_view PlanRuleName(PlanRule rule) {
  switch (rule) {
    case PlanRule::kIdentity:
      return "identity";
    case PlanRule::kPendantSameCycles:
      return "pendant:+4k,+0";
    case PlanRule::kPendantPlusOne:
      return "pendant:+4k+1,+1";
    case PlanRule::kPendantPlusTwo:
      return "pendant:+4k+2,+2";
    case PlanRule::kPendantPlusThree:
      return "pendant:+4k+3,+3";
    case PlanRule::kCubicNeighboursPlusOne:
      return "degree2:+4k+3,+1";
    case PlanRule::kCubicNeighboursSeries:
      return "degree2:+7k,+k";
    case PlanRule::kExplicitSteps:
      return "explicit";
  }
  return "?";
}

PlanResult PlanConstruction(const Graph& seed, std::size_t target_order,
                            long target_gamma) {
  if (seed.order() == 0 || !IsConnected(seed) || !IsSi(seed)) {
    return Infeasible{"seed must be a connected SI graph"};
  }
  const long n = static_cast<long>(seed.order());
  const long gamma = CyclomaticNumber(seed);
  const long dn = static_cast<long>(target_order) - n;
  const long dg = target_gamma - gamma;

  ConstructionPlan plan;
  plan.seed = seed;
  plan.target_order = target_order;
  plan.target_gamma = target_gamma;
  auto add = [&plan](GadgetKind kind, long times) {
    for (long i = 0; i < times; ++i) plan.steps.push_back({kind});
  };
  using enum GadgetKind;

  if (dn == 0 && dg == 0) {
    plan.rule = PlanRule::kIdentity;
    return plan;
  }
  if (dn < 0 || dg < 0) {
    return Infeasible{"target order and cyclomatic number cannot shrink"};
  }

  if (HasPendant(seed) && dg <= 3 && dn >= 4 && (dn - dg) % 4 == 0) {
    const long k = (dn - dg) / 4;
    plan.family_k = static_cast<std::size_t>(k);
    switch (dg) {
      case 0:
        plan.rule = PlanRule::kPendantSameCycles;
        add(kAttach4, k);
        return plan;
      case 1:
        plan.rule = PlanRule::kPendantPlusOne;
        add(kAttach5, 1);
        add(kAttach4, k - 1);
        return plan;
      case 2:
        plan.rule = PlanRule::kPendantPlusTwo;
        if (k == 1) {
          add(kAttach6, 1);
        } else {
          add(kAttach5, 2);
          add(kAttach4, k - 2);
        }
        return plan;
      case 3:
        if (k < 2) break;
        plan.rule = PlanRule::kPendantPlusThree;
        if (k == 2) {
          add(kAttach5, 1);
          add(kAttach6, 1);
        } else {
          add(kAttach5, 3);
          add(kAttach4, k - 3);
        }
        return plan;
      default:
        break;
    }
  }

  const bool has_degree2_anchor = FirstEligibleAnchor(seed, kAttach7).has_value();
  if (has_degree2_anchor && dg == 1 && dn >= 7 && (dn - 3) % 4 == 0) {
    const long k = (dn - 3) / 4;
    plan.rule = PlanRule::kCubicNeighboursPlusOne;
    plan.family_k = static_cast<std::size_t>(k);
    add(kAttach7, 1);
    add(kAttach4, k - 1);
    return plan;
  }
  if (has_degree2_anchor && dg >= 1 && dn == 7 * dg) {
    plan.rule = PlanRule::kCubicNeighboursSeries;
    plan.family_k = static_cast<std::size_t>(dg);
    add(kAttach7, dg);
    return plan;
  }

  std::string reason = "no covered composition reaches order " +
                       std::to_string(target_order) + ", gamma " +
                       std::to_string(target_gamma) + " from order " +
                       std::to_string(n) + ", gamma " + std::to_string(gamma);
  reason += HasPendant(seed) ? " (seed has a pendant vertex"
                             : " (seed has no pendant vertex";
  reason += has_degree2_anchor
                ? "; has a degree-2 vertex with degree-3 neighbours)"
                : "; no degree-2 vertex with degree-3 neighbours)";
  return Infeasible{std::move(reason)};
}

ConstructionPlan PlanFromSteps(const Graph& seed,
                               std::span<const GadgetKind> steps) {
  if (seed.order() == 0 || !IsConnected(seed)) {
    throw ArgumentError("seed must be a connected graph");
  }
  ConstructionPlan plan;
  plan.seed = seed;
  plan.rule = steps.empty() ? PlanRule::kIdentity : PlanRule::kExplicitSteps;
  plan.target_order = seed.order();
  plan.target_gamma = CyclomaticNumber(seed);
  for (GadgetKind kind : steps) {
    const auto sig = SignatureOf(kind);
    plan.steps.push_back({kind});
    plan.target_order += sig.added_vertices;
    plan.target_gamma += sig.added_cycles;
  }
  return plan;
}

ExecutionResult ExecutePlanWithAudit(const ConstructionPlan& plan) {
  if (!IsSi(plan.seed)) throw PreconditionError("plan seed is not SI");
  ExecutionResult out{plan.seed, {}};
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const PlanStep& step = plan.steps[i];
    const auto anchor = FirstEligibleAnchor(out.graph, step.kind);
    if (!anchor) {
      throw PreconditionError("step " + std::to_string(i + 1) + " (" +
                              std::string(GadgetName(step.kind)) +
                              "): no eligible anchor");
    }
    const std::size_t n0 = out.graph.order();
    const std::size_t m0 = out.graph.size();
    Graph next = ApplyGadget(out.graph, step.kind, *anchor);
    const auto sig = SignatureOf(step.kind);
    StepAudit audit{i + 1,           step.kind,   *anchor, next.order(),
                    next.size(),     0,           IsSi(next)};
    const bool connected = IsConnected(next);
    audit.gamma = connected ? CyclomaticNumber(next) : 0;
    if (!connected || !audit.is_si || next.order() != n0 + sig.added_vertices ||
        next.size() != m0 + sig.added_edges) {
      throw ContractError("step " + std::to_string(i + 1) + " (" +
                          std::string(GadgetName(step.kind)) +
                          ") broke its postcondition");
    }
    out.graph = std::move(next);
    out.audit.push_back(audit);
  }
  if (!IsSi(out.graph) || out.graph.order() != plan.target_order ||
      CyclomaticNumber(out.graph) != plan.target_gamma) {
    throw ContractError("plan result misses its target (order " +
                        std::to_string(plan.target_order) + ", gamma " +
                        std::to_string(plan.target_gamma) + ")");
  }
  return out;
}

Graph ExecutePlan(const ConstructionPlan& plan) {
  return ExecutePlanWithAudit(plan).graph;
}

}  // namespace sigraph
