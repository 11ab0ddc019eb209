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

#ifndef SIGRAPH_CONSTRUCTIONS_H_
#define SIGRAPH_CONSTRUCTIONS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sigraph/graph.h"

namespace sigraph {

// Vertex-attachment gadgets that grow an SI graph at a single anchor.
//
//   Attach4  anchor of degree 1; two pendant 2-paths.            (+4, +4, +0)
//   Attach5  anchor of degree 1; a 4-cycle through the anchor
//            with a pendant 2-path on the far corner.            (+5, +6, +1)
//   Attach6  anchor of degree 1; a 6-cycle through the anchor
//            plus a chord path through one extra vertex.         (+6, +8, +2)
//   Attach7  anchor of degree 2 whose two neighbours have
//            degree 3; a 4-cycle through the anchor carrying
//            two pendant 2-paths.                                (+7, +8, +1)
//
// The triple is (added vertices, added edges, change in cyclomatic number).
// New vertices are appended after the input vertices in the order listed on
// each Attach function.
enum class GadgetKind { kAttach4, kAttach5, kAttach6, kAttach7 };

struct GadgetSignature {
  std::size_t added_vertices = 0;
  std::size_t added_edges = 0;
  long added_cycles = 0;
};

GadgetSignature SignatureOf(GadgetKind kind);
std::string_view GadgetName(GadgetKind kind);
// "attach4".."attach7"; ArgumentError otherwise.
GadgetKind ParseGadgetKind(std::string_view name);

// Anchor condition alone; does not check that g is SI.
bool IsEligibleAnchor(const Graph& g, Vertex u, GadgetKind kind);
std::vector<Vertex> EligibleAnchors(const Graph& g, GadgetKind kind);
std::optional<Vertex> FirstEligibleAnchor(const Graph& g, GadgetKind kind);

// Each throws PreconditionError when g is not SI or the anchor fails its
// condition; the message names the failed condition.
//
// attach4 appends x1, x2, x3, x4 with u-x1, x1-x3, u-x2, x2-x4.
Graph Attach4(const Graph& g, Vertex u);
// attach5 appends a, b, c, d, e with u-a, u-b, a-c, b-c, c-d, d-e.
Graph Attach5(const Graph& g, Vertex u);
// attach6 appends x1, y1, z, y2, x2, w with u-x1, x1-y1, y1-z, z-y2, y2-x2,
// x2-u, y2-w, w-y1.
Graph Attach6(const Graph& g, Vertex u);
// attach7 appends a, b, c, d, e, f, g2 with u-a, a-b, b-c, a-d, d-e, u-e, e-f,
// f-g2.
Graph Attach7(const Graph& g, Vertex u);

Graph ApplyGadget(const Graph& g, GadgetKind kind, Vertex u);

enum class AnchorRule {
  // Smallest vertex id satisfying the gadget's anchor condition.
  kSmallestEligible,
};

struct PlanStep {
  GadgetKind kind = GadgetKind::kAttach4;
  AnchorRule anchor = AnchorRule::kSmallestEligible;
};

// Which existence result a plan transcribes.
enum class PlanRule {
  kIdentity,
  kPendantSameCycles,      // +4k vertices, same cyclomatic number
  kPendantPlusOne,         // +4k+1, +1
  kPendantPlusTwo,         // +4k+2, +2
  kPendantPlusThree,       // +4k+3, +3 (k >= 2)
  kCubicNeighboursPlusOne, // degree-2 anchor: +4k+3, +1
  kCubicNeighboursSeries,  // degree-2 anchor: +7k, +k
  kExplicitSteps,          // user-supplied gadget list
};

std::string_view PlanRuleName(PlanRule rule);

struct ConstructionPlan {
  Graph seed;
  std::vector<PlanStep> steps;
  std::size_t target_order = 0;
  long target_gamma = 0;
  PlanRule rule = PlanRule::kIdentity;
  // The k of the governing family (0 for identity/explicit plans).
  std::size_t family_k = 0;
};

struct Infeasible {
  std::string reason;
};

using PlanResult = std::variant<ConstructionPlan, Infeasible>;

// Finds a gadget sequence taking `seed` to (target_order, target_gamma) using
// only the compositions covered by the pendant-anchor and degree-2-anchor
// families. Pendant routes are preferred when both apply. Targets outside
// those families are reported Infeasible even if another sequence exists.
PlanResult PlanConstruction(const Graph& seed, std::size_t target_order,
                            long target_gamma);

// Plan for an explicit gadget list; target is the signature sum.
ConstructionPlan PlanFromSteps(const Graph& seed,
                               std::span<const GadgetKind> steps);

struct StepAudit {
  std::size_t index = 0;
  GadgetKind kind = GadgetKind::kAttach4;
  Vertex anchor = 0;
  std::size_t order = 0;
  std::size_t size = 0;
  long gamma = 0;
  bool is_si = false;
};

struct ExecutionResult {
  Graph graph;
  std::vector<StepAudit> audit;
};

// Runs the plan, checking every step's (order, size, gamma, SI) against the
// gadget signature. PreconditionError when no anchor qualifies at some step;
// ContractError when a postcondition fails.
ExecutionResult ExecutePlanWithAudit(const ConstructionPlan& plan);
Graph ExecutePlan(const ConstructionPlan& plan);

}  // namespace sigraph

#endif  // SIGRAPH_CONSTRUCTIONS_H_
