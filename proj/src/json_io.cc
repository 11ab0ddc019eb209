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

#include "sigraph/json_io.h"

#include <string>

#include "sigraph/graph6.h"

namespace sigraph {
namespace {

Json OptionalGamma(const Graph& g) {
  if (g.order() == 0 || !IsConnected(g)) return nullptr;
  return CyclomaticNumber(g);
}

Json CountsToJson(const std::map<std::size_t, std::size_t>& counts) {
  Json out = Json::object();
  for (const auto& [n, c] : counts) out[std::to_string(n)] = c;
  return out;
}

}  // namespace

Json SiReportToJson(const Graph& g, const SiReport& report) {
  Json out;
  out["is_si"] = report.is_si;
  out["n"] = g.order();
  out["m"] = g.size();
  out["gamma"] = OptionalGamma(g);
  out["witness"] = report.witness
                       ? Json::array({report.witness->u, report.witness->v})
                       : Json(nullptr);
  out["isolated_vertex"] =
      report.isolated_vertex ? Json(*report.isolated_vertex) : Json(nullptr);
  if (!report.components.empty()) {
    Json comps = Json::array();
    for (const auto& c : report.components) {
      comps.push_back({{"vertices", c.vertices}, {"is_si", c.is_si}});
    }
    out["components"] = std::move(comps);
  }
  return out;
}

Json IndicesToJson(const Graph& g, const IndexBundle& indices) {
  Json out;
  out["n"] = g.order();
  out["m"] = g.size();
  out["irr"] = indices.irr;
  out["m1"] = indices.m1;
  out["m2"] = indices.m2;
  out["pi1"] = indices.pi1.str();
  out["pi2"] = indices.pi2.str();
  out["degree_set"] = indices.degree_set;
  out["min_degree"] = indices.min_degree;
  out["max_degree"] = indices.max_degree;
  out["gamma"] =
      indices.cyclomatic ? Json(*indices.cyclomatic) : Json(nullptr);
  return out;
}

Json AuditToJson(std::span<const StepAudit> audit) {
  Json out = Json::array();
  for (const auto& a : audit) {
    out.push_back({{"step", a.index},
                   {"gadget", GadgetName(a.kind)},
                   {"anchor", a.anchor},
                   {"n", a.order},
                   {"m", a.size},
                   {"gamma", a.gamma},
                   {"is_si", a.is_si}});
  }
  return out;
}

Json BuildToJson(const ConstructionPlan& plan, const ExecutionResult& result) {
  Json out;
  out["seed"] = ToGraph6(plan.seed);
  out["rule"] = PlanRuleName(plan.rule);
  out["k"] = plan.family_k;
  out["target"] = {{"n", plan.target_order}, {"gamma", plan.target_gamma}};
  out["audit"] = AuditToJson(result.audit);
  out["graph6"] = ToGraph6(result.graph);
  out["is_si"] = IsSi(result.graph);
  return out;
}

Json TransformOutcomeToJson(const TransformOutcome& outcome) {
  Json out;
  out["op"] = TransformOpName(outcome.op);
  out["result"] = ToGraph6(outcome.result);
  out["n"] = outcome.result.order();
  out["m"] = outcome.result.size();
  out["si_before"] = outcome.si_before;
  out["si_after"] = outcome.si_after;
  out["theorem_tag"] = outcome.theorem_tag;
  out["contract_holds"] = outcome.contract_holds
                              ? Json(*outcome.contract_holds)
                              : Json(nullptr);
  if (!outcome.vertex_map.empty()) {
    Json map = Json::array();
    for (const auto& v : outcome.vertex_map) {
      map.push_back(v ? Json(*v) : Json(nullptr));
    }
    out["vertex_map"] = std::move(map);
  }
  return out;
}

Json EnumerationToJson(const EnumerationSummary& summary) {
  Json out;
  out["order"] = summary.order;
  out["gamma"] = summary.gamma ? Json(*summary.gamma) : Json(nullptr);
  out["count"] = summary.count;
  out["complete"] = summary.complete;
  out["elapsed_seconds"] = summary.elapsed.count();
  out["stats"] = {{"degree_profiles", summary.stats.degree_profiles},
                  {"nodes", summary.stats.nodes},
                  {"leaves", summary.stats.leaves},
                  {"duplicates", summary.stats.duplicates}};
  out["representatives"] = summary.representatives;
  return out;
}

Json TheoremReportToJson(const TheoremReport& report) {
  Json out;
  out["max_order"] = report.max_order;
  out["all_pass"] = report.AllPass();
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"id", r.id},
                    {"anchor", r.anchor},
                    {"status", TheoremStatusName(r.status)},
                    {"checked", r.checked},
                    {"violations", r.violations},
                    {"counterexamples", r.counterexamples}});
  }
  out["theorems"] = std::move(rows);
  out["si_counts"] = CountsToJson(report.si_counts);
  out["bicyclic_counts"] = CountsToJson(report.bicyclic_counts);
  out["tricyclic_counts"] = CountsToJson(report.tricyclic_counts);
  return out;
}

Json ErrorToJson(ErrorCode code, std::string_view message) {
  return {{"error", {{"code", ErrorCodeName(code)}, {"message", message}}}};
}

}  // namespace sigraph
