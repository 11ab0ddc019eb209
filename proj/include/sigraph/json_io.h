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

#ifndef SIGRAPH_JSON_IO_H_
#define SIGRAPH_JSON_IO_H_

#include <span>

#include "json.hpp"
#include "sigraph/constructions.h"
#include "sigraph/enumeration.h"
#include "sigraph/errors.h"
#include "sigraph/graph.h"
#include "sigraph/si_metrics.h"
#include "sigraph/theorem_check.h"
#include "sigraph/transforms.h"

namespace sigraph {

using Json = nlohmann::ordered_json;

// Field names here are the public contract; see README.md.

// {is_si, n, m, gamma, witness, isolated_vertex, components?}
Json SiReportToJson(const Graph& g, const SiReport& report);

// {n, m, irr, m1, m2, pi1, pi2, degree_set, min_degree, max_degree, gamma}.
// pi1 and pi2 are decimal strings.
Json IndicesToJson(const Graph& g, const IndexBundle& indices);

Json AuditToJson(std::span<const StepAudit> audit);

Json BuildToJson(const ConstructionPlan& plan, const ExecutionResult& result);

Json TransformOutcomeToJson(const TransformOutcome& outcome);

Json EnumerationToJson(const EnumerationSummary& summary);

Json TheoremReportToJson(const TheoremReport& report);

// {"error": {"code", "message"}}
Json ErrorToJson(ErrorCode code, std::string_view message);

}  // namespace sigraph

#endif  // SIGRAPH_JSON_IO_H_
