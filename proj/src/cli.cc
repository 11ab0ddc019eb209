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

#include "sigraph/cli.h"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sigraph/constructions.h"
#include "sigraph/dot.h"
#include "sigraph/enumeration.h"
#include "sigraph/errors.h"
#include "sigraph/graph6.h"
#include "sigraph/json_io.h"
#include "sigraph/seeds.h"
#include "sigraph/si_metrics.h"
#include "sigraph/theorem_check.h"
#include "sigraph/transforms.h"

namespace sigraph::cli {
namespace {

struct GraphSource {
  std::string seed;
  std::string graph6;
  std::string input;
};

void AddGraphOptions(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--seed", src.seed,
                  "Catalog name (p3, k2, k13, kmm1:<m>, fig1-order5, "
                  "fig1-order9) or a graph6 file");
  cmd->add_option("--graph6", src.graph6, "Inline graph6 string");
  cmd->add_option("--input", src.input, "File holding one graph6 line");
}

std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot read " + path);
  return {std::istreambuf_iterator<char>(f), {}};
}

Graph SingleGraph(std::string_view text, std::string_view where) {
  auto graphs = ReadGraph6Lines(text);
  if (graphs.size() != 1) {
    throw Graph6Error(std::string(where) + ": expected exactly one graph6 "
                      "line, found " + std::to_string(graphs.size()));
  }
  return std::move(graphs.front());
}

Graph ResolveSeed(const std::string& name) {
  try {
    return SeedByName(name);
  } catch (const UnknownSeedError&) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(name, ec)) {
      return SingleGraph(ReadFile(name), name);
    }
    throw;
  }
}

Graph LoadGraph(const GraphSource& src, std::istream& in) {
  const int given = !src.seed.empty() + !src.graph6.empty() +
                    !src.input.empty();
  if (given > 1) {
    throw ArgumentError("give at most one of --seed, --graph6, --input");
  }
  if (!src.seed.empty()) return ResolveSeed(src.seed);
  if (!src.graph6.empty()) return FromGraph6(src.graph6);
  if (!src.input.empty()) return SingleGraph(ReadFile(src.input), src.input);
  std::string text{std::istreambuf_iterator<char>(in), {}};
  return SingleGraph(text, "stdin");
}

Graph LoadOther(const std::string& spec) {
  try {
    return ResolveSeed(spec);
  } catch (const UnknownSeedError&) {
    return FromGraph6(spec);
  }
}

void EmitGraph(std::ostream& out, const std::string& emit, const Graph& g,
               const Json& json) {
  if (emit == "graph6") {
    out << ToGraph6(g) << "\n";
  } else if (emit == "dot") {
    out << ToDot(g);
  } else {
    out << json.dump(2) << "\n";
  }
}

std::optional<std::chrono::milliseconds> BudgetFrom(double seconds) {
  if (seconds <= 0) return std::nullopt;
  return std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
}

std::vector<GadgetKind> ParseSteps(const std::string& list) {
  std::vector<GadgetKind> steps;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) steps.push_back(ParseGadgetKind(item));
  }
  if (steps.empty()) throw ArgumentError("--steps is empty");
  return steps;
}

Edge ParseEdge(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ArgumentError("--edge expects u,v");
  }
  try {
    std::size_t pos_u = 0;
    std::size_t pos_v = 0;
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    const unsigned long u = std::stoul(a, &pos_u);
    const unsigned long v = std::stoul(b, &pos_v);
    if (pos_u != a.size() || pos_v != b.size()) throw std::invalid_argument("");
    return Edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  } catch (const std::logic_error&) {
    throw ArgumentError("--edge expects u,v with non-negative integers");
  }
}

class Dispatcher {
 public:
  Dispatcher(std::istream& in, std::ostream& out) : in_(in), out_(out) {
    if (const char* env = std::getenv(kBudgetEnvVar)) {
      try {
        budget_secs_ = std::stod(env);
      } catch (const std::logic_error&) {
        throw ArgumentError(std::string(kBudgetEnvVar) + " is not a number");
      }
    }
    app_.require_subcommand(1);
    app_.set_help_all_flag("--help-all");

    check_ = app_.add_subcommand("check", "Test whether a graph is SI");
    AddGraphOptions(check_, src_);
    AddEmit(check_);

    indices_ = app_.add_subcommand("indices", "Degree-based indices");
    AddGraphOptions(indices_, src_);
    AddEmit(indices_);

    build_ = app_.add_subcommand("build", "Grow a seed with gadgets");
    build_->add_option("--seed", src_.seed, "Seed name or graph6 file")
        ->required();
    auto* steps = build_->add_option("--steps", steps_,
                                     "Comma list of attach4..attach7");
    auto* order = build_->add_option("--order", order_, "Target order");
    auto* gamma = build_->add_option("--gamma", gamma_, "Target gamma");
    steps->excludes(order)->excludes(gamma);
    order->needs(gamma);
    gamma->needs(order);
    AddEmit(build_);

    transform_ = app_.add_subcommand("transform", "Apply a graph transform");
    AddGraphOptions(transform_, src_);
    transform_->add_option("--op", op_, "edge-del, vertex-del, complement, "
                           "subdivision, line, total, union, join")
        ->required();
    transform_->add_option("--edge", edge_, "u,v for edge-del");
    transform_->add_option("--vertex", vertex_, "Vertex for vertex-del");
    transform_->add_option("--with", with_,
                           "Second graph (seed name or graph6) for union and "
                           "join");
    AddEmit(transform_);

    enumerate_ = app_.add_subcommand("enumerate", "List connected SI graphs");
    enumerate_->add_option("--order", order_, "Order")->required();
    enumerate_->add_option("--gamma", gamma_, "Cyclomatic number filter");
    enumerate_->add_option("--budget", budget_secs_,
                           "Time limit in seconds (0 = none)");
    enumerate_->add_option("--workers", workers_, "Worker threads")
        ->check(CLI::Range(1u, 256u));
    enumerate_->add_flag("--allow-large", allow_large_,
                         "Permit orders above the default ceiling");
    AddEmit(enumerate_);

    verify_ = app_.add_subcommand("verify-theorems",
                                  "Check every structural claim exhaustively");
    verify_->add_option("--max-order", max_order_, "Largest order")
        ->required();
    verify_->add_option("--report", report_path_, "Write the JSON report here");
    verify_->add_option("--workers", workers_, "Worker threads")
        ->check(CLI::Range(1u, 256u));
  }

  CLI::App& app() { return app_; }

  int Dispatch() {
    if (check_->parsed()) return Check();
    if (indices_->parsed()) return Indices();
    if (build_->parsed()) return Build();
    if (transform_->parsed()) return Transform();
    if (enumerate_->parsed()) return Enumerate();
    return Verify();
  }

 private:
  void AddEmit(CLI::App* cmd) {
    cmd->add_option("--emit", emit_, "Output format")
        ->check(CLI::IsMember({"json", "graph6", "dot"}));
  }

  int Check() {
    const Graph g = LoadGraph(src_, in_);
    EmitGraph(out_, emit_, g, SiReportToJson(g, CheckSi(g)));
    return kExitOk;
  }

  int Indices() {
    const Graph g = LoadGraph(src_, in_);
    EmitGraph(out_, emit_, g, IndicesToJson(g, ComputeIndices(g)));
    return kExitOk;
  }

  int Build() {
    const Graph seed = ResolveSeed(src_.seed);
    ConstructionPlan plan;
    if (!steps_.empty()) {
      const auto kinds = ParseSteps(steps_);
      plan = PlanFromSteps(seed, kinds);
    } else if (order_ && gamma_) {
      if (*order_ < 0) throw ArgumentError("--order must be non-negative");
      auto result = PlanConstruction(seed, static_cast<std::size_t>(*order_),
                                     *gamma_);
      if (const auto* no = std::get_if<Infeasible>(&result)) {
        throw Error(ErrorCode::kInfeasible, no->reason);
      }
      plan = std::get<ConstructionPlan>(std::move(result));
    } else {
      throw ArgumentError("build needs --steps or --order with --gamma");
    }
    const ExecutionResult result = ExecutePlanWithAudit(plan);
    EmitGraph(out_, emit_, result.graph, BuildToJson(plan, result));
    return kExitOk;
  }

  int Transform() {
    const Graph g = LoadGraph(src_, in_);
    const TransformOp op = ParseTransformOp(op_);
    TransformArgs args;
    if (!edge_.empty()) args.edge = ParseEdge(edge_);
    if (vertex_) {
      if (*vertex_ < 0) throw ArgumentError("--vertex must be non-negative");
      args.vertex = static_cast<Vertex>(*vertex_);
    }
    if (!with_.empty()) args.other = LoadOther(with_);
    const TransformOutcome outcome = ApplyTransform(op, g, args);
    EmitGraph(out_, emit_, outcome.result, TransformOutcomeToJson(outcome));
    return kExitOk;
  }

  int Enumerate() {
    if (*order_ < 0) throw ArgumentError("--order must be non-negative");
    EnumerationOptions options;
    options.gamma = gamma_;
    options.budget = BudgetFrom(budget_secs_);
    options.workers = workers_;
    options.allow_beyond_ceiling = allow_large_;
    const auto summary =
        EnumerateSi(static_cast<std::size_t>(*order_), options);
    if (emit_ == "graph6") {
      for (const auto& g6 : summary.representatives) out_ << g6 << "\n";
    } else if (emit_ == "dot") {
      std::size_t i = 0;
      for (const auto& g6 : summary.representatives) {
        out_ << ToDot(FromGraph6(g6), "G" + std::to_string(i++));
      }
    } else {
      out_ << EnumerationToJson(summary).dump(2) << "\n";
    }
    return summary.complete ? kExitOk : kExitPartial;
  }

  int Verify() {
    if (max_order_ < 1) throw ArgumentError("--max-order must be >= 1");
    const TheoremReport report =
        VerifyTheorems(static_cast<std::size_t>(max_order_), workers_);
    const Json json = TheoremReportToJson(report);
    if (!report_path_.empty()) {
      std::ofstream f(report_path_);
      if (!f) throw Error(ErrorCode::kIo, "cannot write " + report_path_);
      f << json.dump(2) << "\n";
      Json brief;
      brief["max_order"] = report.max_order;
      brief["all_pass"] = report.AllPass();
      Json failing = Json::array();
      for (const auto& r : report.rows) {
        if (r.status == TheoremStatus::kFail) failing.push_back(r.id);
      }
      brief["failing"] = std::move(failing);
      brief["report"] = report_path_;
      out_ << brief.dump(2) << "\n";
    } else {
      out_ << json.dump(2) << "\n";
    }
    return kExitOk;
  }

  std::istream& in_;
  std::ostream& out_;
  CLI::App app_{"Stepwise irregular graph toolkit", "sigraph"};
  CLI::App* check_ = nullptr;
  CLI::App* indices_ = nullptr;
  CLI::App* build_ = nullptr;
  CLI::App* transform_ = nullptr;
  CLI::App* enumerate_ = nullptr;
  CLI::App* verify_ = nullptr;

  GraphSource src_;
  std::string emit_ = "json";
  std::string steps_;
  std::optional<long> order_;
  std::optional<long> gamma_;
  std::string op_;
  std::string edge_;
  std::optional<long> vertex_;
  std::string with_;
  double budget_secs_ = 0;
  unsigned workers_ = 1;
  bool allow_large_ = false;
  long max_order_ = 0;
  std::string report_path_;
};

void WriteError(std::ostream& err, ErrorCode code, std::string_view message) {
  err << ErrorToJson(code, message).dump() << "\n";
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  try {
    Dispatcher d(in, out);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      d.app().parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << d.app().help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << d.app().help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      WriteError(err, ErrorCode::kArgument, e.what());
      return kExitError;
    }
    return d.Dispatch();
  } catch (const Error& e) {
    WriteError(err, e.code(), e.what());
  } catch (const std::bad_alloc&) {
    WriteError(err, ErrorCode::kCapacity, "out of memory");
  }
  return kExitError;
}

int Run(int argc, char** argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return Run(args, std::cin, std::cout, std::cerr);
}

}  // namespace sigraph::cli
