// Copyright 2026 The pap Authors
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


#include "pap/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "pap/credits.hpp"
#include "pap/oracle.hpp"

namespace pap {
namespace {

void Record(StructuredRun& run, const WorkingSolution& h, std::string stage,
            std::optional<int> prev) {
  MutationRecord r;
  r.stage = std::move(stage);
  r.cost_quarters = h.cost_quarters();
  r.num_links = static_cast<int>(h.links().size());
  auto report = CheckInvariants(h, prev);
  r.invariants_ok = report.ok();
  r.failures = std::move(report.failures);
  run.mutations.push_back(std::move(r));
}

}  // namespace

StructuredRun SolveStructured(const PapInstance& instance, const PipelineOptions& options) {
  if (!IsTwoEdgeConnected(FullGraph(instance))) {
    throw Infeasible("instance has no feasible solution");
  }
  StructuredRun run;
  run.num_vertices = instance.num_vertices();
  run.num_paths = instance.num_paths();
  auto start = StartingSolution(instance, options.start);
  const Candidate& chosen = start.chosen();
  run.start_candidate = chosen.name;
  WorkingSolution h(instance, chosen.links);
  run.start_cost_quarters = h.cost_quarters();
  Record(run, h, "start", std::nullopt);
  LinkSet links;
  try {
    while (h.num_bridges() > 0) {
      const int prev = h.cost_quarters();
      run.cover_steps.push_back(CoverOnce(h));
      Record(run, h, "cover:" + run.cover_steps.back().handler, prev);
    }
    while (h.num_components() > 1) {
      const ComponentGraph graph = BuildComponentGraph(h);
      auto cycle = FindGoodCycle(h, graph);
      if (!cycle) {
        throw NotStructured("no good cycle among " + std::to_string(h.num_components()) +
                                " components",
                            h.links());
      }
      const int prev = h.cost_quarters();
      run.glue_steps.push_back(Augment(h, graph, *cycle));
      Record(run, h, "augment", prev);
    }
    links = h.links();
  } catch (const NoProgress& e) {
    if (options.strict) throw;
    run.fallback = std::string("NoProgress: ") + e.what();
    links = CompleteToFeasible(instance, h.links(), options.config.budget);
  } catch (const NotStructured& e) {
    if (options.strict) throw;
    run.fallback = std::string("NotStructured: ") + e.what();
    links = CompleteToFeasible(instance, h.links(), options.config.budget);
  }
  const auto before = links.size();
  links = PruneRedundant(instance, std::move(links));
  run.pruned = static_cast<int>(before - links.size());
  run.links = std::move(links);
  return run;
}

SolveResult Solve(const PapInstance& instance, const PipelineOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveResult result;
  if (instance.num_vertices() <= 1) {
    // A single vertex is already 2-edge-connected.
  } else if (options.reduce) {
    auto leaf = [&](const PapInstance& sub) {
      result.runs.push_back(SolveStructured(sub, options));
      return result.runs.back().links;
    };
    auto reduced = Reduce(instance, options.config, leaf);
    result.links = std::move(reduced.links);
    result.trace = std::move(reduced.trace);
  } else if (std::any_of(instance.paths().begin(), instance.paths().end(),
                         [](const auto& p) { return p.size() == 1; })) {
    auto sub = EliminateIsolated(instance);
    result.runs.push_back(SolveStructured(sub.instance, options));
    LinkSet lifted = sub.Lift(result.runs.back().links);
    if (!VerifySolution(instance, lifted)) {
      lifted = CompleteToFeasible(instance, std::move(lifted), options.config.budget);
    }
    result.links = PruneRedundant(instance, std::move(lifted));
  } else {
    result.runs.push_back(SolveStructured(instance, options));
    result.links = result.runs.back().links;
  }
  for (const auto& run : result.runs) result.fallbacks += run.fallback.empty() ? 0 : 1;
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace pap
