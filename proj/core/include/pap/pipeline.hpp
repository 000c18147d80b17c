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


#ifndef PAP_PIPELINE_HPP_
#define PAP_PIPELINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pap/bridge.hpp"
#include "pap/glue.hpp"
#include "pap/graph.hpp"
#include "pap/reduce.hpp"
#include "pap/start.hpp"

namespace pap {

struct PipelineOptions {
  bool reduce = true;
  ReductionConfig config;
  StartOptions start;
  // Surface NoProgress and NotStructured instead of completing the solution
  // by search.
  bool strict = false;
};

struct MutationRecord {
  std::string stage;  // start, cover:<handler>, augment
  int cost_quarters = 0;
  int num_links = 0;
  bool invariants_ok = true;
  std::vector<std::string> failures;
};

struct StructuredRun {
  int num_vertices = 0;
  int num_paths = 0;
  std::string start_candidate;
  int start_cost_quarters = 0;
  std::vector<CoverStep> cover_steps;
  std::vector<GlueStep> glue_steps;
  std::vector<MutationRecord> mutations;
  std::string fallback;  // empty unless the solution was completed by search
  int pruned = 0;
  LinkSet links;
};

// Starting solution, bridge covering, gluing, then redundant links dropped.
// Throws Infeasible; with options.strict also NoProgress and NotStructured.
StructuredRun SolveStructured(const PapInstance& instance, const PipelineOptions& options = {});

struct SolveResult {
  LinkSet links;
  std::optional<TraceNode> trace;
  std::vector<StructuredRun> runs;
  int fallbacks = 0;
  double seconds = 0;
};

SolveResult Solve(const PapInstance& instance, const PipelineOptions& options = {});

}  // namespace pap

#endif  // PAP_PIPELINE_HPP_
