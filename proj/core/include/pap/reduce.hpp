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


#ifndef PAP_REDUCE_HPP_
#define PAP_REDUCE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pap/graph.hpp"
#include "pap/oracle.hpp"

namespace pap {

struct ReductionConfig {
  double alpha = 1.75;
  double epsilon = 1.0 / 12.0;
  int contractible_t = 4;
  int base_case_threshold = 8;
  // Budget of each exact call made by the detectors and the base case.
  SearchBudget budget{14, 2'000'000, 10.0};
  int max_depth = 256;
  // Accept epsilon above 1/12 (a warning is recorded in the trace).
  bool relaxed = false;

  // Throws std::invalid_argument.
  void Validate() const;
};

// An instance derived from a parent by deleting and contracting vertices.
struct SubInstance {
  PapInstance instance;
  std::vector<int> link_origin;    // per link: parent link id
  std::vector<int> vertex_origin;  // per vertex: parent vertex, -1 if merged

  LinkSet Lift(const LinkSet& links) const;
};

// Keeps the marked vertices and merges every group into one vertex. Returns
// nullopt when the surviving path edges do not form vertex-disjoint paths.
std::optional<SubInstance> ContractInstance(const PapInstance& instance,
                                            const std::vector<char>& keep,
                                            const std::vector<std::vector<int>>& groups);

// Splits every single-vertex path v into a two-vertex path v1 v2 and
// doubles its links.
SubInstance EliminateIsolated(const PapInstance& instance);

struct ContractibleSubgraph {
  std::vector<int> vertices;  // sorted
  LinkSet links;              // the links of the subgraph
  int required = 0;           // inside links every solution must use, at least
};

// Least links inside the vertex set that any feasible solution uses, decided
// up to `cap`; nullopt when the budget runs out first.
std::optional<int> RequiredInside(const PapInstance& instance, const std::vector<int>& vertices,
                                  int cap, const SearchBudget& budget);

std::optional<ContractibleSubgraph> FindContractible(const PapInstance& instance,
                                                     const ReductionConfig& config);

enum class SeparatorKind { kPath, kP2, kC2 };

const char* ToString(SeparatorKind kind);

struct SeparatorReport {
  SeparatorKind kind = SeparatorKind::kPath;
  std::vector<int> q;      // separator vertices in order along the path or cycle
  std::vector<int> paths;  // paths the separator is built from
  LinkSet links;           // defining links
  std::vector<int> side1;  // sorted
  std::vector<int> side2;
  int bound1 = 0;          // opt lower bounds of the contracted sides, capped at 4
  int bound2 = 0;
  bool path_edge_leaves = false;
};

// min(opt((G - other side) | q), cap); nullopt if undecided within budget.
std::optional<int> SideBound(const PapInstance& instance, const std::vector<int>& q,
                             const std::vector<int>& side, int cap,
                             const SearchBudget& budget);

bool IsSeparator(const PapInstance& instance, const std::vector<int>& vertices);

std::optional<SeparatorReport> FindPathSeparator(const PapInstance& instance,
                                                 const ReductionConfig& config);
std::optional<SeparatorReport> FindP2Separator(const PapInstance& instance,
                                               const ReductionConfig& config);
std::optional<SeparatorReport> FindC2Separator(const PapInstance& instance,
                                               const ReductionConfig& config);
// The first of the three kinds, in that order.
std::optional<SeparatorReport> FindSeparator(const PapInstance& instance,
                                             const ReductionConfig& config);

struct DegeneratePair {
  int path = -1;     // the degenerate path
  int partner = -1;
};

// Pairwise disjoint degenerate paths with their partners, greedily by index.
std::vector<DegeneratePair> SelectDegenerate(const PapInstance& instance);

using SubSolver = std::function<LinkSet(const PapInstance&)>;

LinkSet HandleContractible(const PapInstance& instance, const ContractibleSubgraph& h,
                           const SubSolver& recurse);
LinkSet HandleSeparator(const PapInstance& instance, const SeparatorReport& report,
                        const SubSolver& recurse, const SearchBudget& budget);

struct DegenerateOutcome {
  LinkSet links;
  bool closed_arm = false;  // true when the arm closing each path won
  int closed_size = 0;      // |H1| + l
  int merged_size = 0;      // |H2| + 2l
};

DegenerateOutcome HandleDegenerate(const PapInstance& instance,
                                   const std::vector<DegeneratePair>& pairs,
                                   const SubSolver& recurse);

struct StructureReport {
  bool pass[8] = {true, true, true, true, true, true, true, true};
  std::vector<std::string> notes;

  bool structured() const;
};

StructureReport CheckStructure(const PapInstance& instance, const ReductionConfig& config);

struct TraceNode {
  std::string step;  // IsolatedExpand, BaseCaseExact, ContractibleContract, ...
  std::string detail;
  int num_vertices = 0;
  int num_paths = 0;
  int num_links = 0;
  int solution_size = 0;
  std::vector<TraceNode> children;
};

std::string FormatTrace(const TraceNode& node);

struct ReduceResult {
  LinkSet links;
  TraceNode trace;
};

class ReductionError : public std::runtime_error {
 public:
  ReductionError(const std::string& what, TraceNode trace)
      : std::runtime_error(what), trace(std::move(trace)) {}

  TraceNode trace;
};

// Throws Infeasible when G is not 2-edge-connected and ReductionError when
// the depth limit is hit.
ReduceResult Reduce(const PapInstance& instance, const ReductionConfig& config,
                    const SubSolver& structured_solver);

}  // namespace pap

#endif  // PAP_REDUCE_HPP_
