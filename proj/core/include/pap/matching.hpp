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

#ifndef PAP_MATCHING_HPP_
#define PAP_MATCHING_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pap {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 0;
};

// Maximum weight matching in a general graph (primal-dual blossom, O(n^3)).
// With max_cardinality set, returns a maximum weight matching among the
// maximum cardinality ones. Returns mate[v] or -1.
std::vector<int> MaxWeightMatching(int num_vertices,
                                   const std::vector<WeightedEdge>& edges,
                                   bool max_cardinality = false);

struct MatchingProblem {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::int64_t> costs;  // empty means all zero
  std::vector<bool> expensive;      // empty means none

  std::int64_t cost(int e) const { return costs.empty() ? 0 : costs[e]; }
  bool is_expensive(int e) const { return !expensive.empty() && expensive[e]; }
};

// All three return sorted edge indices into problem.edges.
std::vector<int> MaxMatching(const MatchingProblem& problem);

// Cheapest matching with exactly k edges, via dummy vertices joined to every
// original vertex at cost 0 and a minimum cost perfect matching.
std::optional<std::vector<int>> MinCostMatchingExactSize(
    const MatchingProblem& problem, int k);

// Largest matching using at most max_expensive flagged edges.
std::vector<int> MaxMatchingBoundedExpensive(const MatchingProblem& problem,
                                             int max_expensive);

bool IsMatching(const MatchingProblem& problem, const std::vector<int>& edges);
std::int64_t MatchingCost(const MatchingProblem& problem,
                          const std::vector<int>& edges);

}  // namespace pap

#endif  // PAP_MATCHING_HPP_
