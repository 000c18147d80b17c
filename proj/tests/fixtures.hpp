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


#ifndef PAP_TESTS_FIXTURES_HPP_
#define PAP_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pap/graph.hpp"
#include "pap/matching.hpp"

namespace pap::testing {

// An instance with named vertices.
struct Named {
  PapInstance instance;
  std::map<std::string, int> id;

  int operator[](const std::string& name) const { return id.at(name); }
  std::vector<int> Vertices(std::initializer_list<const char*> names) const;
  int LinkId(const std::string& a, const std::string& b) const;
};

// The non-structured instance with one of each forbidden structure. Not
// strict: a4 a3 is a link parallel to a path edge.
Named ForbiddenStructures();

// Eleven three-vertex paths u_i w_i v_i with the seventeen cover links.
Named ElevenPathCover();

// Track T_k of the packing drawn next to the cover (k = 1..5), as link ids.
std::vector<int> ElevenPathTrack(const Named& cover, int k);

// Small random feasible instance.
PapInstance RandomInstance(std::uint64_t seed, int max_paths, int max_len, double density,
                           bool structured_bias = false, int min_len = 1);

// Optimum by plain subset enumeration, or nullopt above `max_size`.
std::optional<int> BruteForceOpt(const PapInstance& instance, int max_size);

// 2-edge-connectivity by deleting every edge in turn.
bool BruteForceTwoEdgeConnected(const Multigraph& graph);

// Maximum matching size by enumeration of edge subsets.
int BruteForceMatching(int n, const std::vector<std::pair<int, int>>& edges);

// Cheapest matching of every size k = 0..n/2 by enumeration; -1 if none.
std::vector<std::int64_t> CheapestMatchingBySize(const MatchingProblem& problem);

}  // namespace pap::testing

#endif  // PAP_TESTS_FIXTURES_HPP_
