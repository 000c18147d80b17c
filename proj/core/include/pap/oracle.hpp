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


#ifndef PAP_ORACLE_HPP_
#define PAP_ORACLE_HPP_

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pap/graph.hpp"
#include "pap/relax.hpp"

namespace pap {

struct SearchBudget {
  int max_opt_cardinality = 14;
  std::int64_t node_limit = 20'000'000;
  double time_limit_seconds = 60.0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(LinkSet incumbent, int lower_bound)
      : std::runtime_error("search budget exceeded"),
        incumbent(std::move(incumbent)),
        lower_bound(lower_bound) {}

  LinkSet incumbent;  // empty if none was found
  int lower_bound;
};

class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SearchStatus { kOptimal, kAboveCap, kInfeasible, kBudgetExceeded };

struct AugmentationResult {
  SearchStatus status = SearchStatus::kInfeasible;
  std::vector<int> chosen;  // indices into the candidate list
  int lower_bound = 0;
  std::int64_t nodes = 0;
};

// Fewest candidate edges whose addition makes `base` 2-edge-connected,
// searched by iterative deepening up to `cap` additions. With lexicographic
// set, the returned index set is the lexicographically smallest optimum.
AugmentationResult MinAugmentation(const Multigraph& base,
                                   const std::vector<std::pair<int, int>>& candidates,
                                   int cap, const SearchBudget& budget,
                                   bool lexicographic = false);

// Minimum PAP solution, lexicographically smallest among optima. Throws
// Infeasible, or BudgetExceeded above the cardinality cap or node/time limits.
LinkSet ExactPap(const PapInstance& instance, const SearchBudget& budget = {},
                 bool lexicographic = true);

// Minimum 2ECPC solution. Throws Infeasible if some constraint has no link.
// Adds a cheapest set of further links making `links` feasible; when the
// budget runs out, adds everything and drops what is not needed. Throws
// Infeasible.
LinkSet CompleteToFeasible(const PapInstance& instance, LinkSet links,
                           const SearchBudget& budget, int* added = nullptr);

// Drops links, highest id first, while the rest stays feasible.
LinkSet PruneRedundant(const PapInstance& instance, LinkSet links);

LinkSet Exact2Ecpc(const EcpcInstance& instance);

// Maximum number of pairwise disjoint sets (indices, increasing).
std::vector<int> ExactSetPacking(int universe_size,
                                 const std::vector<std::vector<int>>& sets);

// Maximum disjoint track set among tracks with at most max_track_links links.
std::vector<Track> ExactTpp(const EcpcInstance& instance, int max_track_links = 5);

}  // namespace pap

#endif  // PAP_ORACLE_HPP_
