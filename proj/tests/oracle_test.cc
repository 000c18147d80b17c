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


#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pap/oracle.hpp"

namespace pap {
namespace {

TEST(ExactPap, MatchesSubsetEnumeration) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto g = testing::RandomInstance(seed, 5, 4, 0.25);
    if (g.num_links() > 22) continue;
    auto s = ExactPap(g);
    EXPECT_TRUE(VerifySolution(g, s));
    auto brute = testing::BruteForceOpt(g, 8);
    ASSERT_TRUE(brute.has_value()) << "seed " << seed;
    EXPECT_EQ(static_cast<int>(s.size()), *brute) << "seed " << seed;
  }
}

TEST(ExactPap, LexicographicallySmallestOptimum) {
  PapInstance g(4, {{0, 1}, {2, 3}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_EQ(ExactPap(g), (LinkSet{0, 3}));
}

TEST(ExactPap, InfeasibleAndBudget) {
  PapInstance lone(4, {{0, 1}, {2, 3}}, {{0, 2}});
  EXPECT_THROW(ExactPap(lone), Infeasible);
  PapInstance g(6, {{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {2, 5}, {0, 5}, {2, 3}});
  SearchBudget tiny;
  tiny.max_opt_cardinality = 1;
  EXPECT_THROW(ExactPap(g, tiny), BudgetExceeded);
}

TEST(MinAugmentation, CapAndLowerBound) {
  Multigraph base;
  base.num_vertices = 4;
  base.AddEdge(0, 1);
  base.AddEdge(2, 3);
  std::vector<std::pair<int, int>> cand = {{0, 2}, {1, 3}, {0, 3}};
  auto r = MinAugmentation(base, cand, 1, {});
  EXPECT_EQ(r.status, SearchStatus::kAboveCap);
  EXPECT_EQ(r.lower_bound, 2);
  auto ok = MinAugmentation(base, cand, 5, {});
  EXPECT_EQ(ok.status, SearchStatus::kOptimal);
  EXPECT_EQ(ok.chosen.size(), 2u);
}

TEST(CompleteToFeasible, AddsCheapestExtension) {
  PapInstance g(4, {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}, {0, 3}});
  int added = -1;
  auto s = CompleteToFeasible(g, {0}, {}, &added);
  EXPECT_EQ(added, 1);
  EXPECT_TRUE(VerifySolution(g, s));
  EXPECT_EQ(PruneRedundant(g, {0, 1, 2}).size(), 2u);
}

TEST(ExactSetPacking, SmallCases) {
  EXPECT_EQ(ExactSetPacking(4, {{0, 1}, {1, 2}, {2, 3}}).size(), 2u);
  EXPECT_EQ(ExactSetPacking(3, {{0, 1}, {1, 2}, {0, 2}}).size(), 1u);
  EXPECT_THROW(ExactSetPacking(2, {{0, 5}}), std::out_of_range);
}

}  // namespace
}  // namespace pap
