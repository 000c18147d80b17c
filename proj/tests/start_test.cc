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


#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pap/credits.hpp"
#include "pap/oracle.hpp"
#include "pap/start.hpp"

namespace pap {
namespace {

bool Disjoint(const std::vector<std::vector<int>>& sets, const std::vector<int>& chosen) {
  std::set<int> seen;
  for (int s : chosen) {
    for (int x : sets[s]) {
      if (!seen.insert(x).second) return false;
    }
  }
  return true;
}

TEST(PackingHeuristic, ValidAndMonotoneInDepth) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 200; ++round) {
    const int u = 4 + static_cast<int>(rng() % 10);
    std::vector<std::vector<int>> sets(3 + rng() % 12);
    for (auto& s : sets) {
      const int size = 1 + static_cast<int>(rng() % 3);
      std::set<int> pick;
      while (static_cast<int>(pick.size()) < size) pick.insert(static_cast<int>(rng() % u));
      s.assign(pick.begin(), pick.end());
    }
    const auto best = ExactSetPacking(u, sets).size();
    size_t last = 0;
    for (int depth = 1; depth <= 3; ++depth) {
      auto p = PackingHeuristic(u, sets, depth);
      EXPECT_TRUE(Disjoint(sets, p));
      EXPECT_GE(p.size(), last) << "round " << round << " depth " << depth;
      EXPECT_LE(p.size(), best);
      last = p.size();
    }
  }
}

TEST(StartingSolution, ChoosesCheapestValidCandidate) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto g = testing::RandomInstance(seed, 8, 4, 0.2, seed % 2 == 1, 2);
    auto r = StartingSolution(g);
    ASSERT_FALSE(r.candidates.empty());
    for (const auto& c : r.candidates) {
      EXPECT_TRUE(TracksDisjoint(c.tracks)) << c.name;
      EXPECT_TRUE(c.invariants_ok) << "seed " << seed << " " << c.name;
      EXPECT_EQ(c.cost_quarters, c.ledger.cost_quarters());
      EXPECT_LE(r.chosen().cost_quarters, c.cost_quarters);
      EXPECT_EQ(c.stats.alpha1 + c.stats.alpha2, static_cast<int>(c.tracks.size()));
    }
  }
}

TEST(StartingSolution, RejectsSingleVertexPaths) {
  PapInstance g(3, {{0}, {1, 2}}, {{0, 1}, {0, 2}});
  EXPECT_THROW(StartingSolution(g), InvalidInstance);
}

TEST(OverlapWithOptimum, SplitsSizeOneTracks) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = testing::RandomInstance(seed, 6, 4, 0.25, false, 2);
    auto r = StartingSolution(g);
    auto optimum = ExactTpp(r.ecpc, 3);
    for (const auto& c : r.candidates) {
      auto counts = OverlapWithOptimum(c, optimum);
      ASSERT_EQ(counts.size(), 3u);
      EXPECT_EQ(counts[0] + counts[1] + counts[2], c.stats.alpha1);
    }
  }
}

TEST(FapBoundCheck, ForestCandidateWithinBound) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto g = testing::RandomInstance(seed, 6, 4, 0.25, false, 2);
    // The relaxation behind the bound needs a second path; degenerate paths
    // are paid for by epsilon opt, which is below half a credit here.
    if (g.num_paths() < 2 || !FindDegeneratePaths(g).empty()) continue;
    const int opt = static_cast<int>(ExactPap(g).size());
    auto b = FapBoundCheck(g, opt);
    EXPECT_TRUE(b.holds) << "seed " << seed << " cost " << b.cost_quarters / 4.0 << " bound "
                         << b.bound;
    EXPECT_NEAR(b.bound, (7.0 / 4 + 0.001) * opt + (opt - g.num_paths()), 1e-9);
  }
}

}  // namespace
}  // namespace pap
