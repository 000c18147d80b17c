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


#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pap/oracle.hpp"
#include "pap/pipeline.hpp"

namespace pap {
namespace {

TEST(Solve, FeasibleWithAndWithoutReduction) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto g = testing::RandomInstance(seed, 10, 5, 0.15, seed % 2 == 0);
    PipelineOptions with;
    auto a = Solve(g, with);
    EXPECT_TRUE(VerifySolution(g, a.links)) << "seed " << seed;
    EXPECT_EQ(a.trace.has_value(), g.num_vertices() > 1);
    PipelineOptions without;
    without.reduce = false;
    auto b = Solve(g, without);
    EXPECT_TRUE(VerifySolution(g, b.links)) << "seed " << seed;
    EXPECT_FALSE(b.trace.has_value());
    EXPECT_EQ(PruneRedundant(g, b.links), b.links);
  }
}

TEST(Solve, TrivialInstances) {
  PapInstance one(1, {{0}}, {});
  EXPECT_TRUE(Solve(one).links.empty());
  PapInstance pair(2, {{0}, {1}}, {{0, 1}}, false);
  EXPECT_THROW(Solve(pair), Infeasible);
}

TEST(Solve, Deterministic) {
  auto g = testing::RandomInstance(42, 12, 5, 0.15, true);
  EXPECT_EQ(Solve(g).links, Solve(g).links);
}

TEST(SolveStructured, StrictSurfacesStalls) {
  int stalls = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    auto g = testing::RandomInstance(seed, 10, 5, 0.15, false, 2);
    PipelineOptions o;
    o.strict = true;
    try {
      auto run = SolveStructured(g, o);
      EXPECT_TRUE(run.fallback.empty());
      EXPECT_TRUE(VerifySolution(g, run.links));
    } catch (const NoProgress& e) {
      ++stalls;
      o.strict = false;
      EXPECT_FALSE(SolveStructured(g, o).fallback.empty());
    } catch (const NotStructured& e) {
      ++stalls;
      o.strict = false;
      EXPECT_FALSE(SolveStructured(g, o).fallback.empty());
    }
  }
  EXPECT_LT(stalls, 120);
}

}  // namespace
}  // namespace pap
