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
#include <functional>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pap/credits.hpp"
#include "pap/oracle.hpp"
#include "pap/reduce.hpp"

namespace pap {
namespace {

using testing::ForbiddenStructures;

bool TraceHas(const TraceNode& node, const std::string& needle) {
  if (node.step.find(needle) != std::string::npos ||
      node.detail.find(needle) != std::string::npos) {
    return true;
  }
  for (const auto& c : node.children) {
    if (TraceHas(c, needle)) return true;
  }
  return false;
}

SubSolver ExactLeaf() {
  return [](const PapInstance& sub) { return ExactPap(sub); };
}

TEST(ReductionConfig, Validates) {
  ReductionConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.epsilon = 0.2;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.relaxed = true;
  EXPECT_NO_THROW(c.Validate());
  c.alpha = 0.5;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
}

TEST(ContractInstance, MergesGroupAndRemapsLinks) {
  PapInstance g(6, {{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {2, 5}, {1, 4}});
  std::vector<char> keep(6, 1);
  keep[1] = 0;
  // Dropping the interior vertex 1 splits path 0-1-2; merge its ends instead.
  auto sub = ContractInstance(g, keep, {{0, 2}});
  ASSERT_TRUE(sub.has_value());
  EXPECT_EQ(sub->instance.num_vertices(), 4);
  EXPECT_EQ(sub->instance.num_links(), 2);
  EXPECT_EQ(sub->Lift({0, 1}), (LinkSet{0, 1}));
  EXPECT_EQ(sub->vertex_origin[0], -1);
}

TEST(ContractInstance, RejectsBranchingPaths) {
  PapInstance g(6, {{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {2, 5}});
  std::vector<char> keep(6, 1);
  EXPECT_FALSE(ContractInstance(g, keep, {{1, 4}}).has_value());
}

TEST(EliminateIsolated, DoublesLinksOfSingletons) {
  PapInstance g(4, {{0}, {1, 2, 3}}, {{0, 1}, {0, 3}, {1, 3}});
  auto sub = EliminateIsolated(g);
  EXPECT_EQ(sub.instance.num_vertices(), 5);
  EXPECT_EQ(sub.instance.path(0).size(), 2u);
  EXPECT_EQ(sub.instance.num_links(), 5);
  auto s = ExactPap(sub.instance);
  auto lifted = sub.Lift(s);
  for (int id : lifted) EXPECT_LT(id, g.num_links());
}

TEST(RequiredInside, ClosingLinkIsForced) {
  // Vertices 1 and 2 have no other link than the one joining them.
  PapInstance g(6, {{0, 1}, {2, 3}, {4, 5}}, {{1, 2}, {0, 4}, {3, 5}, {0, 3}});
  EXPECT_EQ(RequiredInside(g, {0, 1, 2, 3}, 4, {}), std::optional<int>(1));
  EXPECT_EQ(RequiredInside(g, {1, 2}, 4, {}), std::optional<int>(1));
}

TEST(Detectors, ContractibleTriple) {
  auto f = ForbiddenStructures();
  ReductionConfig c;
  c.contractible_t = 1;
  auto h = FindContractible(f.instance, c);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->vertices, f.Vertices({"a2", "a3", "a4"}));
  EXPECT_EQ(h->required, 1);
}

TEST(Detectors, PathSeparator) {
  auto f = ForbiddenStructures();
  auto s = FindPathSeparator(f.instance, ReductionConfig{});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->q, f.Vertices({"b1", "b2", "b3", "b4"}));
  EXPECT_TRUE(IsSeparator(f.instance, s->q));
  EXPECT_GE(std::min(s->bound1, s->bound2), 3);
}

// The detector returns the shortest separating sub-path of the joined pair.
TEST(Detectors, TwoPathSeparatorIsShortest) {
  auto f = ForbiddenStructures();
  auto s = FindP2Separator(f.instance, ReductionConfig{});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->q, f.Vertices({"c2", "c3", "d4", "d3", "d2", "d1"}));
  EXPECT_TRUE(IsSeparator(f.instance, s->q));
  auto longer = f.Vertices({"c1", "c2", "c3", "d4", "d3", "d2", "d1"});
  EXPECT_TRUE(IsSeparator(f.instance, longer));
  EXPECT_EQ(s->bound1, 4);
  EXPECT_EQ(s->bound2, 4);
}

TEST(Detectors, CycleSeparator) {
  auto f = ForbiddenStructures();
  auto s = FindC2Separator(f.instance, ReductionConfig{});
  ASSERT_TRUE(s.has_value());
  std::vector<int> q = s->q;
  std::sort(q.begin(), q.end());
  auto expected = f.Vertices({"e1", "e2", "e3", "f1", "f2"});
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(q, expected);
  EXPECT_TRUE(IsSeparator(f.instance, s->q));
}

TEST(Detectors, DegeneratePath) {
  auto f = ForbiddenStructures();
  auto deg = FindDegeneratePaths(f.instance);
  ASSERT_EQ(deg.size(), 1u);
  EXPECT_EQ(f.instance.path(deg[0]), f.Vertices({"j1", "j2", "j3"}));
  auto pairs = SelectDegenerate(f.instance);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].path, deg[0]);
}

TEST(CheckStructure, FlagsTheForbiddenStructures) {
  auto f = ForbiddenStructures();
  auto r = CheckStructure(f.instance, ReductionConfig{});
  EXPECT_FALSE(r.structured());
  for (int k = 1; k <= 6; ++k) EXPECT_FALSE(r.pass[k]) << "property " << k;
}

TEST(Handlers, DegenerateArmsAreFeasible) {
  PapInstance g(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}},
                {{0, 5}, {2, 3}, {3, 5}, {0, 6}, {2, 8}, {6, 8}, {1, 7}});
  auto pairs = SelectDegenerate(g);
  ASSERT_FALSE(pairs.empty());
  auto out = HandleDegenerate(g, pairs, ExactLeaf());
  EXPECT_TRUE(VerifySolution(g, out.links));
  EXPECT_EQ(out.closed_arm, out.closed_size <= out.merged_size);
}

TEST(Reduce, FeasibleWithoutRepairs) {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    auto g = testing::RandomInstance(seed, 8, 5, 0.2, seed % 3 == 0);
    auto r = Reduce(g, ReductionConfig{}, ExactLeaf());
    EXPECT_TRUE(VerifySolution(g, r.links)) << "seed " << seed;
    EXPECT_FALSE(TraceHas(r.trace, "repaired=")) << "seed " << seed << "\n"
                                                 << FormatTrace(r.trace);
  }
}

TEST(Reduce, ExactLeavesOnTheForbiddenInstance) {
  auto f = ForbiddenStructures();
  auto r = Reduce(f.instance, ReductionConfig{}, ExactLeaf());
  EXPECT_TRUE(VerifySolution(f.instance, r.links));
  EXPECT_FALSE(TraceHas(r.trace, "repaired="));
  EXPECT_NE(FormatTrace(r.trace).find('\n'), std::string::npos);
}

TEST(Reduce, RejectsInfeasibleInput) {
  PapInstance g(4, {{0, 1}, {2, 3}}, {{0, 2}});
  EXPECT_THROW(Reduce(g, ReductionConfig{}, ExactLeaf()), Infeasible);
}

}  // namespace
}  // namespace pap
