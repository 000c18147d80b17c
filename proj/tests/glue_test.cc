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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pap/bridge.hpp"
#include "pap/glue.hpp"
#include "pap/start.hpp"

namespace pap {
namespace {

TEST(FindShortcut, UsesOneLink) {
  PapInstance g(6, {{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {2, 5}, {2, 3}});
  ComponentNode node;
  node.vertices = {0, 1, 2, 3, 4, 5};
  EXPECT_FALSE(FindShortcut(g, node, 0, 5).has_value());
  node.small = true;
  EXPECT_EQ(FindShortcut(g, node, 0, 5), std::optional<int>(2));
  EXPECT_FALSE(FindShortcut(g, node, 1, 4).has_value());
}

TEST(Augment, RejectsCycleThatIsNotGood) {
  PapInstance g(6, {{0, 1, 2}, {3, 4, 5}}, {{0, 2}, {3, 5}, {0, 3}, {2, 5}});
  WorkingSolution h(g, {0, 1});
  auto graph = BuildComponentGraph(h);
  ASSERT_EQ(graph.nodes.size(), 2u);
  GoodCycle bogus;
  bogus.nodes = {0};
  EXPECT_FALSE(IsGood(bogus));
  EXPECT_THROW(Augment(h, graph, bogus), std::invalid_argument);
}

TEST(Glue, CyclesMergeComponentsWithoutRaisingCost) {
  int glued = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto g = testing::RandomInstance(seed, 10, 5, 0.15, seed % 2 == 0, 2);
    WorkingSolution h(g, StartingSolution(g).chosen().links);
    try {
      while (h.num_bridges() > 0) CoverOnce(h);
    } catch (const NoProgress&) {
      continue;
    }
    while (h.num_components() > 1) {
      auto graph = BuildComponentGraph(h);
      for (const auto& n : graph.nodes) {
        EXPECT_TRUE(n.credit_quarters == 6 || n.credit_quarters == 8);
        for (int v : n.vertices) EXPECT_EQ(&graph.nodes[graph.node_of[v]], &n);
      }
      for (const auto& e : graph.edges) {
        const Link& l = g.link(e.link);
        EXPECT_NE(e.a, e.b);
        EXPECT_EQ(std::minmax(e.a, e.b),
                  std::minmax(graph.node_of[l.u], graph.node_of[l.v]));
      }
      auto cycle = FindGoodCycle(h, graph);
      if (!cycle) break;
      EXPECT_TRUE(IsGood(*cycle));
      const int before = h.num_components();
      auto step = Augment(h, graph, *cycle);
      ++glued;
      EXPECT_LT(h.num_components(), before) << "seed " << seed << " " << FormatStep(step);
      EXPECT_LE(step.cost_after, step.cost_before) << "seed " << seed;
      EXPECT_EQ(h.num_bridges(), 0) << "seed " << seed;
      EXPECT_TRUE(CheckInvariants(h).ok()) << "seed " << seed;
    }
  }
  EXPECT_GT(glued, 10);
}

}  // namespace
}  // namespace pap
