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
#include "pap/bridge.hpp"
#include "pap/start.hpp"

namespace pap {
namespace {

TEST(ContractedView, SeparatesComponentFromRest) {
  // Two paths hanging together by one link; path 5-6 closed on its own.
  PapInstance g(7, {{0, 1, 2}, {3, 4}, {5, 6}},
                {{2, 3}, {0, 4}, {5, 6}, {0, 5}, {4, 6}}, false);
  WorkingSolution h(g, {0, 2});
  ASSERT_EQ(h.num_components(), 2);
  const int c = h.blocks().component_of[0];
  auto view = BuildContractedView(h, c);
  EXPECT_EQ(view.c_nodes.size(), 5u);
  EXPECT_EQ(view.node_of[5], view.node_of[6]);
  EXPECT_FALSE(view.InC(view.node_of[5]));
  EXPECT_TRUE(view.InC(view.node_of[0]));
  EXPECT_EQ(view.tree_edges.size(), 4u);
  auto ear = FindPseudoEar(view, view.node_of[0], view.node_of[4]);
  ASSERT_TRUE(ear.has_value());
  EXPECT_EQ(ear->witness_nodes.front(), view.node_of[0]);
  EXPECT_EQ(ear->witness_nodes.back(), view.node_of[4]);
}

TEST(CoverOnce, LowersStateWithoutRaisingCost) {
  int steps = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto g = testing::RandomInstance(seed, 10, 5, 0.15, seed % 2 == 0, 2);
    WorkingSolution h(g, StartingSolution(g).chosen().links);
    try {
      while (h.num_bridges() > 0) {
        const auto s = CoverOnce(h);
        ++steps;
        EXPECT_TRUE(s.components_after < s.components_before ||
                    (s.components_after == s.components_before &&
                     s.bridges_after < s.bridges_before))
            << "seed " << seed << " " << FormatStep(s);
        EXPECT_LE(s.cost_after, s.cost_before) << "seed " << seed << " " << FormatStep(s);
        EXPECT_EQ(s.cost_after, h.cost_quarters());
        EXPECT_TRUE(CheckInvariants(h).ok()) << "seed " << seed << " " << FormatStep(s);
      }
    } catch (const NoProgress& e) {
      EXPECT_EQ(e.links, h.links());
    }
  }
  EXPECT_GT(steps, 100);
}

}  // namespace
}  // namespace pap
