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
#include "pap/graph.hpp"

namespace pap {
namespace {

Multigraph RandomMultigraph(std::mt19937_64& rng, int n, int m) {
  Multigraph g;
  g.num_vertices = n;
  for (int i = 0; i < m; ++i) {
    const int a = static_cast<int>(rng() % n);
    int b = static_cast<int>(rng() % n);
    if (a == b) b = (b + 1) % n;
    g.AddEdge(a, b, i);
  }
  return g;
}

TEST(Bridges, AgreeWithEdgeDeletion) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 400; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int m = static_cast<int>(rng() % 16);
    Multigraph g = RandomMultigraph(rng, n, m);
    int base = 0;
    ConnectedComponents(g, &base);
    std::vector<int> expected;
    for (int e = 0; e < m; ++e) {
      int k = 0;
      const int removed[] = {e};
      ComponentsWithout(g, removed, &k);
      if (k > base) expected.push_back(e);
    }
    auto got = Bridges(g);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << "round " << round;
    EXPECT_EQ(IsTwoEdgeConnected(g), testing::BruteForceTwoEdgeConnected(g)) << "round " << round;
  }
}

TEST(Bridges, ParallelEdgesAreNotBridges) {
  Multigraph g;
  g.num_vertices = 2;
  g.AddEdge(0, 1);
  g.AddEdge(0, 1);
  EXPECT_TRUE(Bridges(g).empty());
  EXPECT_TRUE(IsTwoEdgeConnected(g));
}

TEST(Contract, DropsLoopsKeepsParallels) {
  Multigraph g;
  g.num_vertices = 4;
  g.AddEdge(0, 1, 10);
  g.AddEdge(1, 2, 11);
  g.AddEdge(0, 2, 12);
  g.AddEdge(2, 3, 13);
  auto c = Contract(g, {{0, 1}});
  EXPECT_EQ(c.graph.num_vertices, 3);
  ASSERT_EQ(c.graph.edges.size(), 3u);
  EXPECT_EQ(c.vertex_map[0], c.vertex_map[1]);
  int parallel = 0;
  for (const auto& e : c.graph.edges) {
    if ((e.u == c.vertex_map[0] && e.v == c.vertex_map[2]) ||
        (e.v == c.vertex_map[0] && e.u == c.vertex_map[2])) {
      ++parallel;
    }
  }
  EXPECT_EQ(parallel, 2);
}

TEST(Blocks, ClosedPathIsOneSimpleBlock) {
  PapInstance g(4, {{0, 1, 2, 3}}, {{0, 3}});
  auto d = DecomposeBlocks(UnionGraph(g, std::vector<int>{0}), g);
  ASSERT_EQ(d.blocks.size(), 1u);
  EXPECT_EQ(d.blocks[0].cls, BlockClass::kSimple);
  EXPECT_TRUE(d.bridges.empty());
}

TEST(Blocks, TwoPathsJoinedEndToEndFormSmallBlock) {
  PapInstance g(6, {{0, 1, 2}, {3, 4, 5}}, {{2, 3}, {0, 5}});
  auto d = DecomposeBlocks(UnionGraph(g, std::vector<int>{0, 1}), g);
  ASSERT_EQ(d.blocks.size(), 1u);
  EXPECT_EQ(d.blocks[0].cls, BlockClass::kSmall);
}

TEST(Blocks, LonelyVerticesAndComplexComponents) {
  // Path 0-1-2 closed, path 3-4 hanging off it by one link.
  PapInstance g(5, {{0, 1, 2}, {3, 4}}, {{0, 2}, {2, 3}});
  auto d = DecomposeBlocks(UnionGraph(g, std::vector<int>{0, 1}), g);
  EXPECT_EQ(d.bridges.size(), 2u);
  EXPECT_TRUE(d.lonely[3]);
  EXPECT_TRUE(d.lonely[4]);
  EXPECT_FALSE(d.lonely[0]);
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_TRUE(d.components[0].complex);
}

TEST(Verify, SmallCases) {
  PapInstance g(4, {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}, {0, 3}});
  EXPECT_TRUE(VerifySolution(g, std::vector<int>{0, 1}));
  EXPECT_FALSE(VerifySolution(g, std::vector<int>{0}));
  EXPECT_FALSE(VerifySolution(g, std::vector<int>{}));
}

TEST(Verify, SingleVertexNeedsNothing) {
  PapInstance g(1, {{0}}, {});
  EXPECT_TRUE(VerifySolution(g, std::vector<int>{}));
}

TEST(Instance, RejectsMalformedInput) {
  EXPECT_THROW(PapInstance(3, {{0, 1}, {1, 2}}, {}), InvalidInstance);
  EXPECT_THROW(PapInstance(3, {{0, 1}}, {}), InvalidInstance);
  EXPECT_THROW(PapInstance(3, {{0, 1, 2}}, {{0, 2}, {2, 0}}), InvalidInstance);
  EXPECT_THROW(PapInstance(3, {{0, 1, 2}}, {{0, 1}}), InvalidInstance);
  EXPECT_NO_THROW(PapInstance(3, {{0, 1, 2}}, {{0, 1}}, false));
}

TEST(InstanceIo, RoundTripKeepsComments) {
  const std::string text =
      "# two paths\n"
      "pap 4\n"
      "path 0 1\n"
      "\n"
      "path 2 3\n"
      "link 0 2\n"
      "link 1 3\n";
  auto g = ParseInstance(text);
  EXPECT_EQ(FormatInstance(g), text);
  EXPECT_EQ(FormatInstance(ParseInstance(FormatInstance(g))), text);
}

TEST(InstanceIo, CanonicalizesLinks) {
  auto g = ParseInstance("pap 3\npath 0 1 2\nlink  2   0\n");
  EXPECT_EQ(FormatInstance(g), "pap 3\npath 0 1 2\nlink 0 2\n");
}

TEST(InstanceIo, ReportsBadLines) {
  EXPECT_THROW(ParseInstance("path 0 1\n"), InvalidInstance);
  EXPECT_THROW(ParseInstance("pap 2\npath 0 x\n"), InvalidInstance);
  EXPECT_THROW(ParseInstance("pap 2\npath 0 1\nlink 0\n"), InvalidInstance);
  EXPECT_THROW(ParseInstance("pap 2\nedge 0 1\n"), InvalidInstance);
}

TEST(LinkClasses, PartitionsLinks) {
  PapInstance g(6, {{0, 1, 2}, {3, 4, 5}}, {{0, 2}, {2, 3}, {1, 4}, {0, 5}});
  auto c = ComputeLinkClasses(g);
  // Only links between path ends are classified; 1-4 joins two interiors.
  EXPECT_EQ(c.endpoint_links, (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(c.same_path_links, (std::vector<int>{0}));
  EXPECT_EQ(c.cross_path_links, (std::vector<int>{1, 3}));
  EXPECT_EQ(c.endpoints, (std::vector<int>{0, 2, 3, 5}));
}

}  // namespace
}  // namespace pap
