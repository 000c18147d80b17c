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


#include <cstdlib>

#include <gtest/gtest.h>

#include "pap/generator.hpp"

namespace pap {
namespace {

TEST(GenerateInstance, Deterministic) {
  GeneratorOptions o;
  o.seed = 99;
  o.num_paths = 7;
  EXPECT_EQ(FormatInstance(GenerateInstance(o)), FormatInstance(GenerateInstance(o)));
  auto other = o;
  other.seed = 100;
  EXPECT_NE(FormatInstance(GenerateInstance(o)), FormatInstance(GenerateInstance(other)));
}

TEST(GenerateInstance, AlwaysFeasibleAndWithinShape) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GeneratorOptions o;
    o.seed = seed;
    o.num_paths = 2 + static_cast<int>(seed % 11);
    o.min_path_length = 1 + static_cast<int>(seed % 2);
    o.max_path_length = 5;
    o.link_density = 0.05 * static_cast<double>(seed % 6);
    o.structured_bias = seed % 3 == 0;
    auto g = GenerateInstance(o);
    EXPECT_TRUE(IsTwoEdgeConnected(FullGraph(g))) << "seed " << seed;
    EXPECT_EQ(g.num_paths(), o.num_paths);
    for (const auto& p : g.paths()) {
      EXPECT_GE(static_cast<int>(p.size()), o.min_path_length);
      EXPECT_LE(static_cast<int>(p.size()), o.max_path_length);
    }
  }
}

TEST(GenerateInstance, FullDensityTakesEveryPair) {
  GeneratorOptions o;
  o.num_paths = 3;
  o.min_path_length = 3;
  o.max_path_length = 3;
  o.link_density = 1.0;
  auto g = GenerateInstance(o);
  // 9 vertices, 36 pairs, minus the 6 path edges.
  EXPECT_EQ(g.num_links(), 30);
}

TEST(GenerateInstance, RejectsImpossibleShapes) {
  GeneratorOptions o;
  o.num_paths = 1;
  o.min_path_length = 2;
  o.max_path_length = 2;
  EXPECT_THROW(GenerateInstance(o), std::invalid_argument);
  o.num_paths = 0;
  EXPECT_THROW(GenerateInstance(o), std::invalid_argument);
  o.num_paths = 3;
  o.min_path_length = 4;
  EXPECT_THROW(GenerateInstance(o), std::invalid_argument);
}

TEST(DefaultSeed, ReadsEnvironment) {
  ::setenv("PAP_SEED", "1234", 1);
  EXPECT_EQ(DefaultSeed(7), 1234u);
  ::setenv("PAP_SEED", "x", 1);
  EXPECT_EQ(DefaultSeed(7), 7u);
  ::unsetenv("PAP_SEED");
  EXPECT_EQ(DefaultSeed(7), 7u);
}

}  // namespace
}  // namespace pap
