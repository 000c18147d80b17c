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

#include <benchmark/benchmark.h>

#include "pap/frlp.hpp"
#include "pap/generator.hpp"
#include "pap/matching.hpp"
#include "pap/oracle.hpp"
#include "pap/pipeline.hpp"
#include "pap/reduce.hpp"

namespace {

pap::PapInstance Instance(int paths, std::uint64_t seed) {
  pap::GeneratorOptions o;
  o.seed = seed;
  o.num_paths = paths;
  o.min_path_length = 2;
  o.max_path_length = 5;
  o.link_density = 0.15;
  o.structured_bias = true;
  return pap::GenerateInstance(o);
}

void BM_Solve(benchmark::State& state) {
  const auto g = Instance(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(pap::Solve(g).links);
  state.counters["vertices"] = g.num_vertices();
}
BENCHMARK(BM_Solve)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SolveStructured(benchmark::State& state) {
  const auto g = Instance(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(pap::SolveStructured(g).links);
}
BENCHMARK(BM_SolveStructured)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Reduce(benchmark::State& state) {
  const auto g = Instance(static_cast<int>(state.range(0)), 7);
  auto leaf = [](const pap::PapInstance& sub) { return pap::SolveStructured(sub).links; };
  for (auto _ : state) benchmark::DoNotOptimize(pap::Reduce(g, {}, leaf).links);
}
BENCHMARK(BM_Reduce)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ExactPap(benchmark::State& state) {
  const auto g = Instance(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(pap::ExactPap(g));
}
BENCHMARK(BM_ExactPap)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

pap::MatchingProblem RandomGraph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  pap::MatchingProblem p;
  p.num_vertices = n;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng() % 4 == 0) {
        p.edges.emplace_back(a, b);
        p.costs.push_back(static_cast<std::int64_t>(rng() % 2));
      }
    }
  }
  return p;
}

void BM_MaxMatching(benchmark::State& state) {
  const auto p = RandomGraph(static_cast<int>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(pap::MaxMatching(p));
}
BENCHMARK(BM_MaxMatching)->Arg(32)->Arg(128)->Arg(256);

void BM_MinCostMatchingExactSize(benchmark::State& state) {
  const auto p = RandomGraph(static_cast<int>(state.range(0)), 17);
  const int k = static_cast<int>(pap::MaxMatching(p).size()) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(pap::MinCostMatchingExactSize(p, k));
}
BENCHMARK(BM_MinCostMatchingExactSize)->Arg(32)->Arg(128);

void BM_LpFeasibility(benchmark::State& state) {
  const auto lp = pap::BuildPolyhedron(pap::ParseRational("1.9412"), pap::ParseRational("0.001"),
                                       pap::ParseRational("0.0001"));
  for (auto _ : state) benchmark::DoNotOptimize(pap::CheckFeasibility(lp).empty);
}
BENCHMARK(BM_LpFeasibility)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
