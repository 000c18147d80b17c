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


#include "pap/generator.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <stdexcept>

namespace pap {
namespace {

// Draws from [lo, hi] without relying on library distributions, whose output
// differs between standard libraries.
int Uniform(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

double Unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

PapInstance GenerateInstance(const GeneratorOptions& options) {
  if (options.num_paths < 1 || options.min_path_length < 1 ||
      options.max_path_length < options.min_path_length) {
    throw std::invalid_argument("bad path parameters");
  }
  std::mt19937_64 rng(options.seed);
  std::vector<std::vector<int>> paths;
  int n = 0;
  for (int p = 0; p < options.num_paths; ++p) {
    const int len = Uniform(rng, options.min_path_length, options.max_path_length);
    std::vector<int> path(len);
    for (int& v : path) v = n++;
    paths.push_back(std::move(path));
  }
  std::vector<int> path_of(n), pos(n);
  for (int p = 0; p < options.num_paths; ++p) {
    for (int i = 0; i < static_cast<int>(paths[p].size()); ++i) {
      path_of[paths[p][i]] = p;
      pos[paths[p][i]] = i;
    }
  }
  auto admissible = [&](int a, int b) {
    return a != b && !(path_of[a] == path_of[b] && std::abs(pos[a] - pos[b]) == 1);
  };
  std::set<Link> links;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (admissible(a, b) && Unit(rng) < options.link_density) links.insert({a, b});
    }
  }
  if (options.structured_bias && options.num_paths > 1) {
    for (const auto& path : paths) {
      for (int end : {path.front(), path.back()}) {
        bool crossing = false;
        for (const Link& l : links) {
          if ((l.u == end || l.v == end) && path_of[l.u] != path_of[l.v]) crossing = true;
        }
        if (crossing) continue;
        int other = Uniform(rng, 0, n - 1);
        while (path_of[other] == path_of[end]) other = Uniform(rng, 0, n - 1);
        links.insert(MakeLink(end, other));
      }
    }
  }
  for (;;) {
    PapInstance g(n, paths, {links.begin(), links.end()});
    Multigraph full = FullGraph(g);
    int k = 0;
    auto comp = ConnectedComponents(full, &k);
    std::vector<int> side_a, side_b;
    if (k > 1) {
      for (int v = 0; v < n; ++v) (comp[v] == comp[0] ? side_a : side_b).push_back(v);
    } else {
      auto bridges = Bridges(full);
      if (bridges.empty()) return g;
      const int e = bridges[Uniform(rng, 0, static_cast<int>(bridges.size()) - 1)];
      const int removed[] = {e};
      auto split = ComponentsWithout(full, removed, &k);
      for (int v = 0; v < n; ++v) {
        (split[v] == split[full.edges[e].u] ? side_a : side_b).push_back(v);
      }
    }
    std::vector<Link> options_across;
    for (int a : side_a) {
      for (int b : side_b) {
        if (admissible(a, b) && !links.count(MakeLink(a, b))) {
          options_across.push_back(MakeLink(a, b));
        }
      }
    }
    if (options_across.empty()) {
      throw std::invalid_argument("parameters admit no feasible instance");
    }
    links.insert(options_across[Uniform(rng, 0, static_cast<int>(options_across.size()) - 1)]);
  }
}

std::uint64_t DefaultSeed(std::uint64_t fallback) {
  const char* env = std::getenv("PAP_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  return *end == '\0' ? v : fallback;
}

}  // namespace pap
