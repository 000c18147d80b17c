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


#include "fixtures.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pap/generator.hpp"

namespace pap::testing {

std::vector<int> Named::Vertices(std::initializer_list<const char*> names) const {
  std::vector<int> out;
  for (const char* n : names) out.push_back(id.at(n));
  return out;
}

int Named::LinkId(const std::string& a, const std::string& b) const {
  auto l = instance.find_link(id.at(a), id.at(b));
  if (!l) throw std::out_of_range("no link " + a + " " + b);
  return *l;
}

namespace {

Named Build(const std::vector<std::vector<std::string>>& paths,
            const std::vector<std::pair<std::string, std::string>>& links, bool strict) {
  Named out;
  std::vector<std::vector<int>> ids;
  for (const auto& p : paths) {
    std::vector<int> path;
    for (const auto& name : p) {
      const int v = static_cast<int>(out.id.size());
      out.id[name] = v;
      path.push_back(v);
    }
    ids.push_back(std::move(path));
  }
  std::vector<Link> ls;
  for (const auto& [a, b] : links) ls.push_back(MakeLink(out.id.at(a), out.id.at(b)));
  out.instance = PapInstance(static_cast<int>(out.id.size()), std::move(ids), std::move(ls),
                             strict);
  return out;
}

}  // namespace

Named ForbiddenStructures() {
  return Build({{"a1", "a2", "a3", "a4"},
                {"b1", "b2", "b3", "b4"},
                {"c1", "c2", "c3"},
                {"d1", "d2", "d3", "d4"},
                {"e1", "e2", "e3"},
                {"f1", "f2"},
                {"g1", "g2"},
                {"h1", "h2", "h3"},
                {"i1", "i2", "i3"},
                {"j1", "j2", "j3"}},
               {{"a2", "b3"}, {"a4", "a3"}, {"a4", "a2"}, {"a1", "b1"}, {"a3", "b3"},
                {"a3", "b4"}, {"c3", "d4"}, {"b1", "d2"}, {"b2", "d1"}, {"b4", "c1"},
                {"c1", "c3"}, {"c2", "f1"}, {"d1", "e3"}, {"d3", "e1"}, {"f1", "e1"},
                {"f2", "e3"}, {"f1", "g1"}, {"e3", "h3"}, {"h2", "g1"}, {"h1", "g2"},
                {"i1", "b4"}, {"i2", "c1"}, {"i3", "c3"}, {"j1", "j3"}, {"j1", "i1"},
                {"i3", "j3"}, {"i2", "j3"}, {"j2", "b4"}, {"j2", "c1"}},
               false);
}

Named ElevenPathCover() {
  std::vector<std::vector<std::string>> paths;
  for (int i = 1; i <= 11; ++i) {
    const auto s = std::to_string(i);
    paths.push_back({"u" + s, "w" + s, "v" + s});
  }
  return Build(paths,
               {{"u1", "v1"}, {"u3", "v3"}, {"u4", "v4"}, {"u11", "v11"}, {"w1", "v2"},
                {"w1", "u2"}, {"v9", "w11"}, {"v10", "w11"}, {"u8", "u7"}, {"w3", "w4"},
                {"w3", "u6"}, {"w4", "u5"}, {"v5", "u9"}, {"v7", "w6"}, {"v8", "w7"},
                {"v6", "w8"}, {"u10", "w9"}},
               true);
}

std::vector<int> ElevenPathTrack(const Named& cover, int k) {
  using P = std::pair<const char*, const char*>;
  static const std::vector<std::vector<P>> tracks = {
      {{"u7", "u8"}},
      {{"v5", "u9"}},
      {{"u2", "w1"}, {"u1", "v1"}, {"w1", "v2"}},
      {{"v9", "w11"}, {"u11", "v11"}, {"w11", "v10"}},
      {{"u5", "w4"}, {"u4", "v4"}, {"w4", "w3"}, {"u3", "v3"}, {"w3", "u6"}},
  };
  std::vector<int> out;
  for (const auto& [a, b] : tracks.at(k - 1)) out.push_back(cover.LinkId(a, b));
  return out;
}

PapInstance RandomInstance(std::uint64_t seed, int max_paths, int max_len, double density,
                           bool structured_bias, int min_len) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
  GeneratorOptions o;
  o.seed = rng();
  o.num_paths = 1 + static_cast<int>(rng() % max_paths);
  o.min_path_length = min_len;
  o.max_path_length = max_len;
  o.link_density = density;
  o.structured_bias = structured_bias;
  for (;;) {
    try {
      return GenerateInstance(o);
    } catch (const std::invalid_argument&) {
      // A lone two-vertex path has no admissible link.
      o.seed = rng();
      o.num_paths = 2 + static_cast<int>(rng() % std::max(1, max_paths - 1));
    }
  }
}

std::optional<int> BruteForceOpt(const PapInstance& instance, int max_size) {
  const int m = instance.num_links();
  std::vector<int> pick;
  std::function<bool(int, int)> choose = [&](int from, int left) -> bool {
    if (left == 0) return VerifySolution(instance, pick);
    for (int i = from; i + left <= m; ++i) {
      pick.push_back(i);
      if (choose(i + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int k = 0; k <= std::min(m, max_size); ++k) {
    pick.clear();
    if (choose(0, k)) return k;
  }
  return std::nullopt;
}

bool BruteForceTwoEdgeConnected(const Multigraph& graph) {
  auto connected = [&](int skip) {
    if (graph.num_vertices == 0) return true;
    std::vector<std::vector<int>> adj(graph.num_vertices);
    for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
      if (e == skip) continue;
      adj[graph.edges[e].u].push_back(graph.edges[e].v);
      adj[graph.edges[e].v].push_back(graph.edges[e].u);
    }
    std::vector<char> seen(graph.num_vertices, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == graph.num_vertices;
  };
  if (!connected(-1)) return false;
  for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
    if (!connected(e)) return false;
  }
  return true;
}

int BruteForceMatching(int n, const std::vector<std::pair<int, int>>& edges) {
  int best = 0;
  std::vector<char> used(n, 0);
  std::function<void(size_t, int)> go = [&](size_t i, int size) {
    if (size + static_cast<int>(edges.size() - i) <= best) return;
    best = std::max(best, size);
    if (i == edges.size()) return;
    const auto [a, b] = edges[i];
    if (a != b && !used[a] && !used[b]) {
      used[a] = used[b] = 1;
      go(i + 1, size + 1);
      used[a] = used[b] = 0;
    }
    go(i + 1, size);
  };
  go(0, 0);
  return best;
}

std::vector<std::int64_t> CheapestMatchingBySize(const MatchingProblem& problem) {
  std::vector<std::int64_t> best(problem.num_vertices / 2 + 1, -1);
  std::vector<char> used(problem.num_vertices, 0);
  std::function<void(size_t, int, std::int64_t)> go = [&](size_t i, int size,
                                                         std::int64_t cost) {
    if (best[size] < 0 || cost < best[size]) best[size] = cost;
    for (size_t e = i; e < problem.edges.size(); ++e) {
      const auto [a, b] = problem.edges[e];
      if (used[a] || used[b]) continue;
      used[a] = used[b] = 1;
      go(e + 1, size + 1, cost + problem.cost(static_cast<int>(e)));
      used[a] = used[b] = 0;
    }
  };
  go(0, 0, 0);
  return best;
}

}  // namespace pap::testing
