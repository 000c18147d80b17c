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


#include "pap/start.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "pap/matching.hpp"

namespace pap {

namespace {

class Packer {
 public:
  Packer(int universe_size, const std::vector<std::vector<int>>& sets)
      : owner_(universe_size, -1), in_(sets.size(), 0) {
    sets_.reserve(sets.size());
    for (const auto& s : sets) {
      std::vector<int> t = s;
      std::sort(t.begin(), t.end());
      t.erase(std::unique(t.begin(), t.end()), t.end());
      sets_.push_back(std::move(t));
    }
  }

  void Greedy() {
    std::vector<int> order(sets_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return sets_[a].size() < sets_[b].size();
    });
    for (int s : order) {
      if (Conflicts(s).empty()) Add(s);
    }
  }

  void Improve(int swap_depth) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int r = 0; r <= swap_depth && !moved; ++r) moved = TrySwap(r);
    }
  }

  std::vector<int> Chosen() const {
    std::vector<int> out;
    for (int s = 0; s < static_cast<int>(sets_.size()); ++s) {
      if (in_[s]) out.push_back(s);
    }
    return out;
  }

 private:
  std::vector<int> Conflicts(int s) const {
    std::vector<int> c;
    for (int e : sets_[s]) {
      if (owner_[e] >= 0) c.push_back(owner_[e]);
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  }

  void Add(int s) {
    in_[s] = 1;
    for (int e : sets_[s]) owner_[e] = s;
  }

  void Remove(int s) {
    in_[s] = 0;
    for (int e : sets_[s]) owner_[e] = -1;
  }

  bool Disjoint(int a, int b) const {
    const auto& x = sets_[a];
    const auto& y = sets_[b];
    size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
      if (x[i] == y[j]) return false;
      x[i] < y[j] ? ++i : ++j;
    }
    return true;
  }

  // k pairwise disjoint members of pool, first found in index order.
  bool PickDisjoint(const std::vector<int>& pool, int k, size_t from,
                    std::vector<int>& picked) const {
    if (static_cast<int>(picked.size()) == k) return true;
    for (size_t i = from; i < pool.size(); ++i) {
      bool ok = true;
      for (int p : picked) ok = ok && Disjoint(p, pool[i]);
      if (!ok) continue;
      picked.push_back(pool[i]);
      if (PickDisjoint(pool, k, i + 1, picked)) return true;
      picked.pop_back();
    }
    return false;
  }

  bool Apply(const std::vector<int>& removed, int r) {
    std::vector<int> pool;
    for (int s = 0; s < static_cast<int>(sets_.size()); ++s) {
      if (in_[s]) continue;
      const auto c = Conflicts(s);
      if (std::includes(removed.begin(), removed.end(), c.begin(), c.end())) {
        pool.push_back(s);
      }
    }
    std::vector<int> picked;
    if (!PickDisjoint(pool, r + 1, 0, picked)) return false;
    for (int s : removed) Remove(s);
    for (int s : picked) Add(s);
    return true;
  }

  bool TrySwap(int r) {
    if (r == 0) {
      for (int s = 0; s < static_cast<int>(sets_.size()); ++s) {
        if (!in_[s] && Conflicts(s).empty()) {
          Add(s);
          return true;
        }
      }
      return false;
    }
    if (r <= 2) {
      // Once smaller swaps fail, an improving swap of two sets needs a new
      // set meeting both.
      std::set<std::vector<int>> anchors;
      for (int s = 0; s < static_cast<int>(sets_.size()); ++s) {
        if (in_[s]) continue;
        auto c = Conflicts(s);
        if (static_cast<int>(c.size()) == r) anchors.insert(std::move(c));
      }
      for (const auto& a : anchors) {
        if (Apply(a, r)) return true;
      }
      return false;
    }
    const std::vector<int> chosen = Chosen();
    std::vector<int> pick;
    std::function<bool(size_t)> rec = [&](size_t from) {
      if (static_cast<int>(pick.size()) == r) return Apply(pick, r);
      for (size_t i = from; i < chosen.size(); ++i) {
        pick.push_back(chosen[i]);
        if (rec(i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    return rec(0);
  }

  std::vector<std::vector<int>> sets_;
  std::vector<int> owner_;
  std::vector<char> in_;
};

std::vector<int> EndpointsOf(const Track& t) {
  std::vector<int> out;
  for (int v : t.vertices) {
    if (EcpcInstance::IsEndpoint(v)) out.push_back(v);
  }
  return out;
}

// Tracks whose path part has one or two links, enumerated once per ecpc.
std::vector<Track> ShortTracks(const EcpcInstance& ecpc, int q_size) {
  std::vector<Track> out;
  for (auto& t : EnumerateTracks(ecpc, 3)) {
    if (static_cast<int>(t.q.size()) == q_size || q_size == 0) {
      if (t.q.size() <= 2) out.push_back(std::move(t));
    }
  }
  return out;
}

struct CrossMatching {
  MatchingProblem problem;
  std::vector<int> link;  // per edge: ecpc link id
};

CrossMatching BuildCrossMatching(const PapInstance& instance, const EcpcInstance& ecpc) {
  CrossMatching m;
  m.problem.num_vertices = ecpc.num_vertices();
  std::set<std::pair<int, int>> seen;
  for (int id = 0; id < ecpc.num_original; ++id) {
    const Link& l = ecpc.links[id];
    if (!ecpc.is_cross(id) || !EcpcInstance::IsEndpoint(l.u) ||
        !EcpcInstance::IsEndpoint(l.v)) {
      continue;
    }
    if (!seen.insert({l.u, l.v}).second) continue;
    m.problem.edges.push_back({l.u, l.v});
    m.problem.expensive.push_back(IsExpensiveLink(instance, id));
    m.link.push_back(id);
  }
  m.problem.costs.assign(m.problem.edges.size(), 0);
  for (size_t e = 0; e < m.problem.edges.size(); ++e) {
    m.problem.costs[e] = m.problem.expensive[e] ? 1 : 0;
  }
  return m;
}

std::vector<Track> MatchingThenPacking(const EcpcInstance& ecpc, const CrossMatching& m,
                                       const std::vector<int>& matched, int swap_depth) {
  std::vector<Track> out;
  std::vector<char> used(ecpc.num_vertices(), 0);
  for (int e : matched) {
    const int id = m.link[e];
    const int ids[1] = {id};
    auto t = ValidateTrack(ecpc, ids);
    if (!t) continue;
    for (int v : t->vertices) used[v] = 1;
    out.push_back(std::move(*t));
  }
  std::vector<Track> pool;
  std::vector<std::vector<int>> sets;
  for (auto& t : ShortTracks(ecpc, 2)) {
    bool free = true;
    for (int v : t.vertices) free = free && !used[v];
    if (!free) continue;
    sets.push_back(EndpointsOf(t));
    pool.push_back(std::move(t));
  }
  for (int s : PackingHeuristic(ecpc.num_vertices(), sets, swap_depth)) {
    out.push_back(pool[s]);
  }
  return out;
}

}  // namespace

std::vector<int> PackingHeuristic(int universe_size,
                                  const std::vector<std::vector<int>>& sets,
                                  int swap_depth) {
  Packer packer(universe_size, sets);
  packer.Greedy();
  packer.Improve(swap_depth);
  return packer.Chosen();
}

std::vector<Track> AlgorithmA(const PapInstance& instance, const EcpcInstance& ecpc,
                              int swap_depth) {
  const CrossMatching m = BuildCrossMatching(instance, ecpc);
  return MatchingThenPacking(ecpc, m, MaxMatching(m.problem), swap_depth);
}

std::vector<Track> AlgorithmB(const PapInstance& instance, const EcpcInstance& ecpc,
                              int max_expensive, int swap_depth) {
  const CrossMatching m = BuildCrossMatching(instance, ecpc);
  return MatchingThenPacking(ecpc, m, MaxMatchingBoundedExpensive(m.problem, max_expensive),
                             swap_depth);
}

std::vector<Track> AlgorithmC(const PapInstance& instance, const EcpcInstance& ecpc,
                              int swap_depth) {
  (void)instance;
  std::vector<Track> pool = ShortTracks(ecpc, 0);
  std::vector<std::vector<int>> sets;
  for (const auto& t : pool) sets.push_back(EndpointsOf(t));
  std::vector<Track> out;
  for (int s : PackingHeuristic(ecpc.num_vertices(), sets, swap_depth)) {
    out.push_back(pool[s]);
  }
  return out;
}

Candidate EvaluateTracks(const PapInstance& instance, const EcpcInstance& ecpc,
                         std::string name, std::vector<Track> tracks) {
  Candidate c;
  c.name = std::move(name);
  LinkSet links;
  std::vector<char> covered(ecpc.num_vertices(), 0);
  for (const auto& t : tracks) {
    for (int id : t.links()) links.push_back(ecpc.original[id]);
    for (int v : t.vertices) covered[v] = 1;
    if (t.q.size() == 1) ++c.stats.alpha1;
    if (t.q.size() == 2) ++c.stats.alpha2;
  }
  c.tracks = std::move(tracks);
  c.links = Normalize(std::move(links));
  WorkingSolution h(instance, c.links);
  c.ledger = h.ledger();
  c.cost_quarters = h.cost_quarters();
  c.invariants_ok = CheckInvariants(h).ok();
  for (int v = 0; v < ecpc.num_vertices(); ++v) {
    if (EcpcInstance::IsEndpoint(v) && !covered[v]) ++c.stats.alpha0;
  }
  int leaves = 0;
  for (int v = 0; v < instance.num_vertices(); ++v) {
    if (!h.IsLonelyLeaf(v)) continue;
    ++leaves;
    if (h.IsExpensiveLeaf(v)) ++c.stats.alpha0e;
  }
  const int degenerate = static_cast<int>(FindDegeneratePaths(instance).size());
  c.redistribution_quarters = 3 * c.stats.alpha1 + 8 * c.stats.alpha2 + 6 * leaves +
                              c.stats.alpha0e + 2 * degenerate;
  return c;
}

StartResult StartingSolution(const PapInstance& instance, const StartOptions& options) {
  StartResult result;
  result.ecpc = ShadowComplete(BuildEcpc(instance));
  const EcpcInstance& ecpc = result.ecpc;
  if (options.run_a) {
    result.candidates.push_back(
        EvaluateTracks(instance, ecpc, "A", AlgorithmA(instance, ecpc, options.swap_depth)));
  }
  if (options.run_b) {
    for (int q = 0; q <= instance.num_paths(); ++q) {
      result.candidates.push_back(EvaluateTracks(
          instance, ecpc, "B" + std::to_string(q),
          AlgorithmB(instance, ecpc, q, options.swap_depth)));
    }
  }
  if (options.run_c) {
    result.candidates.push_back(
        EvaluateTracks(instance, ecpc, "C", AlgorithmC(instance, ecpc, options.swap_depth)));
  }
  for (int k = 0; k < static_cast<int>(result.candidates.size()); ++k) {
    if (result.best < 0) {
      result.best = k;
      continue;
    }
    const Candidate& a = result.candidates[k];
    const Candidate& b = result.candidates[result.best];
    if (std::tuple(a.cost_quarters, a.links.size(), a.links) <
        std::tuple(b.cost_quarters, b.links.size(), b.links)) {
      result.best = k;
    }
  }
  return result;
}

std::vector<int> OverlapWithOptimum(const Candidate& candidate,
                                    const std::vector<Track>& optimum) {
  std::set<int> single;
  for (const auto& t : optimum) {
    if (t.q.size() == 1) single.insert(t.vertices.begin(), t.vertices.end());
  }
  std::vector<int> counts(3, 0);
  for (const auto& t : candidate.tracks) {
    if (t.q.size() != 1) continue;
    int j = 0;
    for (int v : t.vertices) j += single.count(v) ? 1 : 0;
    ++counts[j];
  }
  return counts;
}

FapBound FapBoundCheck(const PapInstance& instance, int opt, int swap_depth) {
  StartOptions options;
  options.swap_depth = swap_depth;
  options.run_a = false;
  options.run_c = false;
  const StartResult r = StartingSolution(instance, options);
  FapBound out;
  out.cost_quarters = r.chosen().cost_quarters;
  out.bound = (1.75 + 0.001) * opt + (opt - instance.num_paths());
  out.holds = out.cost_quarters <= 4 * out.bound + 1e-9;
  return out;
}

}  // namespace pap
