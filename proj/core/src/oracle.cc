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


#include "pap/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

namespace pap {
namespace {

struct Interrupted {};

class AugmentationSearch {
 public:
  AugmentationSearch(const Multigraph& base,
                     const std::vector<std::pair<int, int>>& candidates,
                     const SearchBudget& budget)
      : base_(base),
        cand_(candidates),
        budget_(budget),
        state_(candidates.size(), kFree),
        start_(std::chrono::steady_clock::now()) {}

  // Whether some completion adds at most `left` free candidates.
  bool Dfs(int left) {
    Tick();
    Multigraph h = Current();
    auto bridges = Bridges(h);
    int k = 0;
    auto cls = ComponentsWithout(h, bridges, &k);
    if (k <= 1) return true;
    std::vector<int> deg(k, 0);
    for (int e : bridges) {
      ++deg[cls[h.edges[e].u]];
      ++deg[cls[h.edges[e].v]];
    }
    int demand = 0;
    for (int c = 0; c < k; ++c) demand += std::max(0, 2 - deg[c]);
    if ((demand + 1) / 2 > left) return false;
    if (!CompletionFeasible(h)) return false;
    std::vector<std::vector<int>> crossing(k);
    for (int i = 0; i < static_cast<int>(cand_.size()); ++i) {
      if (state_[i] != kFree) continue;
      int a = cls[cand_[i].first], b = cls[cand_[i].second];
      if (a == b) continue;
      if (deg[a] <= 1) crossing[a].push_back(i);
      if (deg[b] <= 1) crossing[b].push_back(i);
    }
    int pick = -1;
    for (int c = 0; c < k; ++c) {
      if (deg[c] > 1) continue;
      if (pick == -1 || crossing[c].size() < crossing[pick].size()) pick = c;
    }
    if (pick == -1 || crossing[pick].empty()) return false;
    const auto& options = crossing[pick];
    size_t tried = 0;
    bool found = false;
    for (; tried < options.size(); ++tried) {
      state_[options[tried]] = kChosen;
      if (Dfs(left - 1)) {
        found = true;
        break;
      }
      state_[options[tried]] = kExcluded;
    }
    if (!found) {
      for (int i : options) state_[i] = kFree;
      return false;
    }
    // Leave the chosen option in place so the caller can read the solution,
    // but release the exclusions made along the way.
    for (size_t j = 0; j < tried; ++j) state_[options[j]] = kFree;
    return true;
  }

  bool Solve(int left) {
    auto saved = state_;
    bool ok = Dfs(left);
    if (!ok) state_ = saved;
    return ok;
  }

  std::vector<int> Chosen() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(state_.size()); ++i) {
      if (state_[i] == kChosen) out.push_back(i);
    }
    return out;
  }

  int RootLowerBound() {
    Multigraph h = Current();
    auto bridges = Bridges(h);
    int k = 0;
    auto cls = ComponentsWithout(h, bridges, &k);
    if (k <= 1) return 0;
    std::vector<int> deg(k, 0);
    for (int e : bridges) {
      ++deg[cls[h.edges[e].u]];
      ++deg[cls[h.edges[e].v]];
    }
    int demand = 0;
    for (int c = 0; c < k; ++c) demand += std::max(0, 2 - deg[c]);
    return (demand + 1) / 2;
  }

  bool Feasible() { return CompletionFeasible(Current()); }

  void Force(int i, bool chosen) { state_[i] = chosen ? kChosen : kExcluded; }
  void Clear(int i) { state_[i] = kFree; }
  int NumChosen() const {
    return static_cast<int>(std::count(state_.begin(), state_.end(), kChosen));
  }
  void ResetFree() {
    for (auto& s : state_) {
      if (s == kChosen) s = kFree;
    }
  }
  std::int64_t nodes() const { return nodes_; }

 private:
  enum State : char { kFree, kChosen, kExcluded };

  void Tick() {
    ++nodes_;
    if (nodes_ > budget_.node_limit) throw Interrupted{};
    if ((nodes_ & 255) == 0) {
      std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
      if (spent.count() > budget_.time_limit_seconds) throw Interrupted{};
    }
  }

  Multigraph Current() const {
    Multigraph h = base_;
    for (int i = 0; i < static_cast<int>(cand_.size()); ++i) {
      if (state_[i] == kChosen) h.AddEdge(cand_[i].first, cand_[i].second, i);
    }
    return h;
  }

  bool CompletionFeasible(Multigraph h) const {
    for (int i = 0; i < static_cast<int>(cand_.size()); ++i) {
      if (state_[i] == kFree) h.AddEdge(cand_[i].first, cand_[i].second, i);
    }
    return IsTwoEdgeConnected(h);
  }

  const Multigraph& base_;
  const std::vector<std::pair<int, int>>& cand_;
  SearchBudget budget_;
  std::vector<State> state_;
  std::chrono::steady_clock::time_point start_;
  std::int64_t nodes_ = 0;
};

}  // namespace

AugmentationResult MinAugmentation(const Multigraph& base,
                                   const std::vector<std::pair<int, int>>& candidates,
                                   int cap, const SearchBudget& budget,
                                   bool lexicographic) {
  AugmentationResult result;
  AugmentationSearch search(base, candidates, budget);
  if (!search.Feasible()) {
    result.status = SearchStatus::kInfeasible;
    return result;
  }
  int k = search.RootLowerBound();
  result.lower_bound = k;
  try {
    for (; k <= cap; ++k) {
      if (search.Solve(k)) break;
      result.lower_bound = k + 1;
    }
    if (k > cap) {
      result.status = SearchStatus::kAboveCap;
      result.nodes = search.nodes();
      return result;
    }
    result.lower_bound = k;
    if (lexicographic) {
      search.ResetFree();
      for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
        if (search.NumChosen() == k) break;
        search.Force(i, true);
        int left = k - search.NumChosen();
        if (search.Solve(left)) {
          // Drop what the probe added; only the forced prefix is kept.
          auto probe = search.Chosen();
          for (int j : probe) {
            if (j > i) search.Clear(j);
          }
        } else {
          search.Force(i, false);
        }
      }
    }
    result.chosen = search.Chosen();
    result.status = SearchStatus::kOptimal;
  } catch (const Interrupted&) {
    result.status = SearchStatus::kBudgetExceeded;
  }
  result.nodes = search.nodes();
  return result;
}

namespace {

LinkSet GreedyIncumbent(const PapInstance& instance) {
  LinkSet s(instance.num_links());
  std::iota(s.begin(), s.end(), 0);
  for (int id = 0; id < instance.num_links(); ++id) {
    LinkSet t;
    for (int x : s) {
      if (x != id) t.push_back(x);
    }
    if (VerifySolution(instance, t)) s = std::move(t);
  }
  return s;
}

}  // namespace

LinkSet PruneRedundant(const PapInstance& instance, LinkSet links) {
  links = Normalize(std::move(links));
  for (int i = static_cast<int>(links.size()) - 1; i >= 0; --i) {
    LinkSet t = links;
    t.erase(t.begin() + i);
    if (VerifySolution(instance, t)) links = std::move(t);
  }
  return links;
}

LinkSet CompleteToFeasible(const PapInstance& instance, LinkSet links,
                           const SearchBudget& budget, int* added) {
  links = Normalize(std::move(links));
  Multigraph base = UnionGraph(instance, links);
  std::vector<int> ids;
  std::vector<std::pair<int, int>> cand;
  for (int id = 0; id < instance.num_links(); ++id) {
    if (std::binary_search(links.begin(), links.end(), id)) continue;
    ids.push_back(id);
    cand.emplace_back(instance.link(id).u, instance.link(id).v);
  }
  auto r = MinAugmentation(base, cand, static_cast<int>(cand.size()), budget);
  LinkSet extra;
  if (r.status == SearchStatus::kOptimal) {
    for (int i : r.chosen) extra.push_back(ids[i]);
  } else if (r.status == SearchStatus::kInfeasible) {
    throw Infeasible("instance has no feasible solution");
  } else {
    LinkSet all = links;
    for (int id = static_cast<int>(ids.size()) - 1; id >= 0; --id) {
      LinkSet rest = all;
      rest.insert(rest.end(), ids.begin(), ids.begin() + id);
      if (!VerifySolution(instance, rest)) {
        all.push_back(ids[id]);
        extra.push_back(ids[id]);
      }
    }
  }
  if (added != nullptr) *added = static_cast<int>(extra.size());
  links.insert(links.end(), extra.begin(), extra.end());
  return Normalize(std::move(links));
}

LinkSet ExactPap(const PapInstance& instance, const SearchBudget& budget,
                 bool lexicographic) {
  Multigraph base;
  base.num_vertices = instance.num_vertices();
  int k = 0;
  for (const auto& [a, b] : instance.path_edges()) base.AddEdge(a, b, PathEdgeOrigin(k++));
  std::vector<std::pair<int, int>> cand;
  for (const Link& l : instance.links()) cand.emplace_back(l.u, l.v);
  auto r = MinAugmentation(base, cand, budget.max_opt_cardinality, budget, lexicographic);
  switch (r.status) {
    case SearchStatus::kOptimal:
      return r.chosen;
    case SearchStatus::kInfeasible:
      throw Infeasible("instance has no feasible solution");
    case SearchStatus::kAboveCap:
    case SearchStatus::kBudgetExceeded:
      break;
  }
  throw BudgetExceeded(GreedyIncumbent(instance), r.lower_bound);
}

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const EcpcInstance& inst) : inst_(inst) {
    std::map<std::pair<int, int>, int> lowest;
    for (int id = 0; id < inst.num_links(); ++id) {
      if (inst.is_loop(id)) continue;
      auto key = std::make_pair(inst.links[id].u, inst.links[id].v);
      if (!lowest.count(key)) lowest[key] = id;
    }
    for (const auto& [key, id] : lowest) links_.push_back(id);
    std::sort(links_.begin(), links_.end());
    const int n = inst.num_vertices();
    at_vertex_.assign(n, {});
    at_path_.assign(inst.num_paths, {});
    for (int k = 0; k < static_cast<int>(links_.size()); ++k) {
      const Link& l = inst.links[links_[k]];
      at_vertex_[l.u].push_back(k);
      at_vertex_[l.v].push_back(k);
      if (inst.is_cross(links_[k])) {
        at_path_[EcpcInstance::PathOf(l.u)].push_back(k);
        at_path_[EcpcInstance::PathOf(l.v)].push_back(k);
      }
    }
    vcov_.assign(n, 0);
    pcov_.assign(inst.num_paths, 0);
    state_.assign(links_.size(), 0);
  }

  LinkSet Solve() {
    for (int p = 0; p < inst_.num_paths; ++p) {
      if (at_path_[p].size() < 2) throw Infeasible("path without two leaving links");
      for (int v : {EcpcInstance::Front(p), EcpcInstance::Back(p)}) {
        if (at_vertex_[v].empty()) throw Infeasible("endpoint without links");
      }
    }
    best_size_ = static_cast<int>(links_.size()) + 1;
    Dfs(0);
    LinkSet out;
    for (int k : best_) out.push_back(links_[k]);
    return Normalize(out);
  }

 private:
  void Set(int k, int sign) {
    const Link& l = inst_.links[links_[k]];
    vcov_[l.u] += sign;
    vcov_[l.v] += sign;
    if (inst_.is_cross(links_[k])) {
      pcov_[EcpcInstance::PathOf(l.u)] += sign;
      pcov_[EcpcInstance::PathOf(l.v)] += sign;
    }
  }

  void Dfs(int size) {
    int uncovered = 0, deficit = 0;
    int pick_options = -1;
    std::vector<int> options;
    auto consider = [&](const std::vector<int>& pool) {
      std::vector<int> free;
      for (int k : pool) {
        if (state_[k] == 0) free.push_back(k);
      }
      if (pick_options == -1 || static_cast<int>(free.size()) < pick_options) {
        pick_options = static_cast<int>(free.size());
        options = std::move(free);
      }
    };
    for (int p = 0; p < inst_.num_paths; ++p) {
      for (int v : {EcpcInstance::Front(p), EcpcInstance::Back(p)}) {
        if (vcov_[v] == 0) {
          ++uncovered;
          consider(at_vertex_[v]);
        }
      }
      if (pcov_[p] < 2) {
        deficit += 2 - pcov_[p];
        consider(at_path_[p]);
      }
    }
    if (pick_options == -1) {
      if (size < best_size_) {
        best_size_ = size;
        best_.clear();
        for (int k = 0; k < static_cast<int>(links_.size()); ++k) {
          if (state_[k] == 1) best_.push_back(k);
        }
      }
      return;
    }
    int bound = std::max((uncovered + 1) / 2, (deficit + 1) / 2);
    if (size + bound >= best_size_) return;
    std::vector<int> excluded;
    for (int k : options) {
      state_[k] = 1;
      Set(k, 1);
      Dfs(size + 1);
      Set(k, -1);
      state_[k] = 2;
      excluded.push_back(k);
    }
    for (int k : excluded) state_[k] = 0;
  }

  const EcpcInstance& inst_;
  std::vector<int> links_;
  std::vector<std::vector<int>> at_vertex_, at_path_;
  std::vector<int> vcov_, pcov_;
  std::vector<char> state_;
  std::vector<int> best_;
  int best_size_ = 0;
};

class PackingSearch {
 public:
  PackingSearch(int universe, const std::vector<std::vector<int>>& sets)
      : sets_(sets), element_sets_(universe), blocked_(universe, 0), alive_(sets.size(), 1) {
    for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
      for (int e : sets[s]) element_sets_[e].push_back(s);
    }
  }

  std::vector<int> Solve() {
    // Empty sets are disjoint from everything.
    for (int s = 0; s < static_cast<int>(sets_.size()); ++s) {
      if (sets_[s].empty()) {
        chosen_.push_back(s);
        alive_[s] = 0;
      }
    }
    int smallest = 0;
    for (const auto& s : sets_) {
      if (!s.empty() && (smallest == 0 || static_cast<int>(s.size()) < smallest)) {
        smallest = static_cast<int>(s.size());
      }
    }
    min_size_ = std::max(1, smallest);
    best_ = chosen_;
    Dfs();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void Dfs() {
    int free_elements = 0, pick = -1, pick_count = 0;
    for (int e = 0; e < static_cast<int>(element_sets_.size()); ++e) {
      if (blocked_[e]) continue;
      int count = 0;
      for (int s : element_sets_[e]) count += alive_[s];
      if (count == 0) continue;
      ++free_elements;
      if (pick == -1 || count < pick_count) {
        pick = e;
        pick_count = count;
      }
    }
    if (pick == -1) {
      if (chosen_.size() > best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + free_elements / min_size_ <= best_.size()) return;
    std::vector<int> options;
    for (int s : element_sets_[pick]) {
      if (alive_[s]) options.push_back(s);
    }
    for (int s : options) {
      std::vector<int> killed;
      for (int e : sets_[s]) {
        blocked_[e] = 1;
        for (int t : element_sets_[e]) {
          if (alive_[t]) {
            alive_[t] = 0;
            killed.push_back(t);
          }
        }
      }
      chosen_.push_back(s);
      Dfs();
      chosen_.pop_back();
      for (int e : sets_[s]) blocked_[e] = 0;
      for (int t : killed) alive_[t] = 1;
    }
    // Leave the element uncovered.
    blocked_[pick] = 1;
    for (int s : options) alive_[s] = 0;
    Dfs();
    for (int s : options) alive_[s] = 1;
    blocked_[pick] = 0;
  }

  const std::vector<std::vector<int>>& sets_;
  std::vector<std::vector<int>> element_sets_;
  std::vector<char> blocked_;
  std::vector<char> alive_;
  std::vector<int> chosen_, best_;
  int min_size_ = 1;
};

}  // namespace

LinkSet Exact2Ecpc(const EcpcInstance& instance) {
  return CoverSearch(instance).Solve();
}

std::vector<int> ExactSetPacking(int universe_size,
                                 const std::vector<std::vector<int>>& sets) {
  std::vector<std::vector<int>> clean;
  for (const auto& s : sets) {
    std::vector<int> c = s;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (int e : c) {
      if (e < 0 || e >= universe_size) throw std::out_of_range("set element out of range");
    }
    clean.push_back(std::move(c));
  }
  return PackingSearch(universe_size, clean).Solve();
}

std::vector<Track> ExactTpp(const EcpcInstance& instance, int max_track_links) {
  auto tracks = EnumerateTracks(instance, max_track_links);
  std::vector<std::vector<int>> sets;
  for (const Track& t : tracks) sets.push_back(t.vertices);
  std::vector<Track> out;
  for (int s : ExactSetPacking(instance.num_vertices(), sets)) out.push_back(tracks[s]);
  return out;
}

}  // namespace pap
