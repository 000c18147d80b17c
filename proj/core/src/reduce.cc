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


#include "pap/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pap/credits.hpp"

namespace pap {

void ReductionConfig::Validate() const {
  if (!(alpha >= 1.75)) throw std::invalid_argument("alpha must be at least 7/4");
  const double eps_max = relaxed ? 1.0 : 1.0 / 12.0 + 1e-12;
  if (!(epsilon > 0.0) || epsilon > eps_max) {
    throw std::invalid_argument("epsilon must lie in (0, 1/12]");
  }
  if (contractible_t < 1) throw std::invalid_argument("contractible_t must be positive");
  if (base_case_threshold < 0) {
    throw std::invalid_argument("base_case_threshold must be non-negative");
  }
}

LinkSet SubInstance::Lift(const LinkSet& links) const {
  LinkSet out;
  out.reserve(links.size());
  for (int id : links) out.push_back(link_origin[id]);
  return Normalize(std::move(out));
}

std::optional<SubInstance> ContractInstance(const PapInstance& instance,
                                            const std::vector<char>& keep,
                                            const std::vector<std::vector<int>>& groups) {
  const int n = instance.num_vertices();
  std::vector<int> image(n, -1);
  SubInstance out;
  int next = 0;
  for (const auto& group : groups) {
    for (int v : group) image[v] = next;
    out.vertex_origin.push_back(group.size() == 1 ? group[0] : -1);
    ++next;
  }
  for (int v = 0; v < n; ++v) {
    if (keep[v] && image[v] == -1) {
      image[v] = next++;
      out.vertex_origin.push_back(v);
    }
  }
  std::vector<std::vector<int>> adj(next);
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : instance.path_edges()) {
    if (image[a] < 0 || image[b] < 0) continue;
    const int x = image[a], y = image[b];
    if (x == y) continue;
    if (!seen.insert(std::minmax(x, y)).second) return std::nullopt;
    adj[x].push_back(y);
    adj[y].push_back(x);
    if (adj[x].size() > 2 || adj[y].size() > 2) return std::nullopt;
  }
  std::vector<std::vector<int>> paths;
  std::vector<char> visited(next, 0);
  for (int v = 0; v < next; ++v) {
    if (visited[v] || adj[v].size() > 1) continue;
    std::vector<int> path{v};
    visited[v] = 1;
    int prev = -1, cur = v;
    for (;;) {
      int step = -1;
      for (int w : adj[cur]) {
        if (w != prev) step = w;
      }
      if (step == -1 || visited[step]) break;
      visited[step] = 1;
      path.push_back(step);
      prev = cur;
      cur = step;
    }
    paths.push_back(std::move(path));
  }
  if (std::count(visited.begin(), visited.end(), 0) > 0) return std::nullopt;
  std::vector<Link> links;
  std::set<std::pair<int, int>> seen_links;
  for (int id = 0; id < instance.num_links(); ++id) {
    const Link& l = instance.link(id);
    if (image[l.u] < 0 || image[l.v] < 0) continue;
    const int x = image[l.u], y = image[l.v];
    if (x == y || !seen_links.insert(std::minmax(x, y)).second) continue;
    links.push_back(MakeLink(x, y));
    out.link_origin.push_back(id);
  }
  out.instance = PapInstance(next, std::move(paths), std::move(links), false);
  return out;
}

SubInstance EliminateIsolated(const PapInstance& instance) {
  const int n = instance.num_vertices();
  std::vector<int> twin(n, -1);
  SubInstance out;
  out.vertex_origin.resize(n);
  std::iota(out.vertex_origin.begin(), out.vertex_origin.end(), 0);
  int next = n;
  std::vector<std::vector<int>> paths;
  for (const auto& path : instance.paths()) {
    if (path.size() == 1) {
      twin[path[0]] = next++;
      out.vertex_origin.push_back(path[0]);
      paths.push_back({path[0], twin[path[0]]});
    } else {
      paths.push_back(path);
    }
  }
  std::vector<Link> links;
  for (int id = 0; id < instance.num_links(); ++id) {
    const Link& l = instance.link(id);
    for (int x : {l.u, twin[l.u]}) {
      for (int y : {l.v, twin[l.v]}) {
        if (x < 0 || y < 0) continue;
        links.push_back(MakeLink(x, y));
        out.link_origin.push_back(id);
      }
    }
  }
  out.instance = PapInstance(next, std::move(paths), std::move(links), false);
  return out;
}

namespace {

Multigraph PathBase(const PapInstance& instance) {
  Multigraph g;
  g.num_vertices = instance.num_vertices();
  int k = 0;
  for (const auto& [a, b] : instance.path_edges()) g.AddEdge(a, b, PathEdgeOrigin(k++));
  return g;
}

// min(opt, cap), or nullopt when undecided.
std::optional<int> OptCapped(const PapInstance& instance, int cap, const SearchBudget& budget) {
  if (cap <= 0) return 0;
  std::vector<std::pair<int, int>> cand;
  for (const Link& l : instance.links()) cand.emplace_back(l.u, l.v);
  auto r = MinAugmentation(PathBase(instance), cand, cap - 1, budget);
  switch (r.status) {
    case SearchStatus::kOptimal:
      return static_cast<int>(r.chosen.size());
    case SearchStatus::kAboveCap:
    case SearchStatus::kInfeasible:
      return cap;
    case SearchStatus::kBudgetExceeded:
      break;
  }
  if (r.lower_bound >= cap) return cap;
  return std::nullopt;
}

// Adjacency over path edges and links.
std::vector<std::vector<int>> FullAdjacency(const PapInstance& instance) {
  std::vector<std::vector<int>> adj(instance.num_vertices());
  for (const auto& [a, b] : instance.path_edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (const Link& l : instance.links()) {
    adj[l.u].push_back(l.v);
    adj[l.v].push_back(l.u);
  }
  return adj;
}

// Components of G - X, each sorted.
std::vector<std::vector<int>> ComponentsOutside(const std::vector<std::vector<int>>& adj,
                                                const std::vector<char>& removed) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> seen(removed);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i) {
      for (int w : adj[comp[i]]) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<char> Mask(int n, const std::vector<int>& vertices) {
  std::vector<char> m(n, 0);
  for (int v : vertices) m[v] = 1;
  return m;
}

int CountOutside(const std::vector<std::vector<int>>& adj, const std::vector<int>& x) {
  return static_cast<int>(ComponentsOutside(adj, Mask(static_cast<int>(adj.size()), x)).size());
}

// Shortest window of `sequence` whose removal disconnects G.
std::optional<std::pair<int, int>> ShortestSeparatingWindow(
    const std::vector<std::vector<int>>& adj, const std::vector<int>& sequence) {
  const int len = static_cast<int>(sequence.size());
  for (int width = 1; width <= len; ++width) {
    for (int start = 0; start + width <= len; ++start) {
      std::vector<int> x(sequence.begin() + start, sequence.begin() + start + width);
      if (CountOutside(adj, x) >= 2) return std::make_pair(start, width);
    }
  }
  return std::nullopt;
}

struct Split {
  std::vector<int> side1;
  std::vector<int> side2;
  int bound1 = 0;
  int bound2 = 0;
};

template <typename Pred>
std::optional<Split> FindSplit(const PapInstance& instance, const std::vector<int>& q,
                               const std::vector<std::vector<int>>& comps, Pred accept,
                               const SearchBudget& budget) {
  const int j = static_cast<int>(comps.size());
  if (j < 2) return std::nullopt;
  std::map<std::vector<int>, int> cache;
  auto side_of = [&](const std::vector<int>& members) {
    std::vector<int> side;
    for (int c : members) side.insert(side.end(), comps[c].begin(), comps[c].end());
    std::sort(side.begin(), side.end());
    return side;
  };
  auto bound = [&](const std::vector<int>& members) {
    auto it = cache.find(members);
    if (it != cache.end()) return it->second;
    const int b = SideBound(instance, q, side_of(members), 4, budget).value_or(0);
    cache.emplace(members, b);
    return b;
  };
  auto attempt = [&](std::vector<int> first) -> std::optional<Split> {
    std::sort(first.begin(), first.end());
    std::vector<int> second;
    for (int c = 0; c < j; ++c) {
      if (!std::binary_search(first.begin(), first.end(), c)) second.push_back(c);
    }
    if (first.empty() || second.empty()) return std::nullopt;
    const int b1 = bound(first), b2 = bound(second);
    if (!accept(b1, b2)) return std::nullopt;
    return Split{side_of(first), side_of(second), b1, b2};
  };
  std::vector<int> single(j);
  for (int c = 0; c < j; ++c) single[c] = bound({c});
  for (int c = 0; c < j; ++c) {
    if (single[c] >= 4) {
      if (auto s = attempt({c})) return s;
    }
  }
  if (j >= 8) {
    std::vector<int> order(j);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return single[a] > single[b]; });
    return attempt(std::vector<int>(order.begin(), order.end() - 4));
  }
  for (int mask = 1; mask < (1 << j) - 1; mask += 2) {
    std::vector<int> first;
    for (int c = 0; c < j; ++c) {
      if (mask >> c & 1) first.push_back(c);
    }
    if (auto s = attempt(first)) return s;
  }
  return std::nullopt;
}

std::vector<int> Sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::optional<int> RequiredInside(const PapInstance& instance, const std::vector<int>& vertices,
                                  int cap, const SearchBudget& budget) {
  const auto inside = Mask(instance.num_vertices(), vertices);
  Multigraph base = PathBase(instance);
  std::vector<std::pair<int, int>> cand;
  for (int id = 0; id < instance.num_links(); ++id) {
    const Link& l = instance.link(id);
    if (inside[l.u] && inside[l.v]) {
      cand.emplace_back(l.u, l.v);
    } else {
      base.AddEdge(l.u, l.v, id);
    }
  }
  auto r = MinAugmentation(base, cand, cap, budget);
  switch (r.status) {
    case SearchStatus::kOptimal:
      return static_cast<int>(r.chosen.size());
    case SearchStatus::kAboveCap:
      return cap + 1;
    case SearchStatus::kInfeasible:
      return std::nullopt;
    case SearchStatus::kBudgetExceeded:
      break;
  }
  if (r.lower_bound > cap) return cap + 1;
  return std::nullopt;
}

namespace {

class ContractibleSearch {
 public:
  ContractibleSearch(const PapInstance& instance, const ReductionConfig& config)
      : inst_(instance), config_(config), adj_(instance.num_links()) {
    std::vector<std::vector<int>> on_path(instance.num_paths());
    for (int id = 0; id < instance.num_links(); ++id) {
      const Link& l = instance.link(id);
      on_path[instance.path_of(l.u)].push_back(id);
      if (instance.path_of(l.v) != instance.path_of(l.u)) {
        on_path[instance.path_of(l.v)].push_back(id);
      }
    }
    for (int id = 0; id < instance.num_links(); ++id) {
      const Link& l = instance.link(id);
      auto& a = adj_[id];
      for (int p : {instance.path_of(l.u), instance.path_of(l.v)}) {
        for (int x : on_path[p]) {
          if (x != id) a.push_back(x);
        }
      }
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    covered_.assign(instance.num_links(), 0);
    touches_.assign(instance.num_paths(), 0);
  }

  std::optional<ContractibleSubgraph> Run() {
    for (int size = 1; size <= config_.contractible_t; ++size) {
      target_ = size;
      for (int root = 0; root < inst_.num_links() && !found_; ++root) {
        std::vector<int> sub;
        Add(root, sub);
        std::vector<int> ext;
        for (int x : adj_[root]) {
          if (x > root) ext.push_back(x);
        }
        Extend(sub, ext, root);
        Remove(root, sub);
      }
      if (found_) return found_;
    }
    return std::nullopt;
  }

 private:
  void Add(int id, std::vector<int>& sub) {
    sub.push_back(id);
    ++covered_[id];
    for (int x : adj_[id]) ++covered_[x];
    const Link& l = inst_.link(id);
    for (int v : {l.u, l.v}) {
      const int t = ++touches_[inst_.path_of(v)];
      single_ += t == 1 ? 1 : t == 2 ? -1 : 0;
    }
  }

  void Remove(int id, std::vector<int>& sub) {
    sub.pop_back();
    --covered_[id];
    for (int x : adj_[id]) --covered_[x];
    const Link& l = inst_.link(id);
    for (int v : {l.u, l.v}) {
      const int t = --touches_[inst_.path_of(v)];
      single_ += t == 0 ? -1 : t == 1 ? 1 : 0;
    }
  }

  void Extend(std::vector<int>& sub, std::vector<int> ext, int root) {
    if (found_) return;
    // Every touched path needs two link ends; each further link brings two.
    if (single_ > 2 * (target_ - static_cast<int>(sub.size()))) return;
    if (static_cast<int>(sub.size()) == target_) {
      Evaluate(sub);
      return;
    }
    if (static_cast<int>(sub.size()) + 1 == target_) {
      for (int w : ext) {
        if (found_) return;
        const Link& l = inst_.link(w);
        const int a = inst_.path_of(l.u), b = inst_.path_of(l.v);
        int single = single_;
        if (a == b) {
          single -= touches_[a] == 1 ? 1 : 0;
        } else {
          single += touches_[a] == 0 ? 1 : touches_[a] == 1 ? -1 : 0;
          single += touches_[b] == 0 ? 1 : touches_[b] == 1 ? -1 : 0;
        }
        if (single != 0) continue;
        sub.push_back(w);
        Evaluate(sub);
        sub.pop_back();
      }
      return;
    }
    while (!ext.empty() && !found_) {
      const int w = ext.back();
      ext.pop_back();
      std::vector<int> next = ext;
      for (int x : adj_[w]) {
        if (x > root && covered_[x] == 0) next.push_back(x);
      }
      Add(w, sub);
      Extend(sub, std::move(next), root);
      Remove(w, sub);
    }
  }

  void Evaluate(const std::vector<int>& sub) {
    std::map<int, std::pair<int, int>> span;  // path -> [lo, hi] positions
    std::map<int, int> touches;
    for (int id : sub) {
      const Link& l = inst_.link(id);
      for (int v : {l.u, l.v}) {
        const int p = inst_.path_of(v), pos = inst_.position(v);
        auto [it, fresh] = span.emplace(p, std::make_pair(pos, pos));
        if (!fresh) {
          it->second.first = std::min(it->second.first, pos);
          it->second.second = std::max(it->second.second, pos);
        }
        ++touches[p];
      }
    }
    for (const auto& [p, k] : touches) {
      if (k < 2) return;
    }
    int tails = 0;
    std::vector<int> vertices;
    for (const auto& [p, range] : span) {
      const auto& path = inst_.path(p);
      if (range.first > 0) ++tails;
      if (range.second + 1 < static_cast<int>(path.size())) ++tails;
      for (int i = range.first; i <= range.second; ++i) vertices.push_back(path[i]);
    }
    if (tails > 2) return;
    std::sort(vertices.begin(), vertices.end());
    if (!seen_.insert(vertices).second) return;
    // G_{L'}: spans plus the chosen links, on local ids.
    std::map<int, int> local;
    for (int v : vertices) local.emplace(v, static_cast<int>(local.size()));
    Multigraph h;
    h.num_vertices = static_cast<int>(vertices.size());
    for (const auto& [p, range] : span) {
      const auto& path = inst_.path(p);
      for (int i = range.first; i < range.second; ++i) {
        h.AddEdge(local[path[i]], local[path[i + 1]]);
      }
    }
    for (int id : sub) h.AddEdge(local[inst_.link(id).u], local[inst_.link(id).v], id);
    if (!IsTwoEdgeConnected(h)) return;
    const int need =
        static_cast<int>(std::ceil(static_cast<double>(sub.size()) / config_.alpha - 1e-9));
    auto got = RequiredInside(inst_, vertices, need - 1, config_.budget);
    if (!got || *got < need) return;
    ContractibleSubgraph out;
    out.vertices = std::move(vertices);
    out.links = Normalize(sub);
    out.required = *got;
    found_ = std::move(out);
  }

  const PapInstance& inst_;
  const ReductionConfig& config_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> covered_;
  std::vector<int> touches_;  // per path, link ends in the current subset
  int single_ = 0;            // paths touched exactly once
  std::set<std::vector<int>> seen_;
  int target_ = 1;
  std::optional<ContractibleSubgraph> found_;
};

}  // namespace

std::optional<ContractibleSubgraph> FindContractible(const PapInstance& instance,
                                                     const ReductionConfig& config) {
  if (instance.num_vertices() <= 1) return std::nullopt;
  return ContractibleSearch(instance, config).Run();
}

const char* ToString(SeparatorKind kind) {
  switch (kind) {
    case SeparatorKind::kPath:
      return "path";
    case SeparatorKind::kP2:
      return "P2";
    case SeparatorKind::kC2:
      return "C2";
  }
  return "?";
}

std::optional<int> SideBound(const PapInstance& instance, const std::vector<int>& q,
                             const std::vector<int>& side, int cap,
                             const SearchBudget& budget) {
  std::vector<char> keep = Mask(instance.num_vertices(), side);
  for (int v : q) keep[v] = 1;
  auto sub = ContractInstance(instance, keep, {q});
  if (!sub) return std::nullopt;
  return OptCapped(sub->instance, cap, budget);
}

bool IsSeparator(const PapInstance& instance, const std::vector<int>& vertices) {
  return CountOutside(FullAdjacency(instance), vertices) >= 2;
}

std::optional<SeparatorReport> FindPathSeparator(const PapInstance& instance,
                                                 const ReductionConfig& config) {
  const auto adj = FullAdjacency(instance);
  const int n = instance.num_vertices();
  auto accept = [](int b1, int b2) { return std::min(b1, b2) >= 3; };
  for (int p = 0; p < instance.num_paths(); ++p) {
    const auto& path = instance.path(p);
    if (CountOutside(adj, path) < 2) continue;
    auto window = ShortestSeparatingWindow(adj, path);
    std::vector<std::vector<int>> candidates;
    candidates.emplace_back(path.begin() + window->first,
                            path.begin() + window->first + window->second);
    if (window->second < static_cast<int>(path.size())) candidates.push_back(path);
    for (const auto& q : candidates) {
      auto comps = ComponentsOutside(adj, Mask(n, q));
      auto split = FindSplit(instance, Sorted(q), comps, accept, config.budget);
      if (!split) continue;
      SeparatorReport r;
      r.kind = SeparatorKind::kPath;
      r.q = q;
      r.paths = {p};
      r.side1 = std::move(split->side1);
      r.side2 = std::move(split->side2);
      r.bound1 = split->bound1;
      r.bound2 = split->bound2;
      r.path_edge_leaves = static_cast<int>(q.size()) < static_cast<int>(path.size());
      return r;
    }
  }
  return std::nullopt;
}

std::optional<SeparatorReport> FindP2Separator(const PapInstance& instance,
                                               const ReductionConfig& config) {
  const auto adj = FullAdjacency(instance);
  const int n = instance.num_vertices();
  std::set<std::pair<int, int>> tried;
  for (int id = 0; id < instance.num_links(); ++id) {
    const Link& l = instance.link(id);
    const int p1 = instance.path_of(l.u), p2 = instance.path_of(l.v);
    if (p1 == p2 || !instance.is_endpoint(l.u) || !instance.is_endpoint(l.v)) continue;
    if (!tried.insert({l.u, l.v}).second) continue;
    // P1 ends at u, P2 starts at v.
    std::vector<int> seq = instance.path(p1);
    if (seq.back() != l.u) std::reverse(seq.begin(), seq.end());
    const int join = static_cast<int>(seq.size());
    std::vector<int> second = instance.path(p2);
    if (second.front() != l.v) std::reverse(second.begin(), second.end());
    seq.insert(seq.end(), second.begin(), second.end());
    if (CountOutside(adj, seq) < 2) continue;
    auto window = ShortestSeparatingWindow(adj, seq);
    const int start = window->first, width = window->second;
    std::vector<int> q(seq.begin() + start, seq.begin() + start + width);
    // A path edge leaves Q unless Q's neighbours along the sequence are
    // absent or reached through the joining link.
    const bool left = start > 0 && start != join;
    const bool right = start + width < static_cast<int>(seq.size()) && start + width != join;
    const bool leaves = left || right;
    auto accept = [leaves](int b1, int b2) {
      const int lo = std::min(b1, b2), hi = std::max(b1, b2);
      return lo >= 4 || (hi >= 4 && lo >= 3 && leaves);
    };
    auto comps = ComponentsOutside(adj, Mask(n, q));
    auto split = FindSplit(instance, Sorted(q), comps, accept, config.budget);
    if (!split) continue;
    SeparatorReport r;
    r.kind = SeparatorKind::kP2;
    r.q = q;
    r.paths = {p1, p2};
    if (start < join && start + width > join) r.links = {id};
    r.side1 = std::move(split->side1);
    r.side2 = std::move(split->side2);
    r.bound1 = split->bound1;
    r.bound2 = split->bound2;
    r.path_edge_leaves = leaves;
    return r;
  }
  return std::nullopt;
}

std::optional<SeparatorReport> FindC2Separator(const PapInstance& instance,
                                               const ReductionConfig& config) {
  const auto adj = FullAdjacency(instance);
  const int n = instance.num_vertices();
  auto accept = [](int b1, int b2) { return std::min(b1, b2) >= 3; };
  for (int p1 = 0; p1 < instance.num_paths(); ++p1) {
    for (int p2 = p1 + 1; p2 < instance.num_paths(); ++p2) {
      const int a = instance.front(p1), b = instance.back(p1);
      const int c = instance.front(p2), d = instance.back(p2);
      if (a == b || c == d) continue;
      std::optional<int> e1, e2;
      bool crossed = false;
      if (auto x = instance.find_link(b, c); x && instance.find_link(d, a)) {
        e1 = x;
        e2 = instance.find_link(d, a);
      } else if (auto y = instance.find_link(b, d); y && instance.find_link(c, a)) {
        e1 = y;
        e2 = instance.find_link(c, a);
        crossed = true;
      } else {
        continue;
      }
      std::vector<int> q = instance.path(p1);
      std::vector<int> second = instance.path(p2);
      if (crossed) std::reverse(second.begin(), second.end());
      q.insert(q.end(), second.begin(), second.end());
      auto comps = ComponentsOutside(adj, Mask(n, q));
      if (comps.size() < 2) continue;
      auto split = FindSplit(instance, Sorted(q), comps, accept, config.budget);
      if (!split) continue;
      SeparatorReport r;
      r.kind = SeparatorKind::kC2;
      r.q = q;
      r.paths = {p1, p2};
      r.links = Normalize({*e1, *e2});
      r.side1 = std::move(split->side1);
      r.side2 = std::move(split->side2);
      r.bound1 = split->bound1;
      r.bound2 = split->bound2;
      return r;
    }
  }
  return std::nullopt;
}

std::optional<SeparatorReport> FindSeparator(const PapInstance& instance,
                                             const ReductionConfig& config) {
  if (auto r = FindPathSeparator(instance, config)) return r;
  if (auto r = FindP2Separator(instance, config)) return r;
  return FindC2Separator(instance, config);
}

std::vector<DegeneratePair> SelectDegenerate(const PapInstance& instance) {
  std::vector<DegeneratePair> out;
  std::vector<char> used(instance.num_paths(), 0);
  for (int p : FindDegeneratePaths(instance)) {
    const int q = DegeneratePartner(instance, p);
    if (used[p] || used[q]) continue;
    used[p] = used[q] = 1;
    out.push_back({p, q});
  }
  return out;
}

LinkSet HandleContractible(const PapInstance& instance, const ContractibleSubgraph& h,
                           const SubSolver& recurse) {
  std::vector<char> keep(instance.num_vertices(), 1);
  auto sub = ContractInstance(instance, keep, {h.vertices});
  if (!sub) throw std::logic_error("contractible subgraph does not contract to a PAP instance");
  LinkSet out = sub->Lift(recurse(sub->instance));
  out.insert(out.end(), h.links.begin(), h.links.end());
  return Normalize(std::move(out));
}

LinkSet HandleSeparator(const PapInstance& instance, const SeparatorReport& report,
                        const SubSolver& recurse, const SearchBudget& budget) {
  const std::vector<int> q = Sorted(report.q);
  LinkSet out = report.links;
  for (const auto* side : {&report.side1, &report.side2}) {
    std::vector<char> keep = Mask(instance.num_vertices(), *side);
    for (int v : q) keep[v] = 1;
    auto sub = ContractInstance(instance, keep, {q});
    if (!sub) throw std::logic_error("separator side does not contract to a PAP instance");
    LinkSet part = sub->Lift(recurse(sub->instance));
    out.insert(out.end(), part.begin(), part.end());
  }
  return CompleteToFeasible(instance, std::move(out), budget);
}

DegenerateOutcome HandleDegenerate(const PapInstance& instance,
                                   const std::vector<DegeneratePair>& pairs,
                                   const SubSolver& recurse) {
  const int ell = static_cast<int>(pairs.size());
  std::vector<char> keep(instance.num_vertices(), 1);
  std::vector<std::vector<int>> closed_groups, merged_groups;
  LinkSet closing, joining;
  for (const auto& [p, q] : pairs) {
    const auto& path = instance.path(p);
    closed_groups.push_back(path);
    std::vector<int> merged = path;
    merged.insert(merged.end(), instance.path(q).begin(), instance.path(q).end());
    merged_groups.push_back(Sorted(merged));
    closing.push_back(*instance.find_link(path.front(), path.back()));
    const int c = instance.front(q), d = instance.back(q);
    if (instance.find_link(path.front(), c) && instance.find_link(path.back(), d)) {
      joining.push_back(*instance.find_link(path.front(), c));
      joining.push_back(*instance.find_link(path.back(), d));
    } else {
      joining.push_back(*instance.find_link(path.front(), d));
      joining.push_back(*instance.find_link(path.back(), c));
    }
  }
  auto closed_sub = ContractInstance(instance, keep, closed_groups);
  auto merged_sub = ContractInstance(instance, keep, merged_groups);
  if (!closed_sub || !merged_sub) {
    throw std::logic_error("degenerate paths do not contract to a PAP instance");
  }
  LinkSet h1 = closed_sub->Lift(recurse(closed_sub->instance));
  LinkSet h2 = merged_sub->Lift(recurse(merged_sub->instance));
  DegenerateOutcome out;
  out.closed_size = static_cast<int>(h1.size()) + ell;
  out.merged_size = static_cast<int>(h2.size()) + 2 * ell;
  out.closed_arm = out.closed_size <= out.merged_size;
  if (out.closed_arm) {
    h1.insert(h1.end(), closing.begin(), closing.end());
    out.links = Normalize(std::move(h1));
  } else {
    h2.insert(h2.end(), joining.begin(), joining.end());
    out.links = Normalize(std::move(h2));
  }
  return out;
}

bool StructureReport::structured() const {
  return std::all_of(std::begin(pass), std::end(pass), [](bool b) { return b; });
}

StructureReport CheckStructure(const PapInstance& instance, const ReductionConfig& config) {
  StructureReport r;
  const int cap = config.base_case_threshold + 1;
  auto opt = OptCapped(instance, cap, config.budget);
  if (opt && *opt < cap) {
    r.pass[0] = false;
    r.notes.push_back("P0: opt = " + std::to_string(*opt));
  }
  if (auto h = FindContractible(instance, config)) {
    r.pass[1] = false;
    r.notes.push_back("P1: contractible subgraph with " + std::to_string(h->links.size()) +
                      " links");
  }
  for (int p = 0; p < instance.num_paths(); ++p) {
    for (int end : {instance.front(p), instance.back(p)}) {
      bool other = false;
      for (int x : instance.link_neighbors(end)) other = other || instance.path_of(x) != p;
      if (!other) {
        r.pass[2] = false;
        r.notes.push_back("P2: endpoint " + std::to_string(end) + " sees only its path");
      }
    }
  }
  if (FindPathSeparator(instance, config)) {
    r.pass[3] = false;
    r.notes.push_back("P3: path separator");
  }
  if (FindP2Separator(instance, config)) {
    r.pass[4] = false;
    r.notes.push_back("P4: P2 separator");
  }
  if (FindC2Separator(instance, config)) {
    r.pass[5] = false;
    r.notes.push_back("P5: C2 separator");
  }
  const auto degenerate = FindDegeneratePaths(instance);
  if (static_cast<double>(degenerate.size()) > config.epsilon * instance.num_paths()) {
    r.pass[6] = false;
    r.notes.push_back("P6: " + std::to_string(degenerate.size()) + " degenerate paths");
  }
  for (const auto& path : instance.paths()) {
    if (path.size() == 1) {
      r.pass[7] = false;
      r.notes.push_back("P7: single-vertex path " + std::to_string(path[0]));
    }
  }
  return r;
}

namespace {

void FormatInto(const TraceNode& node, int depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << node.step << " n=" << node.num_vertices
      << " paths=" << node.num_paths << " links=" << node.num_links
      << " |S|=" << node.solution_size;
  if (!node.detail.empty()) out << " " << node.detail;
  out << "\n";
  for (const auto& child : node.children) FormatInto(child, depth + 1, out);
}

class Reducer {
 public:
  Reducer(const ReductionConfig& config, const SubSolver& structured)
      : config_(config), structured_(structured) {}

  LinkSet Solve(const PapInstance& instance, int depth, TraceNode& node) {
    node.num_vertices = instance.num_vertices();
    node.num_paths = instance.num_paths();
    node.num_links = instance.num_links();
    if (depth > config_.max_depth) {
      node.step = "DepthLimit";
      throw ReductionError("reduction depth limit exceeded", node);
    }
    SubSolver recurse = [&](const PapInstance& sub) {
      node.children.emplace_back();
      // The vector may reallocate while the child recurses, so work on a
      // local node and move it in afterwards.
      TraceNode child;
      LinkSet s = Solve(sub, depth + 1, child);
      node.children.back() = std::move(child);
      return s;
    };
    LinkSet out = Step(instance, node, recurse);
    if (!VerifySolution(instance, out)) {
      int added = 0;
      out = CompleteToFeasible(instance, out, config_.budget, &added);
      node.detail += " repaired=" + std::to_string(added);
    }
    node.solution_size = static_cast<int>(out.size());
    return out;
  }

 private:
  LinkSet Step(const PapInstance& instance, TraceNode& node, const SubSolver& recurse) {
    if (instance.num_vertices() <= 1) {
      node.step = "Trivial";
      return {};
    }
    if (std::any_of(instance.paths().begin(), instance.paths().end(),
                    [](const auto& p) { return p.size() == 1; })) {
      node.step = "IsolatedExpand";
      auto sub = EliminateIsolated(instance);
      LinkSet out = sub.Lift(recurse(sub.instance));
      // Two copies of one link collapse when lifted; a single crossing link
      // replaces the lost copy.
      if (!VerifySolution(instance, out)) {
        int added = 0;
        out = CompleteToFeasible(instance, out, config_.budget, &added);
        node.detail = "restored=" + std::to_string(added);
      }
      return out;
    }
    {
      std::vector<std::pair<int, int>> cand;
      for (const Link& l : instance.links()) cand.emplace_back(l.u, l.v);
      auto r = MinAugmentation(PathBase(instance), cand, config_.base_case_threshold,
                               config_.budget);
      if (r.status == SearchStatus::kInfeasible) {
        throw Infeasible("instance has no feasible solution");
      }
      if (r.status == SearchStatus::kOptimal) {
        node.step = "BaseCaseExact";
        LinkSet out;
        for (int i : r.chosen) out.push_back(i);
        return Normalize(std::move(out));
      }
    }
    if (auto h = FindContractible(instance, config_)) {
      node.step = "ContractibleContract";
      node.detail = "links=" + std::to_string(h->links.size()) +
                    " vertices=" + std::to_string(h->vertices.size()) +
                    " required=" + std::to_string(h->required);
      return HandleContractible(instance, *h, recurse);
    }
    if (auto s = FindSeparator(instance, config_)) {
      switch (s->kind) {
        case SeparatorKind::kPath:
          node.step = "PathSeparatorSplit";
          break;
        case SeparatorKind::kP2:
          node.step = "P2SeparatorSplit";
          break;
        case SeparatorKind::kC2:
          node.step = "C2SeparatorSplit";
          break;
      }
      node.detail = "q=" + std::to_string(s->q.size()) + " sides=" +
                    std::to_string(s->side1.size()) + "/" + std::to_string(s->side2.size()) +
                    " bounds=" + std::to_string(s->bound1) + "/" + std::to_string(s->bound2);
      return HandleSeparator(instance, *s, recurse, config_.budget);
    }
    auto pairs = SelectDegenerate(instance);
    if (!pairs.empty() &&
        static_cast<double>(pairs.size()) >= config_.epsilon * instance.num_paths()) {
      node.step = "DegenerateResolve";
      auto outcome = HandleDegenerate(instance, pairs, recurse);
      node.detail = "paths=" + std::to_string(pairs.size()) +
                    " closed=" + std::to_string(outcome.closed_size) +
                    " merged=" + std::to_string(outcome.merged_size);
      return outcome.links;
    }
    node.step = "Structured";
    return structured_(instance);
  }

  const ReductionConfig& config_;
  const SubSolver& structured_;
};

}  // namespace

std::string FormatTrace(const TraceNode& node) {
  std::ostringstream out;
  FormatInto(node, 0, out);
  return out.str();
}

ReduceResult Reduce(const PapInstance& instance, const ReductionConfig& config,
                    const SubSolver& structured_solver) {
  config.Validate();
  if (!IsTwoEdgeConnected(FullGraph(instance))) {
    throw Infeasible("instance has no feasible solution");
  }
  ReduceResult result;
  Reducer reducer(config, structured_solver);
  result.links = reducer.Solve(instance, 0, result.trace);
  return result;
}

}  // namespace pap
