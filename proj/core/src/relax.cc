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


#include "pap/relax.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pap {

int EcpcInstance::find_link(int a, int b) const {
  for (int id : incident[a]) {
    if (other(id, a) == b) return id;
  }
  return -1;
}

void EcpcInstance::RebuildIncidence() {
  incident.assign(num_vertices(), {});
  for (int id = 0; id < num_links(); ++id) {
    if (is_loop(id)) continue;
    incident[links[id].u].push_back(id);
    incident[links[id].v].push_back(id);
  }
}

std::vector<int> Track::links() const {
  std::vector<int> out = q;
  out.insert(out.end(), i.begin(), i.end());
  std::sort(out.begin(), out.end());
  return out;
}

EcpcInstance BuildEcpc(const PapInstance& instance) {
  EcpcInstance out;
  out.num_paths = instance.num_paths();
  out.dummy_interior.assign(out.num_paths, false);
  std::vector<int> image(instance.num_vertices());
  for (int p = 0; p < instance.num_paths(); ++p) {
    const auto& path = instance.path(p);
    if (path.size() < 2) {
      throw InvalidInstance("single-vertex path " + std::to_string(p) +
                            " has no 2ECPC image");
    }
    out.dummy_interior[p] = path.size() == 2;
    for (size_t k = 0; k < path.size(); ++k) {
      if (k == 0) {
        image[path[k]] = EcpcInstance::Front(p);
      } else if (k + 1 == path.size()) {
        image[path[k]] = EcpcInstance::Back(p);
      } else {
        image[path[k]] = EcpcInstance::Interior(p);
      }
    }
  }
  for (const Link& l : instance.links()) {
    out.links.push_back(MakeLink(image[l.u], image[l.v]));
  }
  out.num_original = out.num_links();
  out.original.resize(out.num_original);
  std::iota(out.original.begin(), out.original.end(), 0);
  out.RebuildIncidence();
  return out;
}

EcpcInstance ShadowComplete(EcpcInstance instance) {
  if (instance.shadow_complete) return instance;
  const int n = instance.num_links();
  auto add = [&](int a, int b, int origin) {
    instance.links.push_back(MakeLink(a, b));
    instance.original.push_back(origin);
  };
  for (int id = 0; id < n; ++id) {
    if (instance.is_shadow(id) || !instance.is_cross(id)) continue;
    const int a = instance.links[id].u, b = instance.links[id].v;
    const int wa = EcpcInstance::Interior(EcpcInstance::PathOf(a));
    const int wb = EcpcInstance::Interior(EcpcInstance::PathOf(b));
    const bool ea = EcpcInstance::IsEndpoint(a), eb = EcpcInstance::IsEndpoint(b);
    if (ea && eb) {
      add(a, wb, id);
      add(wa, b, id);
      add(wa, wb, id);
    } else if (ea != eb) {
      add(wa, wb, id);
    }
  }
  instance.shadow_complete = true;
  instance.RebuildIncidence();
  return instance;
}

namespace {

struct Coverage {
  std::vector<int> vertex;  // links at each vertex
  std::vector<int> path;    // cross links leaving each path

  Coverage(const EcpcInstance& inst, std::span<const int> links)
      : vertex(inst.num_vertices(), 0), path(inst.num_paths, 0) {
    for (int id : links) Add(inst, id, 1);
  }
  void Add(const EcpcInstance& inst, int id, int sign) {
    if (inst.is_loop(id)) return;
    const Link& l = inst.links[id];
    vertex[l.u] += sign;
    vertex[l.v] += sign;
    if (inst.is_cross(id)) {
      path[EcpcInstance::PathOf(l.u)] += sign;
      path[EcpcInstance::PathOf(l.v)] += sign;
    }
  }
  bool Feasible() const {
    for (size_t p = 0; p < path.size(); ++p) {
      if (path[p] < 2 || vertex[3 * p] < 1 || vertex[3 * p + 2] < 1) return false;
    }
    return true;
  }
  // Whether dropping the link keeps the solution feasible.
  bool Removable(const EcpcInstance& inst, int id) const {
    if (inst.is_loop(id)) return true;
    const Link& l = inst.links[id];
    for (int x : {l.u, l.v}) {
      if (EcpcInstance::IsEndpoint(x) && vertex[x] <= 1) return false;
    }
    if (inst.is_cross(id)) {
      for (int x : {l.u, l.v}) {
        if (path[EcpcInstance::PathOf(x)] <= 2) return false;
      }
    }
    return true;
  }
};

int CountShadows(const EcpcInstance& inst, const LinkSet& s) {
  return static_cast<int>(
      std::count_if(s.begin(), s.end(), [&](int id) { return inst.is_shadow(id); }));
}

}  // namespace

bool IsEcpcFeasible(const EcpcInstance& instance, std::span<const int> links) {
  return Coverage(instance, links).Feasible();
}

LinkSet Minimalize(const EcpcInstance& instance, LinkSet links,
                   std::span<const int> order) {
  links = Normalize(std::move(links));
  std::vector<int> scan(order.begin(), order.end());
  if (scan.empty()) scan = links;
  Coverage cov(instance, links);
  std::set<int> in(links.begin(), links.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int id : scan) {
      if (!in.count(id) || !cov.Removable(instance, id)) continue;
      in.erase(id);
      cov.Add(instance, id, -1);
      changed = true;
    }
  }
  return LinkSet(in.begin(), in.end());
}

namespace {

// Shadows first, then everything else, each by increasing id.
std::vector<int> ShadowFirstOrder(const EcpcInstance& inst, const LinkSet& s) {
  std::vector<int> order;
  for (int id : s) {
    if (inst.is_shadow(id)) order.push_back(id);
  }
  for (int id : s) {
    if (!inst.is_shadow(id)) order.push_back(id);
  }
  return order;
}

// Smallest set of non-shadow links outside `current` that restores
// feasibility, trying at most max_add additions.
std::optional<LinkSet> Repair(const EcpcInstance& inst, const LinkSet& current,
                              int max_add) {
  Coverage cov(inst, current);
  if (cov.Feasible()) return LinkSet{};
  std::set<int> in(current.begin(), current.end());
  std::set<int> pool;
  for (int p = 0; p < inst.num_paths; ++p) {
    bool deficient = cov.path[p] < 2;
    for (int x : {EcpcInstance::Front(p), EcpcInstance::Back(p)}) {
      if (cov.vertex[x] < 1) {
        for (int id : inst.incident[x]) pool.insert(id);
      }
    }
    if (deficient) {
      for (int x = 3 * p; x < 3 * p + 3; ++x) {
        for (int id : inst.incident[x]) {
          if (inst.is_cross(id)) pool.insert(id);
        }
      }
    }
  }
  std::vector<int> cand;
  for (int id : pool) {
    if (!inst.is_shadow(id) && !in.count(id)) cand.push_back(id);
  }
  std::vector<int> chosen;
  std::function<bool(size_t, int)> rec = [&](size_t start, int left) {
    if (cov.Feasible()) return true;
    if (left == 0) return false;
    for (size_t k = start; k < cand.size(); ++k) {
      cov.Add(inst, cand[k], 1);
      chosen.push_back(cand[k]);
      if (rec(k + 1, left - 1)) return true;
      chosen.pop_back();
      cov.Add(inst, cand[k], -1);
    }
    return false;
  };
  for (int k = 1; k <= max_add; ++k) {
    if (rec(0, k)) return Normalize(chosen);
  }
  return std::nullopt;
}

}  // namespace

LinkSet Deshadow(const EcpcInstance& instance, LinkSet links) {
  links = Normalize(std::move(links));
  if (!IsEcpcFeasible(instance, links)) {
    throw std::invalid_argument("deshadow input is infeasible");
  }
  links = Minimalize(instance, links, ShadowFirstOrder(instance, links));
  while (CountShadows(instance, links) > 0) {
    std::map<int, std::vector<int>> groups;  // original -> members in links
    for (int id : links) groups[instance.original[id]].push_back(id);
    bool crowded = false;
    for (const auto& [orig, members] : groups) {
      if (members.size() >= 2) crowded = true;
    }
    if (!crowded) {
      for (int& id : links) id = instance.original[id];
      links = Normalize(std::move(links));
      break;
    }
    const int before = static_cast<int>(links.size());
    const int shadows_before = CountShadows(instance, links);
    bool progressed = false;
    for (const auto& [orig, members] : groups) {
      if (members.size() < 2) continue;
      std::vector<int> shadows;
      for (int id : members) {
        if (instance.is_shadow(id)) shadows.push_back(id);
      }
      const int k = static_cast<int>(shadows.size());
      for (int mask = 1; mask < (1 << k) && !progressed; ++mask) {
        LinkSet next;
        for (int id : links) {
          bool drop = false;
          for (int b = 0; b < k; ++b) {
            if ((mask >> b & 1) && shadows[b] == id) drop = true;
          }
          if (!drop) next.push_back(id);
        }
        next.push_back(orig);
        next = Normalize(std::move(next));
        auto extra = Repair(instance, next, __builtin_popcount(mask) + 1);
        if (!extra) continue;
        next.insert(next.end(), extra->begin(), extra->end());
        next = Normalize(std::move(next));
        next = Minimalize(instance, next, ShadowFirstOrder(instance, next));
        if (static_cast<int>(next.size()) <= before &&
            CountShadows(instance, next) < shadows_before) {
          links = std::move(next);
          progressed = true;
        }
      }
      if (progressed) break;
    }
    if (!progressed) throw std::runtime_error("no shadow repair applies");
  }
  return links;
}

std::optional<Track> ValidateTrack(const EcpcInstance& inst,
                                   std::span<const int> links,
                                   std::string* reason) {
  auto fail = [&](const std::string& why) -> std::optional<Track> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  LinkSet ids(links.begin(), links.end());
  if (Normalize(ids).size() != ids.size()) return fail("repeated link");
  if (ids.empty()) return fail("empty link set");
  Track t;
  std::map<int, std::vector<int>> qadj;
  for (int id : ids) {
    if (id < 0 || id >= inst.num_links()) return fail("link id out of range");
    if (inst.is_cross(id)) {
      t.q.push_back(id);
      qadj[inst.links[id].u].push_back(id);
      qadj[inst.links[id].v].push_back(id);
    } else {
      t.i.push_back(id);
    }
  }
  if (t.q.empty()) {
    return fail(ids.size() == 1 ? "single link inside one path" : "no path links");
  }
  std::vector<int> ends;
  for (const auto& [v, inc] : qadj) {
    if (inc.size() > 2) return fail("path links branch");
    if (inc.size() == 1) ends.push_back(v);
  }
  if (ends.size() != 2) return fail("path links do not form a simple path");
  int cur = ends.front(), prev_link = -1;
  t.sequence.push_back(cur);
  std::vector<int> ordered;
  while (true) {
    int next_link = -1;
    for (int id : qadj[cur]) {
      if (id != prev_link) next_link = id;
    }
    if (next_link == -1) break;
    ordered.push_back(next_link);
    cur = inst.other(next_link, cur);
    prev_link = next_link;
    t.sequence.push_back(cur);
  }
  if (ordered.size() != t.q.size()) return fail("path links are disconnected");
  t.q = ordered;
  const int a = t.sequence.front(), b = t.sequence.back();
  if (!EcpcInstance::IsEndpoint(a) || !EcpcInstance::IsEndpoint(b)) {
    return fail("path ends are not path endpoints");
  }
  std::set<int> needed_paths;
  for (size_t k = 1; k + 1 < t.sequence.size(); ++k) {
    int z = t.sequence[k];
    if (EcpcInstance::IsEndpoint(z)) return fail("inner vertex is a path endpoint");
    needed_paths.insert(EcpcInstance::PathOf(z));
  }
  std::set<int> closed;
  for (int id : t.i) {
    const Link& l = inst.links[id];
    int p = EcpcInstance::PathOf(l.u);
    if (l.u != EcpcInstance::Front(p) || l.v != EcpcInstance::Back(p)) {
      return fail("closing link does not join the two ends of a path");
    }
    if (!needed_paths.count(p) || !closed.insert(p).second) {
      return fail("closing link without a matching inner vertex");
    }
  }
  if (closed.size() != needed_paths.size()) return fail("inner vertex not closed");
  std::vector<int> ends_star = {a, b};
  for (int p : needed_paths) {
    ends_star.push_back(EcpcInstance::Front(p));
    ends_star.push_back(EcpcInstance::Back(p));
  }
  std::vector<int> sorted = ends_star;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return fail("endpoint used twice");
  }
  std::set<int> vs(t.sequence.begin(), t.sequence.end());
  vs.insert(ends_star.begin(), ends_star.end());
  t.vertices.assign(vs.begin(), vs.end());
  std::sort(t.i.begin(), t.i.end());
  return t;
}

bool TracksDisjoint(const std::vector<Track>& tracks) {
  std::set<int> seen;
  for (const Track& t : tracks) {
    for (int v : t.vertices) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

std::vector<Track> EnumerateTracks(const EcpcInstance& inst, int max_links) {
  std::vector<Track> out;
  const int max_q = (max_links + 1) / 2;
  if (max_q < 1) return out;
  // Lowest id per vertex pair.
  std::map<std::pair<int, int>, int> lowest;
  for (int id = 0; id < inst.num_links(); ++id) {
    if (inst.is_loop(id)) continue;
    auto key = std::make_pair(inst.links[id].u, inst.links[id].v);
    if (!lowest.count(key)) lowest[key] = id;
  }
  std::vector<std::vector<std::pair<int, int>>> cross(inst.num_vertices());
  for (const auto& [key, id] : lowest) {
    if (!inst.is_cross(id)) continue;
    cross[key.first].emplace_back(key.second, id);
    cross[key.second].emplace_back(key.first, id);
  }
  for (auto& c : cross) std::sort(c.begin(), c.end());
  auto closing = [&](int p) {
    auto it = lowest.find({EcpcInstance::Front(p), EcpcInstance::Back(p)});
    return it == lowest.end() ? -1 : it->second;
  };
  std::vector<char> used(inst.num_vertices(), 0);
  std::vector<int> seq, qlinks, ilinks;
  std::function<void(int)> extend = [&](int cur) {
    for (const auto& [z, id] : cross[cur]) {
      if (used[z]) continue;
      if (EcpcInstance::IsEndpoint(z)) {
        if (seq.front() >= z) continue;
        if (qlinks.empty() && EcpcInstance::PathOf(z) == EcpcInstance::PathOf(seq.front())) {
          continue;
        }
        Track t;
        t.q = qlinks;
        t.q.push_back(id);
        t.i = ilinks;
        std::sort(t.i.begin(), t.i.end());
        t.sequence = seq;
        t.sequence.push_back(z);
        std::set<int> vs(t.sequence.begin(), t.sequence.end());
        for (int c : ilinks) {
          vs.insert(inst.links[c].u);
          vs.insert(inst.links[c].v);
        }
        t.vertices.assign(vs.begin(), vs.end());
        out.push_back(std::move(t));
        continue;
      }
      if (static_cast<int>(qlinks.size()) + 1 >= max_q) continue;
      const int p = EcpcInstance::PathOf(z);
      const int c = closing(p);
      if (c < 0) continue;
      const int f = EcpcInstance::Front(p), b = EcpcInstance::Back(p);
      if (used[f] || used[b]) continue;
      used[z] = used[f] = used[b] = 1;
      seq.push_back(z);
      qlinks.push_back(id);
      ilinks.push_back(c);
      extend(z);
      ilinks.pop_back();
      qlinks.pop_back();
      seq.pop_back();
      used[z] = used[f] = used[b] = 0;
    }
  };
  for (int a = 0; a < inst.num_vertices(); ++a) {
    if (!EcpcInstance::IsEndpoint(a)) continue;
    used[a] = 1;
    seq = {a};
    extend(a);
    used[a] = 0;
  }
  return out;
}

LinkSet TracksToCover(const EcpcInstance& inst, const std::vector<Track>& tracks) {
  if (!TracksDisjoint(tracks)) {
    throw std::invalid_argument("tracks are not vertex-disjoint");
  }
  LinkSet y;
  for (const Track& t : tracks) {
    auto l = t.links();
    y.insert(y.end(), l.begin(), l.end());
  }
  y = Normalize(std::move(y));
  Coverage cov(inst, y);
  std::vector<char> uncovered(inst.num_vertices(), 0);
  for (int v = 0; v < inst.num_vertices(); ++v) {
    uncovered[v] = EcpcInstance::IsEndpoint(v) && cov.vertex[v] == 0;
  }
  std::set<int> in(y.begin(), y.end());
  for (int a = 0; a < inst.num_vertices(); ++a) {
    if (!uncovered[a]) continue;
    int pick = -1, fallback = -1;
    for (int id : inst.incident[a]) {
      if (!inst.is_cross(id) || in.count(id)) continue;
      if (!uncovered[inst.other(id, a)]) {
        if (pick == -1 || id < pick) pick = id;
      } else if (fallback == -1 || id < fallback) {
        fallback = id;
      }
    }
    if (pick == -1) pick = fallback;
    if (pick == -1) {
      throw std::invalid_argument("endpoint " + std::to_string(a) +
                                  " has no cross-path link");
    }
    in.insert(pick);
  }
  return LinkSet(in.begin(), in.end());
}

namespace {

class TokenRun {
 public:
  TokenRun(const EcpcInstance& inst, const LinkSet& y)
      : inst_(inst),
        in_(inst.num_links(), 0),
        tokens_(inst.num_vertices(), 0),
        cov_(inst, y) {
    for (int id : y) in_[id] = 1;
  }

  int PathTokens(int p) const {
    return tokens_[3 * p] + tokens_[3 * p + 1] + tokens_[3 * p + 2];
  }

  // The live link joining the two ends of path p, or -1.
  int ClosingLink(int p) const {
    const int f = EcpcInstance::Front(p), b = EcpcInstance::Back(p);
    for (int id : inst_.incident[f]) {
      if (in_[id] && inst_.other(id, f) == b) return id;
    }
    return -1;
  }

  void Remove(int id) {
    in_[id] = 0;
    cov_.Add(inst_, id, -1);
  }

  void Insert(int id) {
    in_[id] = 1;
    cov_.Add(inst_, id, 1);
  }

  // Puts all tokens of p on its endpoints with each end holding at least one.
  void SpreadToEnds(int p) {
    int total = PathTokens(p);
    int f = EcpcInstance::Front(p), b = EcpcInstance::Back(p);
    if (tokens_[f] >= 1 && tokens_[b] >= 1) return;
    tokens_[3 * p] = tokens_[3 * p + 1] = tokens_[3 * p + 2] = 0;
    tokens_[f] = 1;
    tokens_[b] = total - 1;
  }

  bool Greedy(int u, int v) const {
    const int pv = EcpcInstance::PathOf(v);
    if (cov_.path[pv] + PathTokens(pv) < 3) return false;
    if (EcpcInstance::IsEndpoint(v) && cov_.vertex[v] + tokens_[v] < 2) return false;
    (void)u;
    return true;
  }

  bool QuasiGreedy(int u, int v) const {
    const int pu = EcpcInstance::PathOf(u), pv = EcpcInstance::PathOf(v);
    if (pu == pv) return false;
    return cov_.path[pv] == 1 && PathTokens(pv) == 1 && ClosingLink(pv) >= 0;
  }

  void Run(TrackExtraction& out) {
    StepGreedy(out);
    StepQuasiGreedy(out);
    StepClosing(out);
    for (int p = 0; p < inst_.num_paths; ++p) {
      if (PathTokens(p) >= 2) SpreadToEnds(p);
    }
    CheckProperties(out);
    StepShadows(out);
    StepCycles(out);
    Decompose(out);
    out.tokens = tokens_;
    out.total_tokens = std::accumulate(tokens_.begin(), tokens_.end(), 0);
  }

 private:
  std::string Name(int id) const {
    return std::to_string(inst_.links[id].u) + "-" + std::to_string(inst_.links[id].v);
  }

  void StepGreedy(TrackExtraction& out) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int id = 0; id < inst_.num_links(); ++id) {
        if (!in_[id] || inst_.is_loop(id)) continue;
        const Link& l = inst_.links[id];
        for (auto [u, v] : {std::pair{l.u, l.v}, std::pair{l.v, l.u}}) {
          if (!Greedy(u, v)) continue;
          Remove(id);
          ++tokens_[u];
          out.log.push_back("greedy " + Name(id) + " token " + std::to_string(u));
          changed = true;
          break;
        }
      }
    }
  }

  void StepQuasiGreedy(TrackExtraction& out) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int id = 0; id < inst_.num_links() && !changed; ++id) {
        if (!in_[id] || inst_.is_loop(id)) continue;
        const Link& l = inst_.links[id];
        for (auto [u, v] : {std::pair{l.u, l.v}, std::pair{l.v, l.u}}) {
          if (!QuasiGreedy(u, v)) continue;
          const int pv = EcpcInstance::PathOf(v);
          const int closing = ClosingLink(pv);
          Remove(id);
          ++tokens_[u];
          Remove(closing);
          tokens_[3 * pv] = tokens_[3 * pv + 1] = tokens_[3 * pv + 2] = 0;
          tokens_[EcpcInstance::Front(pv)] = 1;
          tokens_[EcpcInstance::Back(pv)] = 1;
          out.log.push_back("quasi-greedy " + Name(id) + " token " +
                            std::to_string(u) + " closing " + Name(closing));
          changed = true;
          break;
        }
      }
    }
  }

  void StepClosing(TrackExtraction& out) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int p = 0; p < inst_.num_paths; ++p) {
        int closing = ClosingLink(p);
        if (PathTokens(p) < 1 || closing < 0) continue;
        Remove(closing);
        ++tokens_[EcpcInstance::Front(p)];
        SpreadToEnds(p);
        out.log.push_back("closing " + Name(closing) + " on path " + std::to_string(p));
        changed = true;
      }
    }
  }

  void CheckProperties(TrackExtraction& out) {
    for (int p = 0; p < inst_.num_paths; ++p) {
      const int t = PathTokens(p);
      const int f = EcpcInstance::Front(p), b = EcpcInstance::Back(p);
      const std::string tag = "path " + std::to_string(p) + ": ";
      if (cov_.path[p] > 2) out.violations.push_back(tag + "more than two leaving links");
      if (t >= 2 && (cov_.vertex[f] + cov_.vertex[b] + cov_.vertex[3 * p + 1] > 0)) {
        out.violations.push_back(tag + "(i) tokens >= 2 but links remain");
      }
      if (t == 1) {
        bool ok = (cov_.vertex[f] == 1 && cov_.vertex[b] == 0) ||
                  (cov_.vertex[f] == 0 && cov_.vertex[b] == 1);
        if (!ok) out.violations.push_back(tag + "(ii) one token but ends not 1/0");
      }
      if (t == 0 && cov_.path[p] != 2) {
        out.violations.push_back(tag + "(iii) no token but not two leaving links");
      }
      if (ClosingLink(p) >= 0 && t != 0) {
        out.violations.push_back(tag + "(iv) closing link with tokens");
      }
    }
    for (int id = 0; id < inst_.num_links(); ++id) {
      if (!in_[id] || !inst_.is_cross(id)) continue;
      const Link& l = inst_.links[id];
      for (auto [u, x] : {std::pair{l.u, l.v}, std::pair{l.v, l.u}}) {
        if (!EcpcInstance::IsEndpoint(u) || EcpcInstance::IsEndpoint(x)) continue;
        int px = EcpcInstance::PathOf(x);
        if (PathTokens(px) != 0 || ClosingLink(px) < 0) {
          out.violations.push_back("link " + Name(id) +
                                   ": (v) inner end without closed path");
        }
      }
    }
  }

  void StepShadows(TrackExtraction& out) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int id = 0; id < inst_.num_links() && !changed; ++id) {
        if (!in_[id] || !inst_.is_cross(id)) continue;
        const Link& l = inst_.links[id];
        for (auto [u, x] : {std::pair{l.u, l.v}, std::pair{l.v, l.u}}) {
          if (!EcpcInstance::IsEndpoint(u)) continue;
          const int p = EcpcInstance::PathOf(u);
          if (ClosingLink(p) < 0) continue;
          const int w = EcpcInstance::Interior(p);
          int sub = -1;
          for (int cand : inst_.incident[w]) {
            if (!in_[cand] && inst_.other(cand, w) == x) {
              sub = cand;
              break;
            }
          }
          if (sub < 0) {
            out.violations.push_back("link " + Name(id) + ": no shadow to substitute");
            continue;
          }
          Remove(id);
          Insert(sub);
          out.log.push_back("shadow " + Name(id) + " -> " + Name(sub));
          changed = true;
          break;
        }
      }
    }
  }

  // Paths joined by live cross links; one entry per (path, link).
  std::vector<std::vector<int>> PathAdjacency() const {
    std::vector<std::vector<int>> adj(inst_.num_paths);
    for (int id = 0; id < inst_.num_links(); ++id) {
      if (!in_[id] || !inst_.is_cross(id)) continue;
      adj[EcpcInstance::PathOf(inst_.links[id].u)].push_back(id);
      adj[EcpcInstance::PathOf(inst_.links[id].v)].push_back(id);
    }
    return adj;
  }

  std::vector<int> PathComponent(const std::vector<std::vector<int>>& adj, int start,
                                 std::vector<char>& seen) const {
    std::vector<int> comp = {start}, stack = {start};
    seen[start] = 1;
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      for (int id : adj[p]) {
        const Link& l = inst_.links[id];
        int q = EcpcInstance::PathOf(l.u) == p ? EcpcInstance::PathOf(l.v)
                                               : EcpcInstance::PathOf(l.u);
        if (!seen[q]) {
          seen[q] = 1;
          comp.push_back(q);
          stack.push_back(q);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
  }

  void StepCycles(TrackExtraction& out) {
    auto adj = PathAdjacency();
    std::vector<char> seen(inst_.num_paths, 0);
    for (int p = 0; p < inst_.num_paths; ++p) {
      if (seen[p] || adj[p].empty()) continue;
      auto comp = PathComponent(adj, p, seen);
      bool cycle = true;
      for (int q : comp) {
        if (adj[q].size() != 2 || ClosingLink(q) < 0) cycle = false;
      }
      if (!cycle) continue;
      std::set<int> cycle_links;
      for (int q : comp) cycle_links.insert(adj[q].begin(), adj[q].end());
      for (int id : cycle_links) Remove(id);
      for (int q : comp) {
        Remove(ClosingLink(q));
        ++tokens_[EcpcInstance::Front(q)];
        ++tokens_[EcpcInstance::Back(q)];
      }
      out.log.push_back("cycle through " + std::to_string(comp.size()) + " paths removed");
    }
  }

  void Decompose(TrackExtraction& out) {
    for (int id = 0; id < inst_.num_links(); ++id) {
      if (in_[id]) out.remaining.push_back(id);
    }
    auto adj = PathAdjacency();
    std::vector<char> used(inst_.num_links(), 0);
    // Walks from endpoint s along link first, cutting tracks at endpoints.
    auto walk = [&](int s, int first) {
      Track cur;
      std::vector<int> links;
      int z = s, id = first;
      while (id >= 0 && !used[id]) {
        used[id] = 1;
        if (links.empty() && !EcpcInstance::IsEndpoint(z)) {
          out.violations.push_back("track starts at inner vertex " + std::to_string(z));
        }
        links.push_back(id);
        z = inst_.other(id, z);
        const int p = EcpcInstance::PathOf(z);
        if (!EcpcInstance::IsEndpoint(z)) {
          int closing = ClosingLink(p);
          if (closing >= 0 && !used[closing]) {
            used[closing] = 1;
            links.push_back(closing);
          }
        }
        int next = -1;
        for (int c : adj[p]) {
          if (!used[c]) next = c;
        }
        if (EcpcInstance::IsEndpoint(z)) {
          Emit(out, links);
          links.clear();
          if (next >= 0) {
            const Link& l = inst_.links[next];
            z = EcpcInstance::PathOf(l.u) == p ? l.u : l.v;
          }
        } else if (next >= 0) {
          const Link& l = inst_.links[next];
          int from = EcpcInstance::PathOf(l.u) == p ? l.u : l.v;
          if (from != z) {
            out.violations.push_back("walk leaves path " + std::to_string(p) +
                                     " from a different vertex");
            z = from;
          }
        }
        id = next;
      }
      if (!links.empty()) Emit(out, links);
    };
    for (int p = 0; p < inst_.num_paths; ++p) {
      if (adj[p].size() != 1 || used[adj[p][0]]) continue;
      const Link& l = inst_.links[adj[p][0]];
      walk(EcpcInstance::PathOf(l.u) == p ? l.u : l.v, adj[p][0]);
    }
    for (int id = 0; id < inst_.num_links(); ++id) {
      if (!in_[id] || used[id] || !inst_.is_cross(id)) continue;
      const Link& l = inst_.links[id];
      int s = EcpcInstance::IsEndpoint(l.u) ? l.u : l.v;
      walk(s, id);
    }
    for (int id : out.remaining) {
      if (!used[id]) out.violations.push_back("link " + Name(id) + " left outside tracks");
    }
    if (!TracksDisjoint(out.tracks)) out.violations.push_back("tracks overlap");
  }

  void Emit(TrackExtraction& out, const std::vector<int>& links) {
    std::string why;
    auto t = ValidateTrack(inst_, links, &why);
    if (!t) {
      out.violations.push_back("invalid track: " + why);
      return;
    }
    out.tracks.push_back(std::move(*t));
  }

  const EcpcInstance& inst_;
  std::vector<char> in_;
  std::vector<int> tokens_;
  Coverage cov_;
};

}  // namespace

TrackExtraction CoverToTracks(const EcpcInstance& instance, LinkSet links) {
  links = Normalize(std::move(links));
  Coverage cov(instance, links);
  if (!cov.Feasible()) throw std::invalid_argument("cover is infeasible");
  for (int id : links) {
    if (cov.Removable(instance, id)) {
      throw std::invalid_argument("cover is not minimal");
    }
  }
  TrackExtraction out;
  // A link from an interior vertex to an end of its own path only covers that
  // end; a cross-path link at the same end does at least as much.
  bool swapped = false;
  std::set<int> chosen(links.begin(), links.end());
  for (int& id : links) {
    const Link& l = instance.links[id];
    if (instance.is_loop(id) || instance.is_cross(id)) continue;
    if (EcpcInstance::IsEndpoint(l.u) && EcpcInstance::IsEndpoint(l.v)) continue;
    const int end = EcpcInstance::IsEndpoint(l.u) ? l.u : l.v;
    for (int other : instance.incident[end]) {
      if (!instance.is_cross(other) || chosen.count(other)) continue;
      out.log.push_back("substitute " + std::to_string(l.u) + "-" + std::to_string(l.v) +
                        " by " + std::to_string(instance.links[other].u) + "-" +
                        std::to_string(instance.links[other].v));
      chosen.erase(id);
      chosen.insert(other);
      id = other;
      swapped = true;
      break;
    }
  }
  if (swapped) links = Minimalize(instance, Normalize(std::move(links)));
  TokenRun run(instance, links);
  run.Run(out);
  if (static_cast<int>(links.size()) !=
      static_cast<int>(out.remaining.size()) + out.total_tokens) {
    out.violations.push_back("token identity broken");
  }
  return out;
}

std::string FormatTrack(const EcpcInstance& instance, const Track& track) {
  std::string s = "track q:";
  for (size_t k = 0; k < track.sequence.size(); ++k) {
    s += (k == 0 ? " " : "-") + std::to_string(track.sequence[k]);
  }
  s += " i:";
  for (int id : track.i) {
    s += " " + std::to_string(instance.links[id].u) + "-" +
         std::to_string(instance.links[id].v);
  }
  return s;
}

}  // namespace pap
