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


#include "pap/credits.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace pap {

const char* ToString(CreditRule rule) {
  switch (rule) {
    case CreditRule::kLonelyLeaf: return "lonely-leaf";
    case CreditRule::kExpensiveLeaf: return "expensive-leaf";
    case CreditRule::kNearSimpleBlock: return "near-simple-block";
    case CreditRule::kBridgeLink: return "bridge-link";
    case CreditRule::kComplexComponent: return "complex-component";
    case CreditRule::kNonSimpleBlock: return "non-simple-block";
    case CreditRule::kLargeComponent: return "large-component";
    case CreditRule::kSmallComponent: return "small-component";
  }
  return "?";
}

int CreditLedger::Sum(CreditRule rule) const {
  int s = 0;
  for (const auto& e : entries) {
    if (e.rule == rule) s += e.quarters;
  }
  return s;
}

bool IsExpensiveToward(const PapInstance& instance, int link, int u) {
  const Link& l = instance.link(link);
  if (l.u != u && l.v != u) return false;
  const int u2 = instance.link_other(link, u);
  if (!instance.is_endpoint(u) || !instance.is_endpoint(u2)) return false;
  const int p = instance.path_of(u);
  const int p2 = instance.path_of(u2);
  if (p == p2) return false;
  const int v = instance.other_endpoint(u);
  const int v2 = instance.other_endpoint(u2);
  for (int x : instance.neighbors(v)) {
    if (x == v2) return false;
    const int q = instance.path_of(x);
    if (q != p && q != p2) return false;
  }
  return true;
}

bool IsExpensiveLink(const PapInstance& instance, int link) {
  const Link& l = instance.link(link);
  return IsExpensiveToward(instance, link, l.u) ||
         IsExpensiveToward(instance, link, l.v);
}

int DegeneratePartner(const PapInstance& instance, int p) {
  const auto& path = instance.path(p);
  if (path.size() < 2) return -1;
  const int a = path.front();
  const int b = path.back();
  if (!instance.find_link(a, b)) return -1;
  int partner = -1;
  for (int end : {a, b}) {
    for (int x : instance.neighbors(end)) {
      const int q = instance.path_of(x);
      if (q == p) continue;
      if (partner == -1) {
        partner = q;
      } else if (partner != q) {
        return -1;
      }
    }
  }
  if (partner == -1) return -1;
  const int c = instance.front(partner);
  const int d = instance.back(partner);
  const bool straight = instance.find_link(a, c) && instance.find_link(b, d);
  const bool crossed = instance.find_link(a, d) && instance.find_link(b, c);
  return straight || crossed ? partner : -1;
}

std::vector<int> FindDegeneratePaths(const PapInstance& instance) {
  std::vector<int> out;
  for (int p = 0; p < instance.num_paths(); ++p) {
    if (DegeneratePartner(instance, p) >= 0) out.push_back(p);
  }
  return out;
}

bool IsDegenerateWithin(const PapInstance& instance, int p,
                        const std::vector<int>& partners) {
  const int q = DegeneratePartner(instance, p);
  return q >= 0 && std::find(partners.begin(), partners.end(), q) != partners.end();
}

WorkingSolution::WorkingSolution(const PapInstance& instance, LinkSet links)
    : instance_(&instance), links_(Normalize(std::move(links))) {
  degenerate_.assign(instance.num_paths(), 0);
  for (int p : FindDegeneratePaths(instance)) degenerate_[p] = 1;
  Refresh();
}

void WorkingSolution::Replace(LinkSet links) {
  links_ = Normalize(std::move(links));
  Refresh();
}

void WorkingSolution::Refresh() {
  graph_ = UnionGraph(*instance_, links_);
  blocks_ = DecomposeBlocks(graph_, *instance_);
  adjacency_ = graph_.Adjacency();
  ledger_ = ComputeLedger();
}

bool WorkingSolution::IsLonelyLeaf(int v) const {
  return blocks_.lonely[v] && Degree(v) == 1 &&
         blocks_.components[blocks_.component_of[v]].complex;
}

bool WorkingSolution::IsExpensiveLeaf(int v) const {
  if (!IsLonelyLeaf(v) || !instance_->is_endpoint(v)) return false;
  const int u = instance_->other_endpoint(v);
  if (u == v) return false;
  for (auto [w, e] : adjacency_[u]) {
    const int origin = graph_.edges[e].origin;
    if (!IsLinkOrigin(origin) || !blocks_.IsBridge(e)) continue;
    if (IsExpensiveToward(*instance_, origin, u)) return true;
  }
  return false;
}

CreditLedger WorkingSolution::ComputeLedger() const {
  CreditLedger ledger;
  ledger.num_links = static_cast<int>(links_.size());
  auto add = [&](CreditRule rule, int subject, int quarters) {
    ledger.entries.push_back({rule, subject, quarters});
    ledger.total_quarters += quarters;
  };
  const int n = instance_->num_vertices();
  for (int v = 0; v < n; ++v) {
    if (!IsLonelyLeaf(v)) continue;
    add(CreditRule::kLonelyLeaf, v, 4);
    if (IsExpensiveLeaf(v)) add(CreditRule::kExpensiveLeaf, v, 1);
    std::vector<char> seen(n, 0);
    std::deque<int> queue{v};
    seen[v] = 1;
    bool reached = false;
    while (!queue.empty() && !reached) {
      const int x = queue.front();
      queue.pop_front();
      for (auto [y, e] : adjacency_[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        const int b = blocks_.block_of[y];
        if (b >= 0) {
          if (blocks_.blocks[b].cls == BlockClass::kSimple) reached = true;
          continue;
        }
        queue.push_back(y);
      }
    }
    if (reached) add(CreditRule::kNearSimpleBlock, v, 1);
  }
  for (int e : blocks_.bridges) {
    const int origin = graph_.edges[e].origin;
    if (IsLinkOrigin(origin)) add(CreditRule::kBridgeLink, origin, 3);
  }
  for (int c = 0; c < num_components(); ++c) {
    const Component& comp = blocks_.components[c];
    if (comp.complex) {
      add(CreditRule::kComplexComponent, c, 4);
    } else if (comp.two_edge_connected) {
      const BlockClass cls = ClassifyVertexSet(comp.vertices, *instance_);
      bool degenerate = false;
      if (cls == BlockClass::kSmall) {
        std::set<int> paths;
        for (int v : comp.vertices) paths.insert(instance_->path_of(v));
        const std::vector<int> inside(paths.begin(), paths.end());
        for (int p : inside) {
          if (degenerate_[p] && IsDegenerateWithin(*instance_, p, inside)) {
            degenerate = true;
          }
        }
      }
      if (cls == BlockClass::kSmall && !degenerate) {
        add(CreditRule::kSmallComponent, c, 6);
      } else {
        add(CreditRule::kLargeComponent, c, 8);
      }
    }
  }
  for (int b = 0; b < static_cast<int>(blocks_.blocks.size()); ++b) {
    const Block& block = blocks_.blocks[b];
    if (block.cls == BlockClass::kSimple) continue;
    if (!blocks_.components[block.component].complex) continue;
    add(CreditRule::kNonSimpleBlock, b, 4);
  }
  return ledger;
}

InvariantReport CheckInvariants(const WorkingSolution& h,
                                std::optional<int> prev_cost_quarters,
                                std::optional<int> opt) {
  InvariantReport report;
  const auto& d = h.blocks();
  const auto& inst = h.instance();
  const auto& graph = h.graph();
  auto fail = [&](bool InvariantReport::*flag, std::string message) {
    report.*flag = false;
    report.failures.push_back(std::move(message));
  };
  const int cost = h.cost_quarters();
  if (prev_cost_quarters && cost > *prev_cost_quarters) {
    fail(&InvariantReport::cost_ok, "cost rose from " + std::to_string(*prev_cost_quarters) +
                                        "/4 to " + std::to_string(cost) + "/4");
  }
  if (opt && cost > std::floor(4 * 1.9412 * *opt + 1e-9)) {
    fail(&InvariantReport::cost_ok, "cost " + std::to_string(cost) + "/4 above bound for opt " +
                                        std::to_string(*opt));
  }
  for (int v = 0; v < inst.num_vertices(); ++v) {
    if (d.lonely[v] && h.Degree(v) > 2) {
      fail(&InvariantReport::lonely_ok,
           "lonely vertex " + std::to_string(v) + " has degree " + std::to_string(h.Degree(v)));
    }
  }
  std::vector<int> incident_bridges(d.blocks.size(), 0);
  for (int e : d.bridges) {
    const int bu = d.block_of[graph.edges[e].u];
    const int bv = d.block_of[graph.edges[e].v];
    if (bu >= 0) ++incident_bridges[bu];
    if (bv >= 0) ++incident_bridges[bv];
    if (bu >= 0 && bv >= 0 && d.blocks[bu].cls == BlockClass::kSimple &&
        d.blocks[bv].cls == BlockClass::kSimple) {
      fail(&InvariantReport::lonely_ok, "bridge " + std::to_string(e) + " joins two simple blocks");
    }
  }
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
    const Block& block = d.blocks[b];
    if (block.cls == BlockClass::kSimple) {
      if (!d.components[block.component].complex || incident_bridges[b] != 2) {
        fail(&InvariantReport::lonely_ok,
             "simple block " + std::to_string(b) + " has " + std::to_string(incident_bridges[b]) +
                 " bridges");
      }
      continue;
    }
    std::vector<int> count(inst.num_paths(), 0);
    for (int v : block.vertices) ++count[inst.path_of(v)];
    int full = 0;
    for (int p = 0; p < inst.num_paths(); ++p) {
      if (count[p] == static_cast<int>(inst.path(p).size())) ++full;
    }
    if (full < 2) {
      fail(&InvariantReport::blocks_ok,
           "non-simple block " + std::to_string(b) + " holds " + std::to_string(full) + " full paths");
    }
  }
  return report;
}

}  // namespace pap
