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


#include "pap/bridge.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace pap {

bool ContractedView::InC(int node) const {
  return node >= 0 && nodes[node].kind != NodeKind::kOtherComponent;
}

ContractedView BuildContractedView(const WorkingSolution& h, int component) {
  const auto& d = h.blocks();
  const auto& inst = h.instance();
  ContractedView view;
  view.component = component;
  const int n = inst.num_vertices();
  view.node_of.assign(n, -1);
  std::map<int, int> block_node;
  for (int v : d.components[component].vertices) {
    const int b = d.block_of[v];
    if (b < 0) {
      view.node_of[v] = static_cast<int>(view.nodes.size());
      view.nodes.push_back({NodeKind::kLonely, v, false});
      continue;
    }
    auto [it, fresh] = block_node.try_emplace(b, static_cast<int>(view.nodes.size()));
    if (fresh) {
      view.nodes.push_back({NodeKind::kBlock, b, d.blocks[b].cls == BlockClass::kSimple});
    }
    view.node_of[v] = it->second;
  }
  for (int k = 0; k < static_cast<int>(view.nodes.size()); ++k) view.c_nodes.push_back(k);
  std::vector<int> comp_node(d.components.size(), -1);
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    if (c == component) continue;
    comp_node[c] = static_cast<int>(view.nodes.size());
    view.nodes.push_back({NodeKind::kOtherComponent, c, false});
  }
  for (int v = 0; v < n; ++v) {
    if (view.node_of[v] < 0) view.node_of[v] = comp_node[d.component_of[v]];
  }
  const auto& graph = h.graph();
  for (const MultiEdge& e : graph.edges) {
    if (d.component_of[e.u] != component) continue;
    const int a = view.node_of[e.u], b = view.node_of[e.v];
    if (a != b) view.tree_edges.push_back({a, b, e.origin});
  }
  std::vector<char> in_s(inst.num_links(), 0);
  for (int id : h.links()) in_s[id] = 1;
  for (int id = 0; id < inst.num_links(); ++id) {
    if (in_s[id]) continue;
    const Link& l = inst.link(id);
    const int a = view.node_of[l.u], b = view.node_of[l.v];
    if (a != b) view.links.push_back({a, b, id});
  }
  return view;
}

namespace {

struct EarSearch {
  std::vector<int> parent_edge;  // per node: index into view.links, -1 at source
  std::vector<int> parent;
};

// Breadth-first search from u that never passes through C's other nodes.
EarSearch SearchFrom(const ContractedView& view,
                     const std::vector<std::vector<int>>& adjacency, int u) {
  const int m = static_cast<int>(view.nodes.size());
  EarSearch s{std::vector<int>(m, -1), std::vector<int>(m, -2)};
  s.parent[u] = -1;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x != u && view.InC(x)) continue;
    for (int k : adjacency[x]) {
      const ViewEdge& e = view.links[k];
      const int y = e.a == x ? e.b : e.a;
      if (s.parent[y] != -2) continue;
      s.parent[y] = x;
      s.parent_edge[y] = k;
      queue.push_back(y);
    }
  }
  return s;
}

std::vector<std::vector<int>> LinkAdjacency(const ContractedView& view) {
  std::vector<std::vector<int>> adj(view.nodes.size());
  for (int k = 0; k < static_cast<int>(view.links.size()); ++k) {
    adj[view.links[k].a].push_back(k);
    adj[view.links[k].b].push_back(k);
  }
  return adj;
}

bool Witness(const ContractedView& view, PseudoEar& ear) {
  const int m = static_cast<int>(view.nodes.size());
  std::vector<std::vector<int>> adj(m);
  for (int k = 0; k < static_cast<int>(view.tree_edges.size()); ++k) {
    adj[view.tree_edges[k].a].push_back(k);
    adj[view.tree_edges[k].b].push_back(k);
  }
  std::vector<int> parent(m, -2), via(m, -1);
  parent[ear.u] = -1;
  std::deque<int> queue{ear.u};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int k : adj[x]) {
      const ViewEdge& e = view.tree_edges[k];
      const int y = e.a == x ? e.b : e.a;
      if (parent[y] != -2) continue;
      parent[y] = x;
      via[y] = k;
      queue.push_back(y);
    }
  }
  if (parent[ear.v] == -2) return false;
  ear.witness_nodes.clear();
  ear.witness_edges.clear();
  for (int x = ear.v; x != -1; x = parent[x]) {
    ear.witness_nodes.push_back(x);
    if (via[x] >= 0) ear.witness_edges.push_back(view.tree_edges[via[x]].origin);
  }
  std::reverse(ear.witness_nodes.begin(), ear.witness_nodes.end());
  std::reverse(ear.witness_edges.begin(), ear.witness_edges.end());
  return true;
}

std::optional<PseudoEar> EarFromSearch(const ContractedView& view, const EarSearch& s,
                                       int u, int v) {
  if (v == u || s.parent[v] < -1) return std::nullopt;
  PseudoEar ear;
  ear.u = u;
  ear.v = v;
  for (int x = v; x != u; x = s.parent[x]) {
    ear.links.push_back(view.links[s.parent_edge[x]].origin);
  }
  std::reverse(ear.links.begin(), ear.links.end());
  if (!Witness(view, ear)) return std::nullopt;
  return ear;
}

int LeafQuarters(const WorkingSolution& h, int v) {
  int q = 0;
  for (const auto& e : h.ledger().entries) {
    if (e.subject != v) continue;
    if (e.rule == CreditRule::kLonelyLeaf || e.rule == CreditRule::kExpensiveLeaf ||
        e.rule == CreditRule::kNearSimpleBlock) {
      q += e.quarters;
    }
  }
  return q;
}

using Phi = std::pair<int, int>;

Phi PhiOf(const WorkingSolution& h) { return {h.num_components(), h.num_bridges()}; }

struct Move {
  int rank = 0;
  std::string handler;
  int s_bridges = 0;
  int block_nodes = 0;
  LinkSet add;
};

bool MoveBefore(const Move& a, const Move& b) {
  return std::tuple(a.rank, -a.s_bridges, -a.block_nodes, a.add) <
         std::tuple(b.rank, -b.s_bridges, -b.block_nodes, b.add);
}

struct Outcome {
  LinkSet links;
  LinkSet removed;
};

// Applies the move and then drops links of S while that lowers the cost.
std::optional<Outcome> TryMove(const WorkingSolution& h, const Move& move, Phi phi,
                               int cost) {
  LinkSet links = h.links();
  links.insert(links.end(), move.add.begin(), move.add.end());
  WorkingSolution next(h.instance(), Normalize(links));
  if (!(PhiOf(next) < phi) || !CheckInvariants(next).ok()) return std::nullopt;
  LinkSet removed;
  bool dropped = true;
  while (dropped && next.cost_quarters() > cost) {
    dropped = false;
    for (int f : h.links()) {
      if (std::binary_search(removed.begin(), removed.end(), f)) continue;
      LinkSet fewer;
      for (int id : next.links()) {
        if (id != f) fewer.push_back(id);
      }
      WorkingSolution trial(h.instance(), fewer);
      if (PhiOf(trial) < phi && trial.cost_quarters() < next.cost_quarters() &&
          CheckInvariants(trial).ok()) {
        next = std::move(trial);
        removed.insert(std::upper_bound(removed.begin(), removed.end(), f), f);
        dropped = true;
        break;
      }
    }
  }
  if (next.cost_quarters() > cost) return std::nullopt;
  return Outcome{next.links(), removed};
}

std::string Describe(const WorkingSolution& h) {
  std::ostringstream out;
  const auto& d = h.blocks();
  for (int c = 0; c < h.num_components(); ++c) {
    if (!d.components[c].complex) continue;
    int bridges = 0;
    for (int e : d.bridges) {
      if (d.component_of[h.graph().edges[e].u] == c) ++bridges;
    }
    out << "complex component with " << d.components[c].vertices.size() << " vertices and "
        << bridges << " bridges at vertex " << d.components[c].vertices.front();
    break;
  }
  return out.str();
}

}  // namespace

std::optional<PseudoEar> FindPseudoEar(const ContractedView& view, int u, int v) {
  if (!view.InC(u) || !view.InC(v)) return std::nullopt;
  return EarFromSearch(view, SearchFrom(view, LinkAdjacency(view), u), u, v);
}

WitnessProfile ProfileWitness(const WorkingSolution& h, const ContractedView& view,
                              const std::vector<const PseudoEar*>& ears) {
  WitnessProfile p;
  std::set<int> nodes;
  std::set<int> edges;
  for (const PseudoEar* ear : ears) {
    nodes.insert(ear->witness_nodes.begin(), ear->witness_nodes.end());
    for (int origin : ear->witness_edges) {
      if (IsLinkOrigin(origin)) edges.insert(origin);
    }
  }
  p.s_bridges = static_cast<int>(edges.size());
  for (int x : nodes) {
    const ViewNode& node = view.nodes[x];
    if (node.kind == NodeKind::kBlock && !node.simple) ++p.non_simple_blocks;
    if (node.kind == NodeKind::kLonely && h.IsLonelyLeaf(node.index)) {
      ++p.lonely_leaves;
      if (LeafQuarters(h, node.index) >= 5) p.rich_leaf = true;
    }
  }
  return p;
}

WitnessCredit WitnessCreditCheck(const WorkingSolution& h, const ContractedView& view,
                                 const PseudoEar& ear) {
  const WitnessProfile p = ProfileWitness(h, view, {&ear});
  const bool ok = (p.non_simple_blocks >= 1 && p.non_simple_blocks + p.lonely_leaves >= 2) ||
                  (p.s_bridges >= 2 && p.lonely_leaves + p.non_simple_blocks >= 1) ||
                  (p.lonely_leaves >= 2 && p.s_bridges >= 1) || p.s_bridges >= 3;
  return ok ? WitnessCredit::kSufficient : WitnessCredit::kInsufficient;
}

WitnessCredit WitnessCreditCheck(const WorkingSolution& h, const ContractedView& view,
                                 const PseudoEar& first, const PseudoEar& second) {
  const WitnessProfile p = ProfileWitness(h, view, {&first, &second});
  const bool ok = (p.non_simple_blocks + p.lonely_leaves >= 2 && p.s_bridges >= 2) ||
                  (p.lonely_leaves >= 2 && p.s_bridges >= 1 && p.rich_leaf);
  return ok ? WitnessCredit::kSufficient : WitnessCredit::kInsufficient;
}

std::string FormatStep(const CoverStep& step) {
  std::ostringstream out;
  out << step.handler << ": (" << step.components_before << "," << step.bridges_before
      << ") -> (" << step.components_after << "," << step.bridges_after << "), cost "
      << step.cost_before << "/4 -> " << step.cost_after << "/4, +" << step.added.size()
      << " -" << step.removed.size();
  return out.str();
}

CoverStep CoverOnce(WorkingSolution& h) {
  const Phi phi = PhiOf(h);
  const int cost = h.cost_quarters();
  const auto& inst = h.instance();
  const auto& d = h.blocks();
  std::vector<Move> moves;

  std::vector<int> leaves;
  for (int v = 0; v < inst.num_vertices(); ++v) {
    if (h.IsLonelyLeaf(v)) leaves.push_back(v);
  }
  for (size_t i = 0; i < leaves.size(); ++i) {
    for (size_t j = i + 1; j < leaves.size(); ++j) {
      if (d.component_of[leaves[i]] == d.component_of[leaves[j]]) continue;
      if (auto id = inst.find_link(leaves[i], leaves[j])) {
        moves.push_back({0, "leaf-link", 0, 0, {*id}});
      }
    }
  }

  struct EarRecord {
    PseudoEar ear;
    int component;
    int rank;
  };
  std::vector<EarRecord> ears;
  std::vector<ContractedView> views(h.num_components());
  for (int c = 0; c < h.num_components(); ++c) {
    if (!d.components[c].complex) continue;
    views[c] = BuildContractedView(h, c);
    const ContractedView& view = views[c];
    const auto adjacency = LinkAdjacency(view);
    const bool trivial = [&] {
      std::set<int> paths;
      for (int v : d.components[c].vertices) paths.insert(inst.path_of(v));
      return paths.size() == 1;
    }();
    for (int u : view.c_nodes) {
      const EarSearch s = SearchFrom(view, adjacency, u);
      for (int v : view.c_nodes) {
        if (v <= u) continue;
        auto ear = EarFromSearch(view, s, u, v);
        if (!ear) continue;
        int rank = trivial ? 5 : 4;
        bool simple = false, cheap_leaf = false, heavy = false;
        for (int x : ear->witness_nodes) {
          const ViewNode& node = view.nodes[x];
          if (node.kind == NodeKind::kBlock) (node.simple ? simple : heavy) = true;
          if (node.kind == NodeKind::kLonely && h.IsLonelyLeaf(node.index) &&
              !h.IsExpensiveLeaf(node.index)) {
            cheap_leaf = true;
          }
        }
        if (heavy) rank = 3;
        if (cheap_leaf) rank = 2;
        if (simple) rank = 1;
        ears.push_back({std::move(*ear), c, rank});
      }
    }
  }
  static const char* kNames[] = {"leaf-link", "simple-block", "leaf", "non-simple-block",
                                 "lonely-path", "trivial"};
  for (const auto& rec : ears) {
    const WitnessProfile p = ProfileWitness(h, views[rec.component], {&rec.ear});
    int blocks = 0;
    for (int x : rec.ear.witness_nodes) {
      if (views[rec.component].nodes[x].kind == NodeKind::kBlock) ++blocks;
    }
    moves.push_back({rec.rank, kNames[rec.rank], p.s_bridges, blocks, Normalize(rec.ear.links)});
  }
  std::sort(moves.begin(), moves.end(), MoveBefore);
  moves.erase(std::unique(moves.begin(), moves.end(),
                          [](const Move& a, const Move& b) { return a.add == b.add; }),
              moves.end());

  auto finish = [&](const Move& move, Outcome outcome) {
    CoverStep step;
    step.handler = move.handler;
    step.components_before = phi.first;
    step.bridges_before = phi.second;
    step.cost_before = cost;
    step.added = move.add;
    step.removed = outcome.removed;
    h.Replace(std::move(outcome.links));
    step.components_after = h.num_components();
    step.bridges_after = h.num_bridges();
    step.cost_after = h.cost_quarters();
    return step;
  };

  for (const Move& move : moves) {
    if (auto outcome = TryMove(h, move, phi, cost)) return finish(move, std::move(*outcome));
  }

  // Two ears of one component whose witness paths meet.
  constexpr size_t kPairPool = 48;
  std::vector<const EarRecord*> pool;
  for (const auto& rec : ears) pool.push_back(&rec);
  std::stable_sort(pool.begin(), pool.end(), [](const EarRecord* a, const EarRecord* b) {
    return std::tuple(a->rank, -static_cast<int>(a->ear.witness_edges.size())) <
           std::tuple(b->rank, -static_cast<int>(b->ear.witness_edges.size()));
  });
  if (pool.size() > kPairPool) pool.resize(kPairPool);
  std::vector<Move> pairs;
  for (size_t i = 0; i < pool.size(); ++i) {
    for (size_t j = i + 1; j < pool.size(); ++j) {
      const EarRecord& a = *pool[i];
      const EarRecord& b = *pool[j];
      if (a.component != b.component) continue;
      const std::set<int> wa(a.ear.witness_nodes.begin(), a.ear.witness_nodes.end());
      bool meet = false;
      for (int x : b.ear.witness_nodes) meet = meet || wa.count(x) > 0;
      if (!meet) continue;
      const WitnessProfile p = ProfileWitness(h, views[a.component], {&a.ear, &b.ear});
      LinkSet add = a.ear.links;
      add.insert(add.end(), b.ear.links.begin(), b.ear.links.end());
      pairs.push_back({std::max(a.rank, b.rank), "ear-pair", p.s_bridges,
                       p.non_simple_blocks, Normalize(add)});
    }
  }
  std::sort(pairs.begin(), pairs.end(), MoveBefore);
  for (const Move& move : pairs) {
    if (auto outcome = TryMove(h, move, phi, cost)) return finish(move, std::move(*outcome));
  }
  throw NoProgress(Describe(h), h.links());
}

BridgeCoverResult BridgeCover(WorkingSolution& h) {
  BridgeCoverResult result;
  while (h.num_bridges() > 0) result.steps.push_back(CoverOnce(h));
  result.links = h.links();
  return result;
}

}  // namespace pap
