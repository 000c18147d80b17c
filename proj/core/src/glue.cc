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


#include "pap/glue.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace pap {

ComponentGraph BuildComponentGraph(const WorkingSolution& h) {
  const auto& d = h.blocks();
  const auto& inst = h.instance();
  ComponentGraph g;
  g.node_of = d.component_of;
  g.nodes.resize(d.components.size());
  for (int c = 0; c < static_cast<int>(d.components.size()); ++c) {
    g.nodes[c].vertices = d.components[c].vertices;
    g.nodes[c].small = ClassifyVertexSet(d.components[c].vertices, inst) == BlockClass::kSmall;
  }
  for (const auto& e : h.ledger().entries) {
    if (e.rule == CreditRule::kLargeComponent || e.rule == CreditRule::kSmallComponent) {
      g.nodes[e.subject].credit_quarters = e.quarters;
    }
  }
  for (auto& node : g.nodes) node.degenerate = node.small && node.credit_quarters == 8;
  for (int id = 0; id < inst.num_links(); ++id) {
    const Link& l = inst.link(id);
    const int a = g.node_of[l.u], b = g.node_of[l.v];
    if (a != b) g.edges.push_back({a, b, id});
  }
  return g;
}

std::optional<int> FindShortcut(const PapInstance& instance, const ComponentNode& node,
                                int entry, int exit) {
  if (!node.small || entry == exit) return std::nullopt;
  if (!instance.is_endpoint(entry) || !instance.is_endpoint(exit)) return std::nullopt;
  if (instance.path_of(entry) == instance.path_of(exit)) return std::nullopt;
  return instance.find_link(instance.other_endpoint(entry), instance.other_endpoint(exit));
}

bool IsGood(const GoodCycle& cycle) {
  return cycle.nodes.size() >= 2 && (cycle.heavy_nodes >= 2 || !cycle.shortcuts.empty());
}

namespace {

int EndIn(const PapInstance& inst, const ComponentGraph& g, int edge, int node) {
  const Link& l = inst.link(g.edges[edge].link);
  return g.node_of[l.u] == node ? l.u : l.v;
}

class CycleSearch {
 public:
  CycleSearch(const WorkingSolution& h, const ComponentGraph& g) : h_(h), g_(g) {
    const int m = static_cast<int>(g.nodes.size());
    adjacency_.resize(m);
    // Parallel edges matter only through their ends inside small nodes.
    std::map<std::tuple<int, int, int, int>, int> kept;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      const auto& edge = g.edges[e];
      const int a = std::min(edge.a, edge.b), b = std::max(edge.a, edge.b);
      const int ea = g.nodes[a].small ? EndIn(h.instance(), g, e, a) : -1;
      const int eb = g.nodes[b].small ? EndIn(h.instance(), g, e, b) : -1;
      if (++kept[{a, b, ea, eb}] > 2) continue;
      adjacency_[edge.a].push_back(e);
      adjacency_[edge.b].push_back(e);
    }
  }

  std::optional<GoodCycle> Run() {
    const int m = static_cast<int>(g_.nodes.size());
    on_path_.assign(m, 0);
    for (start_ = 0; start_ < m && budget_ > 0; ++start_) {
      nodes_ = {start_};
      edges_.clear();
      on_path_[start_] = 1;
      Extend(start_);
      on_path_[start_] = 0;
    }
    return best_;
  }

 private:
  void Extend(int x) {
    if (--budget_ <= 0) return;
    for (int e : adjacency_[x]) {
      const auto& edge = g_.edges[e];
      const int y = edge.a == x ? edge.b : edge.a;
      if (y == start_) {
        const bool two = nodes_.size() == 2 && edges_.size() == 1 && edges_[0] < e;
        const bool longer = nodes_.size() >= 3 && nodes_[1] < nodes_.back();
        if (two || longer) {
          edges_.push_back(e);
          Consider();
          edges_.pop_back();
        }
        continue;
      }
      if (y < start_ || on_path_[y]) continue;
      on_path_[y] = 1;
      nodes_.push_back(y);
      edges_.push_back(e);
      Extend(y);
      edges_.pop_back();
      nodes_.pop_back();
      on_path_[y] = 0;
    }
  }

  void Consider() {
    GoodCycle c;
    c.nodes = nodes_;
    c.edges = edges_;
    const int k = static_cast<int>(nodes_.size());
    for (int i = 0; i < k; ++i) {
      const ComponentNode& node = g_.nodes[nodes_[i]];
      if (node.credit_quarters >= 8) ++c.heavy_nodes;
      if (!node.small) continue;
      const int entry = EndIn(h_.instance(), g_, edges_[(i + k - 1) % k], nodes_[i]);
      const int exit = EndIn(h_.instance(), g_, edges_[i], nodes_[i]);
      if (auto link = FindShortcut(h_.instance(), node, entry, exit)) {
        c.shortcuts.push_back({nodes_[i], entry, exit, *link});
      }
    }
    if (!IsGood(c)) return;
    if (!best_ || Better(c, *best_)) best_ = std::move(c);
  }

  static bool Better(const GoodCycle& a, const GoodCycle& b) {
    return std::tuple(-a.heavy_nodes, a.nodes.size(), a.nodes, a.edges) <
           std::tuple(-b.heavy_nodes, b.nodes.size(), b.nodes, b.edges);
  }

  const WorkingSolution& h_;
  const ComponentGraph& g_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<char> on_path_;
  std::vector<int> nodes_;
  std::vector<int> edges_;
  int start_ = 0;
  long budget_ = 400'000;
  std::optional<GoodCycle> best_;
};

}  // namespace

std::optional<GoodCycle> FindGoodCycle(const WorkingSolution& h, const ComponentGraph& graph) {
  return CycleSearch(h, graph).Run();
}

std::string FormatStep(const GlueStep& step) {
  std::ostringstream out;
  out << "cycle of " << step.cycle_length << " with " << step.shortcuts << " shortcuts, cost "
      << step.cost_before << "/4 -> " << step.cost_after << "/4";
  return out.str();
}

GlueStep Augment(WorkingSolution& h, const ComponentGraph& graph, const GoodCycle& cycle) {
  if (!IsGood(cycle)) throw std::invalid_argument("cycle is not good");
  GlueStep step;
  step.cycle_length = static_cast<int>(cycle.nodes.size());
  step.shortcuts = static_cast<int>(cycle.shortcuts.size());
  step.cost_before = h.cost_quarters();
  std::vector<char> cut(graph.nodes.size(), 0);
  for (const auto& s : cycle.shortcuts) cut[s.node] = 1;
  LinkSet links;
  for (int id : h.links()) {
    const Link& l = h.instance().link(id);
    if (!cut[graph.node_of[l.u]]) links.push_back(id);
  }
  for (int e : cycle.edges) links.push_back(graph.edges[e].link);
  for (const auto& s : cycle.shortcuts) links.push_back(s.link);
  h.Replace(std::move(links));
  step.cost_after = h.cost_quarters();
  return step;
}

GlueResult Glue(WorkingSolution& h) {
  GlueResult result;
  while (h.num_components() > 1) {
    if (h.num_bridges() > 0) throw std::invalid_argument("glue needs a bridgeless solution");
    const ComponentGraph graph = BuildComponentGraph(h);
    auto cycle = FindGoodCycle(h, graph);
    if (!cycle) {
      throw NotStructured("no good cycle among " + std::to_string(h.num_components()) +
                              " components",
                          h.links());
    }
    result.steps.push_back(Augment(h, graph, *cycle));
  }
  result.links = h.links();
  return result;
}

}  // namespace pap
