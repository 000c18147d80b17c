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

#include "pap/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace pap {

LinkSet Normalize(LinkSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

PapInstance::PapInstance(int num_vertices, std::vector<std::vector<int>> paths,
                         std::vector<Link> links, bool strict)
    : num_vertices_(num_vertices),
      strict_(strict),
      paths_(std::move(paths)),
      links_(std::move(links)) {
  if (num_vertices_ < 0) throw InvalidInstance("negative vertex count");
  path_of_.assign(num_vertices_, -1);
  position_.assign(num_vertices_, -1);
  for (int p = 0; p < num_paths(); ++p) {
    if (paths_[p].empty()) throw InvalidInstance("empty path");
    for (int i = 0; i < static_cast<int>(paths_[p].size()); ++i) {
      int v = paths_[p][i];
      if (v < 0 || v >= num_vertices_) {
        throw InvalidInstance("path vertex out of range: " + std::to_string(v));
      }
      if (path_of_[v] != -1) {
        throw InvalidInstance("vertex on two paths: " + std::to_string(v));
      }
      path_of_[v] = p;
      position_[v] = i;
    }
  }
  for (int v = 0; v < num_vertices_; ++v) {
    if (path_of_[v] == -1) {
      throw InvalidInstance("vertex not covered by a path: " + std::to_string(v));
    }
  }
  incident_.assign(num_vertices_, {});
  std::set<Link> seen;
  for (int id = 0; id < num_links(); ++id) {
    Link& l = links_[id];
    l = MakeLink(l.u, l.v);
    if (l.u < 0 || l.v >= num_vertices_) {
      throw InvalidInstance("link endpoint out of range");
    }
    if (l.u == l.v) throw InvalidInstance("self-loop link");
    if (strict_) {
      if (!seen.insert(l).second) {
        throw InvalidInstance("duplicate link " + std::to_string(l.u) + " " +
                              std::to_string(l.v));
      }
      if (path_of_[l.u] == path_of_[l.v] &&
          std::abs(position_[l.u] - position_[l.v]) == 1) {
        throw InvalidInstance("link duplicates a path edge");
      }
    }
    incident_[l.u].push_back(id);
    incident_[l.v].push_back(id);
  }
}

bool PapInstance::is_endpoint(int v) const {
  const auto& p = paths_[path_of_[v]];
  return p.front() == v || p.back() == v;
}

int PapInstance::other_endpoint(int v) const {
  const auto& p = paths_[path_of_[v]];
  return p.front() == v ? p.back() : p.front();
}

std::optional<int> PapInstance::find_link(int a, int b) const {
  std::optional<int> best;
  for (int id : incident_[a]) {
    if (link_other(id, a) == b && (!best || id < *best)) best = id;
  }
  return best;
}

std::vector<int> PapInstance::link_neighbors(int v) const {
  std::vector<int> out;
  for (int id : incident_[v]) out.push_back(link_other(id, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> PapInstance::neighbors(int v) const {
  std::vector<int> out = link_neighbors(v);
  const auto& p = paths_[path_of_[v]];
  int i = position_[v];
  if (i > 0) out.push_back(p[i - 1]);
  if (i + 1 < static_cast<int>(p.size())) out.push_back(p[i + 1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<int, int>> PapInstance::path_edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : paths_) {
    for (size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i], p[i + 1]);
  }
  return out;
}

int PapInstance::num_path_edges() const {
  return num_vertices_ - num_paths();
}

LinkClasses ComputeLinkClasses(const PapInstance& instance) {
  LinkClasses c;
  for (int v = 0; v < instance.num_vertices(); ++v) {
    if (instance.is_endpoint(v)) c.endpoints.push_back(v);
  }
  for (int id = 0; id < instance.num_links(); ++id) {
    const Link& l = instance.link(id);
    if (!instance.is_endpoint(l.u) || !instance.is_endpoint(l.v)) continue;
    c.endpoint_links.push_back(id);
    if (instance.path_of(l.u) == instance.path_of(l.v)) {
      c.same_path_links.push_back(id);
    } else {
      c.cross_path_links.push_back(id);
    }
  }
  return c;
}

std::vector<std::vector<std::pair<int, int>>> Multigraph::Adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(num_vertices);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].u].emplace_back(edges[e].v, e);
    if (edges[e].u != edges[e].v) adj[edges[e].v].emplace_back(edges[e].u, e);
  }
  return adj;
}

Multigraph UnionGraph(const PapInstance& instance, std::span<const int> links) {
  Multigraph g;
  g.num_vertices = instance.num_vertices();
  int k = 0;
  for (const auto& [a, b] : instance.path_edges()) g.AddEdge(a, b, PathEdgeOrigin(k++));
  for (int id : links) {
    const Link& l = instance.link(id);
    g.AddEdge(l.u, l.v, id);
  }
  return g;
}

Multigraph FullGraph(const PapInstance& instance) {
  std::vector<int> all(instance.num_links());
  std::iota(all.begin(), all.end(), 0);
  return UnionGraph(instance, all);
}

std::vector<int> Bridges(const Multigraph& graph) {
  const int n = graph.num_vertices;
  auto adj = graph.Adjacency();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> bridges;
  int timer = 0;
  struct Frame {
    int v;
    int parent_edge;
    size_t next;
  };
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.parent_edge || w == f.v) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        int pe = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int u = stack.back().v;
          low[u] = std::min(low[u], low[v]);
          if (low[v] > disc[u]) bridges.push_back(pe);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::vector<int> ComponentsWithout(const Multigraph& graph,
                                   std::span<const int> removed_edges,
                                   int* num_components) {
  const int n = graph.num_vertices;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> skip(graph.edges.size(), 0);
  for (int e : removed_edges) skip[e] = 1;
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    if (skip[e]) continue;
    int a = find(graph.edges[e].u), b = find(graph.edges[e].v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> id(n, -1), root_id(n, -1);
  int count = 0;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (root_id[r] == -1) root_id[r] = count++;
    id[v] = root_id[r];
  }
  if (num_components) *num_components = count;
  return id;
}

std::vector<int> ConnectedComponents(const Multigraph& graph, int* num_components) {
  return ComponentsWithout(graph, {}, num_components);
}

bool IsConnected(const Multigraph& graph) {
  int c = 0;
  ConnectedComponents(graph, &c);
  return c <= 1;
}

bool IsTwoEdgeConnected(const Multigraph& graph) {
  return IsConnected(graph) && Bridges(graph).empty();
}

Contraction Contract(const Multigraph& graph,
                     const std::vector<std::vector<int>>& parts) {
  Contraction out;
  out.vertex_map.assign(graph.num_vertices, -1);
  int next = 0;
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("empty contraction part");
    for (int v : part) {
      if (v < 0 || v >= graph.num_vertices) {
        throw std::invalid_argument("contraction vertex out of range");
      }
      if (out.vertex_map[v] != -1) {
        throw std::invalid_argument("overlapping contraction parts");
      }
      out.vertex_map[v] = next;
    }
    ++next;
  }
  for (int v = 0; v < graph.num_vertices; ++v) {
    if (out.vertex_map[v] == -1) out.vertex_map[v] = next++;
  }
  out.graph.num_vertices = next;
  for (const auto& e : graph.edges) {
    int a = out.vertex_map[e.u], b = out.vertex_map[e.v];
    if (a == b) continue;
    out.graph.AddEdge(a, b, e.origin);
  }
  return out;
}

const char* ToString(BlockClass c) {
  switch (c) {
    case BlockClass::kSimple: return "simple";
    case BlockClass::kSmall: return "small";
    case BlockClass::kLarge: return "large";
    case BlockClass::kOther: return "other";
  }
  return "?";
}

bool BlockDecomposition::IsBridge(int edge) const {
  return std::binary_search(bridges.begin(), bridges.end(), edge);
}

BlockClass ClassifyVertexSet(const std::vector<int>& vertices,
                             const PapInstance& instance) {
  std::vector<int> count(instance.num_paths(), 0);
  for (int v : vertices) ++count[instance.path_of(v)];
  int touched = 0, full = 0;
  for (int p = 0; p < instance.num_paths(); ++p) {
    if (count[p] == 0) continue;
    ++touched;
    if (count[p] == static_cast<int>(instance.path(p).size())) ++full;
  }
  if (touched == 1) return BlockClass::kSimple;
  if (touched == 2 && full == 2) return BlockClass::kSmall;
  if (full >= 3) return BlockClass::kLarge;
  return BlockClass::kOther;
}

BlockDecomposition DecomposeBlocks(const Multigraph& graph,
                                   const PapInstance& instance) {
  BlockDecomposition d;
  const int n = graph.num_vertices;
  d.bridges = Bridges(graph);
  int num_comp = 0;
  d.component_of = ConnectedComponents(graph, &num_comp);
  d.components.resize(num_comp);
  for (int v = 0; v < n; ++v) d.components[d.component_of[v]].vertices.push_back(v);
  std::vector<char> is_bridge(graph.edges.size(), 0);
  for (int e : d.bridges) is_bridge[e] = 1;
  for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
    Component& c = d.components[d.component_of[graph.edges[e].u]];
    c.edges.push_back(e);
    if (is_bridge[e]) c.complex = true;
  }
  for (auto& c : d.components) {
    c.two_edge_connected = !c.complex && c.vertices.size() >= 2;
  }
  int num_classes = 0;
  std::vector<int> cls = ComponentsWithout(graph, d.bridges, &num_classes);
  std::vector<std::vector<int>> members(num_classes);
  for (int v = 0; v < n; ++v) members[cls[v]].push_back(v);
  std::vector<int> block_id(num_classes, -1);
  d.block_of.assign(n, -1);
  for (int k = 0; k < num_classes; ++k) {
    if (members[k].size() < 2) continue;
    block_id[k] = static_cast<int>(d.blocks.size());
    Block b;
    b.vertices = members[k];
    b.cls = ClassifyVertexSet(b.vertices, instance);
    b.component = d.component_of[members[k].front()];
    d.blocks.push_back(std::move(b));
    for (int v : members[k]) d.block_of[v] = block_id[k];
  }
  for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
    if (is_bridge[e]) continue;
    int k = cls[graph.edges[e].u];
    if (block_id[k] >= 0) d.blocks[block_id[k]].edges.push_back(e);
  }
  d.lonely.assign(n, false);
  for (int v = 0; v < n; ++v) d.lonely[v] = d.block_of[v] == -1;
  return d;
}

bool VerifySolution(const PapInstance& instance, std::span<const int> links) {
  for (int id : links) {
    if (id < 0 || id >= instance.num_links()) {
      throw std::out_of_range("link id not in L: " + std::to_string(id));
    }
  }
  return IsTwoEdgeConnected(UnionGraph(instance, links));
}

std::string FormatLinks(const PapInstance& instance, std::span<const int> links) {
  std::string out;
  for (int id : links) {
    const Link& l = instance.link(id);
    out += "link " + std::to_string(l.u) + " " + std::to_string(l.v) + "\n";
  }
  return out;
}

}  // namespace pap
