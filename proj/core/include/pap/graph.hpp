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

#ifndef PAP_GRAPH_HPP_
#define PAP_GRAPH_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pap {

// An unordered vertex pair. Constructed links are normalized so u <= v.
struct Link {
  int u = 0;
  int v = 0;

  friend bool operator==(const Link&, const Link&) = default;
  friend auto operator<=>(const Link&, const Link&) = default;
};

inline Link MakeLink(int a, int b) { return a < b ? Link{a, b} : Link{b, a}; }

// Sorted, duplicate-free list of link ids.
using LinkSet = std::vector<int>;

LinkSet Normalize(LinkSet s);

class InvalidInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertex-disjoint paths covering 0..n-1 plus a list of links.
//
// A strict instance rejects self-loops, duplicate links and links parallel to
// a path edge. Non-strict instances arise from contractions and may contain
// parallel links (self-loops are still rejected).
class PapInstance {
 public:
  PapInstance() = default;
  PapInstance(int num_vertices, std::vector<std::vector<int>> paths,
              std::vector<Link> links, bool strict = true);

  int num_vertices() const { return num_vertices_; }
  int num_paths() const { return static_cast<int>(paths_.size()); }
  int num_links() const { return static_cast<int>(links_.size()); }
  bool strict() const { return strict_; }

  const std::vector<std::vector<int>>& paths() const { return paths_; }
  const std::vector<int>& path(int p) const { return paths_[p]; }
  const std::vector<Link>& links() const { return links_; }
  const Link& link(int id) const { return links_[id]; }

  int path_of(int v) const { return path_of_[v]; }
  int position(int v) const { return position_[v]; }
  bool is_endpoint(int v) const;
  // The opposite end of v's path; v itself for single-vertex paths.
  int other_endpoint(int v) const;
  int front(int p) const { return paths_[p].front(); }
  int back(int p) const { return paths_[p].back(); }

  const std::vector<int>& incident_links(int v) const { return incident_[v]; }
  int link_other(int id, int v) const {
    return links_[id].u == v ? links_[id].v : links_[id].u;
  }
  // Smallest link id joining a and b.
  std::optional<int> find_link(int a, int b) const;
  // Vertices joined to v by some link (sorted, unique).
  std::vector<int> link_neighbors(int v) const;
  // Vertices adjacent to v in the whole graph E(P) u L (sorted, unique).
  std::vector<int> neighbors(int v) const;

  std::vector<std::pair<int, int>> path_edges() const;
  int num_path_edges() const;

  // Free-form comment lines and the line index they were read from; kept so
  // that formatting reproduces the parsed text.
  std::vector<std::pair<int, std::string>> comments;

 private:
  int num_vertices_ = 0;
  bool strict_ = true;
  std::vector<std::vector<int>> paths_;
  std::vector<Link> links_;
  std::vector<int> path_of_;
  std::vector<int> position_;
  std::vector<std::vector<int>> incident_;
};

struct LinkClasses {
  std::vector<int> endpoints;   // V*(P), sorted
  std::vector<int> endpoint_links;     // L*
  std::vector<int> same_path_links;    // L-hat
  std::vector<int> cross_path_links;   // L-bar
};

LinkClasses ComputeLinkClasses(const PapInstance& instance);

// Edge origins: values >= 0 are link ids, negative values encode path edge
// index k as -(k + 1). kNoOrigin marks synthetic edges.
constexpr int kNoOrigin = -1'000'000'000;
inline int PathEdgeOrigin(int k) { return -(k + 1); }
inline bool IsLinkOrigin(int origin) { return origin >= 0; }

struct MultiEdge {
  int u = 0;
  int v = 0;
  int origin = kNoOrigin;
};

struct Multigraph {
  int num_vertices = 0;
  std::vector<MultiEdge> edges;

  int AddEdge(int u, int v, int origin = kNoOrigin) {
    edges.push_back({u, v, origin});
    return static_cast<int>(edges.size()) - 1;
  }
  // adjacency[v] lists (neighbor, edge index); self-loops appear once.
  std::vector<std::vector<std::pair<int, int>>> Adjacency() const;
};

// (V, E(P) u S) with path edges first (origin PathEdgeOrigin(k)) followed by
// the selected links (origin = link id).
Multigraph UnionGraph(const PapInstance& instance, std::span<const int> links);
Multigraph FullGraph(const PapInstance& instance);

std::vector<int> Bridges(const Multigraph& graph);
// Component id per vertex, ids dense in order of first vertex.
std::vector<int> ConnectedComponents(const Multigraph& graph,
                                     int* num_components = nullptr);
// Component id per vertex after deleting the listed edges.
std::vector<int> ComponentsWithout(const Multigraph& graph,
                                   std::span<const int> removed_edges,
                                   int* num_components = nullptr);
bool IsConnected(const Multigraph& graph);
bool IsTwoEdgeConnected(const Multigraph& graph);

struct Contraction {
  Multigraph graph;
  std::vector<int> vertex_map;  // old vertex -> new vertex
};

// Contracts each part to one vertex. Parts come first in the new numbering,
// followed by untouched vertices in increasing order. Self-loops created by
// the contraction are dropped; parallel edges are kept.
Contraction Contract(const Multigraph& graph,
                     const std::vector<std::vector<int>>& parts);

enum class BlockClass { kSimple, kSmall, kLarge, kOther };

const char* ToString(BlockClass c);

struct Block {
  std::vector<int> vertices;
  std::vector<int> edges;
  BlockClass cls = BlockClass::kOther;
  int component = -1;
};

struct Component {
  std::vector<int> vertices;
  std::vector<int> edges;
  bool complex = false;             // contains a bridge
  bool two_edge_connected = false;  // bridgeless with >= 2 vertices
};

struct BlockDecomposition {
  std::vector<int> bridges;
  std::vector<Block> blocks;  // maximal 2EC subgraphs with >= 2 vertices
  std::vector<Component> components;
  std::vector<int> block_of;      // per vertex, -1 if none
  std::vector<int> component_of;  // per vertex
  std::vector<bool> lonely;       // per vertex

  bool IsBridge(int edge) const;
};

// graph vertices must coincide with instance vertices.
BlockDecomposition DecomposeBlocks(const Multigraph& graph,
                                   const PapInstance& instance);

BlockClass ClassifyVertexSet(const std::vector<int>& vertices,
                             const PapInstance& instance);

// Throws std::out_of_range for ids outside the link list.
bool VerifySolution(const PapInstance& instance, std::span<const int> links);

// Parses and formats the plain text instance format.
PapInstance ParseInstance(const std::string& text);
std::string FormatInstance(const PapInstance& instance);
PapInstance ReadInstanceFile(const std::string& path);
void WriteInstanceFile(const PapInstance& instance, const std::string& path);

std::string FormatLinks(const PapInstance& instance, std::span<const int> links);

}  // namespace pap

#endif  // PAP_GRAPH_HPP_
