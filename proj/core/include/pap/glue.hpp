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


#ifndef PAP_GLUE_HPP_
#define PAP_GLUE_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pap/credits.hpp"
#include "pap/graph.hpp"

namespace pap {

struct ComponentNode {
  std::vector<int> vertices;
  int credit_quarters = 0;  // 6 or 8
  bool small = false;
  bool degenerate = false;
};

struct ComponentEdge {
  int a = 0;
  int b = 0;
  int link = -1;
};

struct ComponentGraph {
  std::vector<ComponentNode> nodes;
  std::vector<ComponentEdge> edges;  // parallel edges kept, loops dropped
  std::vector<int> node_of;          // per vertex
};

// Requires a bridgeless H.
ComponentGraph BuildComponentGraph(const WorkingSolution& h);

struct Shortcut {
  int node = -1;
  int entry = -1;  // vertices of the component
  int exit = -1;
  int link = -1;   // the single link of the Hamiltonian path
};

// Hamiltonian entry-exit path of a two-path component using exactly one link.
std::optional<int> FindShortcut(const PapInstance& instance, const ComponentNode& node,
                                int entry, int exit);

struct GoodCycle {
  std::vector<int> nodes;  // in cycle order
  std::vector<int> edges;  // edges[k] joins nodes[k] and nodes[k + 1 mod size]
  std::vector<Shortcut> shortcuts;
  int heavy_nodes = 0;     // nodes with credit 2
};

bool IsGood(const GoodCycle& cycle);

// Best good cycle: most credit-2 nodes, then shortest, then lexicographic.
std::optional<GoodCycle> FindGoodCycle(const WorkingSolution& h, const ComponentGraph& graph);

class NotStructured : public std::runtime_error {
 public:
  NotStructured(std::string what, LinkSet links)
      : std::runtime_error(std::move(what)), links(std::move(links)) {}

  LinkSet links;  // the solution reached so far
};

struct GlueStep {
  int cycle_length = 0;
  int shortcuts = 0;
  int cost_before = 0;  // quarters
  int cost_after = 0;
};

std::string FormatStep(const GlueStep& step);

// Throws std::invalid_argument if the cycle is not good.
GlueStep Augment(WorkingSolution& h, const ComponentGraph& graph, const GoodCycle& cycle);

struct GlueResult {
  LinkSet links;
  std::vector<GlueStep> steps;
};

// Throws NotStructured when several components remain without a good cycle.
GlueResult Glue(WorkingSolution& h);

}  // namespace pap

#endif  // PAP_GLUE_HPP_
