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


#ifndef PAP_BRIDGE_HPP_
#define PAP_BRIDGE_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pap/credits.hpp"
#include "pap/graph.hpp"

namespace pap {

enum class NodeKind { kLonely, kBlock, kOtherComponent };

struct ViewNode {
  NodeKind kind = NodeKind::kLonely;
  int index = -1;  // vertex, block or component, by kind
  bool simple = false;
};

struct ViewEdge {
  int a = 0;
  int b = 0;
  int origin = kNoOrigin;  // link id or path edge origin
};

// One complex component C with the rest of H contracted: blocks of C and
// every other component become single nodes.
struct ContractedView {
  int component = -1;
  std::vector<ViewNode> nodes;
  std::vector<int> node_of;          // per vertex
  std::vector<int> c_nodes;          // nodes of C, increasing
  std::vector<ViewEdge> tree_edges;  // H edges between nodes of C
  std::vector<ViewEdge> links;       // G links outside S between distinct nodes

  bool InC(int node) const;
};

ContractedView BuildContractedView(const WorkingSolution& h, int component);

struct PseudoEar {
  int u = -1;  // view nodes in C
  int v = -1;
  std::vector<int> links;           // link ids in order from u
  std::vector<int> witness_nodes;   // from u to v
  std::vector<int> witness_edges;   // origins along the witness
};

std::optional<PseudoEar> FindPseudoEar(const ContractedView& view, int u, int v);

enum class WitnessCredit { kSufficient, kInsufficient };

// Counts on a witness (or union of two) used by the credit conditions.
struct WitnessProfile {
  int s_bridges = 0;
  int lonely_leaves = 0;
  int non_simple_blocks = 0;
  bool rich_leaf = false;  // some leaf holds at least 5/4 credits
};

WitnessProfile ProfileWitness(const WorkingSolution& h, const ContractedView& view,
                              const std::vector<const PseudoEar*>& ears);
WitnessCredit WitnessCreditCheck(const WorkingSolution& h, const ContractedView& view,
                                 const PseudoEar& ear);
WitnessCredit WitnessCreditCheck(const WorkingSolution& h, const ContractedView& view,
                                 const PseudoEar& first, const PseudoEar& second);

class NoProgress : public std::runtime_error {
 public:
  NoProgress(std::string witness, LinkSet links)
      : std::runtime_error("no bridge-covering step applies: " + witness),
        witness(std::move(witness)),
        links(std::move(links)) {}

  std::string witness;
  LinkSet links;  // the solution reached so far
};

struct CoverStep {
  std::string handler;
  int components_before = 0, bridges_before = 0;
  int components_after = 0, bridges_after = 0;
  int cost_before = 0, cost_after = 0;  // quarters
  LinkSet added;
  LinkSet removed;
};

std::string FormatStep(const CoverStep& step);

// One step that lowers (components, bridges) lexicographically without
// raising the cost and keeps the structural invariants. Throws NoProgress.
CoverStep CoverOnce(WorkingSolution& h);

struct BridgeCoverResult {
  LinkSet links;
  std::vector<CoverStep> steps;
};

// Repeats CoverOnce until bridgeless. Throws NoProgress.
BridgeCoverResult BridgeCover(WorkingSolution& h);

}  // namespace pap

#endif  // PAP_BRIDGE_HPP_
