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


#ifndef PAP_CREDITS_HPP_
#define PAP_CREDITS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pap/graph.hpp"

namespace pap {

// Credits are counted in quarters so that every rule stays integral.
constexpr int kQuarter = 1;
constexpr int kOneCredit = 4;

enum class CreditRule {
  kLonelyLeaf,        // 1
  kExpensiveLeaf,     // +1/4
  kNearSimpleBlock,   // +1/4
  kBridgeLink,        // 3/4
  kComplexComponent,  // 1
  kNonSimpleBlock,    // 1
  kLargeComponent,    // 2, also small components holding a degenerate path
  kSmallComponent,    // 3/2
};

const char* ToString(CreditRule rule);

struct CreditEntry {
  CreditRule rule;
  int subject;  // vertex, link id, component or block index
  int quarters;
};

struct CreditLedger {
  std::vector<CreditEntry> entries;
  int total_quarters = 0;
  int num_links = 0;

  // cost(H) = |S| + credits(H), in quarters.
  int cost_quarters() const { return kOneCredit * num_links + total_quarters; }
  double credits() const { return total_quarters / 4.0; }
  double cost() const { return cost_quarters() / 4.0; }
  int Sum(CreditRule rule) const;
};

// uu' with u, u' ends of distinct paths is expensive towards u when the far
// end v of u's path only sees vertices of the two paths other than the far
// end of the second path.
bool IsExpensiveToward(const PapInstance& instance, int link, int u);
bool IsExpensiveLink(const PapInstance& instance, int link);

// Paths P' for which some partner path P has links joining both ends
// crosswise plus the closing link of P', with both ends of P' seeing only the
// two paths. Sorted path indices.
std::vector<int> FindDegeneratePaths(const PapInstance& instance);
// Partner path of a degenerate path p, or -1.
int DegeneratePartner(const PapInstance& instance, int p);
// Whether path p is degenerate with its partner drawn from `partners`.
bool IsDegenerateWithin(const PapInstance& instance, int p,
                        const std::vector<int>& partners);

// H = (V, E(P) u S) with cached structure.
class WorkingSolution {
 public:
  WorkingSolution(const PapInstance& instance, LinkSet links);

  const PapInstance& instance() const { return *instance_; }
  const LinkSet& links() const { return links_; }
  const Multigraph& graph() const { return graph_; }
  const BlockDecomposition& blocks() const { return blocks_; }
  const CreditLedger& ledger() const { return ledger_; }
  int cost_quarters() const { return ledger_.cost_quarters(); }
  int num_components() const { return static_cast<int>(blocks_.components.size()); }
  int num_bridges() const { return static_cast<int>(blocks_.bridges.size()); }
  int Degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool IsLonelyLeaf(int v) const;
  bool IsExpensiveLeaf(int v) const;
  bool Feasible() const { return num_components() == 1 && num_bridges() == 0; }

  void Replace(LinkSet links);

 private:
  void Refresh();
  CreditLedger ComputeLedger() const;

  const PapInstance* instance_;
  LinkSet links_;
  Multigraph graph_;
  BlockDecomposition blocks_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  std::vector<char> degenerate_;
  CreditLedger ledger_;
};

struct InvariantReport {
  bool cost_ok = true;      // monotone against the previous cost and the bound
  bool lonely_ok = true;    // lonely degree, simple block placement
  bool blocks_ok = true;    // non-simple blocks hold two full paths
  std::vector<std::string> failures;

  bool ok() const { return cost_ok && lonely_ok && blocks_ok; }
};

// prev_cost_quarters and opt are optional; the bound uses 1.9412.
InvariantReport CheckInvariants(const WorkingSolution& h,
                                std::optional<int> prev_cost_quarters = std::nullopt,
                                std::optional<int> opt = std::nullopt);

}  // namespace pap

#endif  // PAP_CREDITS_HPP_
