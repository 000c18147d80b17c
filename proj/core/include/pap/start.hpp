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


#ifndef PAP_START_HPP_
#define PAP_START_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pap/credits.hpp"
#include "pap/graph.hpp"
#include "pap/relax.hpp"

namespace pap {

// Greedy packing improved by local swaps that trade r chosen sets for r + 1
// new ones, r < swap_depth. Smaller swaps are always tried first, so the
// result for depth d + 1 never packs fewer sets than for depth d.
std::vector<int> PackingHeuristic(int universe_size,
                                  const std::vector<std::vector<int>>& sets,
                                  int swap_depth = 2);

struct CandidateStats {
  int alpha1 = 0;   // tracks with one link
  int alpha2 = 0;   // tracks with three links
  int alpha0 = 0;   // endpoints outside every track
  int alpha0e = 0;  // expensive leaves
  // Filled by CompareWithOptimum: size-1 tracks by how many of their ends
  // meet a size-1 track of the optimum packing.
  std::optional<std::vector<int>> alpha1_by_overlap;
};

struct Candidate {
  std::string name;  // "A", "B<q>", "C"
  std::vector<Track> tracks;
  LinkSet links;     // PAP link ids
  CreditLedger ledger;
  int cost_quarters = 0;
  CandidateStats stats;
  // Credits granted by the per-track scheme that rules (A)-(E) are
  // redistributed from.
  int redistribution_quarters = 0;
  bool invariants_ok = false;
};

struct StartOptions {
  int swap_depth = 2;
  bool run_a = true;
  bool run_b = true;
  bool run_c = true;
};

struct StartResult {
  EcpcInstance ecpc;  // shadow complete
  std::vector<Candidate> candidates;
  int best = -1;

  const Candidate& chosen() const { return candidates[best]; }
};

std::vector<Track> AlgorithmA(const PapInstance& instance, const EcpcInstance& ecpc,
                              int swap_depth = 2);
std::vector<Track> AlgorithmB(const PapInstance& instance, const EcpcInstance& ecpc,
                              int max_expensive, int swap_depth = 2);
std::vector<Track> AlgorithmC(const PapInstance& instance, const EcpcInstance& ecpc,
                              int swap_depth = 2);

Candidate EvaluateTracks(const PapInstance& instance, const EcpcInstance& ecpc,
                         std::string name, std::vector<Track> tracks);

// Throws InvalidInstance on single-vertex paths.
StartResult StartingSolution(const PapInstance& instance, const StartOptions& options = {});

// Per-overlap counts of the candidate's size-1 tracks against an optimum
// packing; returns counts for j = 0, 1, 2.
std::vector<int> OverlapWithOptimum(const Candidate& candidate,
                                    const std::vector<Track>& optimum);

struct FapBound {
  int cost_quarters = 0;     // best Algorithm B candidate
  double bound = 0;          // (7/4 + 0.001) opt + (opt - |P|)
  bool holds = false;
};

FapBound FapBoundCheck(const PapInstance& instance, int opt, int swap_depth = 2);

}  // namespace pap

#endif  // PAP_START_HPP_
