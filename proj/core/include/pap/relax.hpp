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


#ifndef PAP_RELAX_HPP_
#define PAP_RELAX_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pap/graph.hpp"

namespace pap {

// Every path has exactly three vertices: front 3p, interior 3p+1, back 3p+2.
// Links [0, num_original) correspond one-to-one with the links of the source
// PapInstance; shadows are appended after them.
struct EcpcInstance {
  int num_paths = 0;
  int num_original = 0;
  std::vector<Link> links;
  std::vector<int> original;         // per link: the link it shadows, or itself
  std::vector<bool> dummy_interior;  // per path
  bool shadow_complete = false;
  std::vector<std::vector<int>> incident;  // per vertex, loops excluded

  static int Front(int p) { return 3 * p; }
  static int Interior(int p) { return 3 * p + 1; }
  static int Back(int p) { return 3 * p + 2; }
  static int PathOf(int v) { return v / 3; }
  static bool IsEndpoint(int v) { return v % 3 != 1; }
  static int OtherEndpoint(int v) { return v % 3 == 0 ? v + 2 : v - 2; }

  int num_vertices() const { return 3 * num_paths; }
  int num_links() const { return static_cast<int>(links.size()); }
  bool is_shadow(int id) const { return original[id] != id; }
  bool is_loop(int id) const { return links[id].u == links[id].v; }
  bool is_cross(int id) const {
    return PathOf(links[id].u) != PathOf(links[id].v);
  }
  int other(int id, int v) const {
    return links[id].u == v ? links[id].v : links[id].u;
  }
  // Lowest link id joining a and b, or -1.
  int find_link(int a, int b) const;
  void RebuildIncidence();
};

// Throws InvalidInstance on single-vertex paths.
EcpcInstance BuildEcpc(const PapInstance& instance);
// Adds the weaker links of every original link; a no-op on complete input.
EcpcInstance ShadowComplete(EcpcInstance instance);

bool IsEcpcFeasible(const EcpcInstance& instance, std::span<const int> links);
// Drops links while feasibility holds, scanning in the given order (default
// increasing id) until no link can be dropped.
LinkSet Minimalize(const EcpcInstance& instance, LinkSet links,
                   std::span<const int> order = {});

// Rewrites a feasible solution of the shadow-complete instance into one
// without shadows and no more links. Throws std::invalid_argument if the
// input is infeasible and std::runtime_error if no repair applies.
LinkSet Deshadow(const EcpcInstance& instance, LinkSet links);

struct Track {
  std::vector<int> q;         // links along the path, in order
  std::vector<int> i;         // one closing link per crossed path
  std::vector<int> sequence;  // vertices of the path, in order
  std::vector<int> vertices;  // sorted V(T)

  int size() const { return static_cast<int>(q.size() + i.size()); }
  std::vector<int> links() const;
};

// Returns nullopt with a reason when the links do not form a track.
std::optional<Track> ValidateTrack(const EcpcInstance& instance,
                                   std::span<const int> links,
                                   std::string* reason = nullptr);
bool TracksDisjoint(const std::vector<Track>& tracks);

// All tracks with at most max_links links. Parallel links are collapsed to
// the lowest id and each vertex sequence appears once.
std::vector<Track> EnumerateTracks(const EcpcInstance& instance, int max_links);

// Track links plus one cross-path link for every endpoint left uncovered.
// Throws std::invalid_argument on overlapping tracks or an endpoint without a
// cross-path link.
LinkSet TracksToCover(const EcpcInstance& instance,
                      const std::vector<Track>& tracks);

struct TrackExtraction {
  std::vector<Track> tracks;
  LinkSet remaining;             // links left after the removal steps
  std::vector<int> tokens;       // per vertex
  int total_tokens = 0;
  std::vector<std::string> log;  // one line per removal or substitution
  std::vector<std::string> violations;
};

// Token-based removal of links from a minimal feasible solution until the
// rest decomposes into disjoint tracks. Throws std::invalid_argument when the
// input is infeasible or not minimal.
TrackExtraction CoverToTracks(const EcpcInstance& instance, LinkSet links);

std::string FormatTrack(const EcpcInstance& instance, const Track& track);

}  // namespace pap

#endif  // PAP_RELAX_HPP_
