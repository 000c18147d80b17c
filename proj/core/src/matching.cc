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

#include "pap/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace pap {
namespace {

// Edmonds' weighted matching with explicit dual variables. Endpoint p of edge
// k is 2k or 2k+1; endpoint_[p] is the vertex, p ^ 1 the opposite end.
class BlossomSolver {
 public:
  BlossomSolver(int n, const std::vector<WeightedEdge>& edges, bool max_card)
      : n_(n), max_cardinality_(max_card) {
    const int m = static_cast<int>(edges.size());
    std::int64_t max_weight = 0;
    for (const auto& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
        throw std::invalid_argument("bad matching edge");
      }
      ends_.push_back({e.u, e.v});
      // Doubling keeps every dual update integral.
      weight_.push_back(2 * e.weight);
      max_weight = std::max(max_weight, 2 * e.weight);
    }
    endpoint_.resize(2 * m);
    for (int p = 0; p < 2 * m; ++p) endpoint_[p] = p % 2 == 0 ? ends_[p / 2].first : ends_[p / 2].second;
    neighbend_.assign(n, {});
    for (int k = 0; k < m; ++k) {
      neighbend_[ends_[k].first].push_back(2 * k + 1);
      neighbend_[ends_[k].second].push_back(2 * k);
    }
    mate_.assign(n, -1);
    label_.assign(2 * n, 0);
    labelend_.assign(2 * n, -1);
    inblossom_.resize(n);
    for (int v = 0; v < n; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * n, -1);
    blossomchilds_.assign(2 * n, {});
    blossombase_.assign(2 * n, -1);
    for (int v = 0; v < n; ++v) blossombase_[v] = v;
    blossomendps_.assign(2 * n, {});
    bestedge_.assign(2 * n, -1);
    blossombestedges_.assign(2 * n, {});
    has_bestedges_.assign(2 * n, false);
    for (int b = 2 * n - 1; b >= n; --b) unused_.push_back(b);
    dualvar_.assign(2 * n, 0);
    for (int v = 0; v < n; ++v) dualvar_[v] = max_weight;
    allowedge_.assign(m, false);
  }

  std::vector<int> Solve() {
    for (int stage = 0; stage < n_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = n_; b < 2 * n_; ++b) {
        blossombestedges_[b].clear();
        has_bestedges_[b] = false;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), false);
      queue_.clear();
      for (int v = 0; v < n_; ++v) {
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) AssignLabel(v, 1, -1);
      }
      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            int k = p / 2;
            int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            std::int64_t kslack = 0;
            if (!allowedge_[k]) {
              kslack = Slack(k);
              if (kslack <= 0) allowedge_[k] = true;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                AssignLabel(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                int base = ScanBlossom(v, w);
                if (base >= 0) {
                  AddBlossom(base, k);
                } else {
                  AugmentMatching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < Slack(bestedge_[b])) bestedge_[b] = k;
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < Slack(bestedge_[w])) bestedge_[w] = k;
            }
          }
        }
        if (augmented) break;

        int deltatype = -1;
        std::int64_t delta = 0;
        int deltaedge = -1, deltablossom = -1;
        if (!max_cardinality_) {
          deltatype = 1;
          delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
        }
        for (int v = 0; v < n_; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            std::int64_t d = Slack(bestedge_[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * n_; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            std::int64_t d = Slack(bestedge_[b]) / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
              (deltatype == -1 || dualvar_[b] < delta)) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          deltatype = 1;
          delta = std::max<std::int64_t>(
              0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
        }
        for (int v = 0; v < n_; ++v) {
          if (label_[inblossom_[v]] == 1) {
            dualvar_[v] -= delta;
          } else if (label_[inblossom_[v]] == 2) {
            dualvar_[v] += delta;
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1) {
              dualvar_[b] += delta;
            } else if (label_[b] == 2) {
              dualvar_[b] -= delta;
            }
          }
        }
        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowedge_[deltaedge] = true;
          int i = ends_[deltaedge].first, j = ends_[deltaedge].second;
          if (label_[inblossom_[i]] == 0) std::swap(i, j);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = true;
          queue_.push_back(ends_[deltaedge].first);
        } else {
          ExpandBlossom(deltablossom, false);
        }
      }
      if (!augmented) break;
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
            dualvar_[b] == 0) {
          ExpandBlossom(b, true);
        }
      }
    }
    std::vector<int> mate(n_, -1);
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) mate[v] = endpoint_[mate_[v]];
    }
    return mate;
  }

 private:
  std::int64_t Slack(int k) const {
    return dualvar_[ends_[k].first] + dualvar_[ends_[k].second] - 2 * weight_[k];
  }

  void Leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) Leaves(t, out);
  }

  std::vector<int> Leaves(int b) const {
    std::vector<int> out;
    Leaves(b, out);
    return out;
  }

  static int Wrap(int j, int size) { return ((j % size) + size) % size; }

  void AssignLabel(int w, int t, int p) {
    int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      Leaves(b, queue_);
    } else if (t == 2) {
      int base = blossombase_[b];
      AssignLabel(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  int ScanBlossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void AddBlossom(int base, int k) {
    int v = ends_[k].first, w = ends_[k].second;
    int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    int b = unused_.back();
    unused_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    std::vector<int> path, endps;
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    blossomchilds_[b] = path;
    blossomendps_[b] = endps;
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    for (int leaf : Leaves(b)) {
      if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }
    std::vector<int> bestedgeto(2 * n_, -1);
    for (int child : path) {
      std::vector<std::vector<int>> nblists;
      if (!has_bestedges_[child]) {
        for (int leaf : Leaves(child)) {
          std::vector<int> list;
          for (int p : neighbend_[leaf]) list.push_back(p / 2);
          nblists.push_back(std::move(list));
        }
      } else {
        nblists.push_back(blossombestedges_[child]);
      }
      for (const auto& nblist : nblists) {
        for (int kk : nblist) {
          int i = ends_[kk].first, j = ends_[kk].second;
          if (inblossom_[j] == b) std::swap(i, j);
          int bj = inblossom_[j];
          if (bj != b && label_[bj] == 1 &&
              (bestedgeto[bj] == -1 || Slack(kk) < Slack(bestedgeto[bj]))) {
            bestedgeto[bj] = kk;
          }
        }
      }
      blossombestedges_[child].clear();
      has_bestedges_[child] = false;
      bestedge_[child] = -1;
    }
    blossombestedges_[b].clear();
    for (int kk : bestedgeto) {
      if (kk != -1) blossombestedges_[b].push_back(kk);
    }
    has_bestedges_[b] = true;
    bestedge_[b] = -1;
    for (int kk : blossombestedges_[b]) {
      if (bestedge_[b] == -1 || Slack(kk) < Slack(bestedge_[b])) bestedge_[b] = kk;
    }
  }

  void ExpandBlossom(int b, bool endstage) {
    for (int s : blossomchilds_[b]) {
      blossomparent_[s] = -1;
      if (s < n_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        ExpandBlossom(s, endstage);
      } else {
        for (int leaf : Leaves(s)) inblossom_[leaf] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      const auto& childs = blossomchilds_[b];
      const auto& endps = blossomendps_[b];
      const int size = static_cast<int>(childs.size());
      int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) -
                               childs.begin());
      int jstep, endptrick;
      if (j & 1) {
        j -= size;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[endps[Wrap(j - endptrick, size)] ^ endptrick ^ 1]] = 0;
        AssignLabel(endpoint_[p ^ 1], 2, p);
        allowedge_[endps[Wrap(j - endptrick, size)] / 2] = true;
        j += jstep;
        p = endps[Wrap(j - endptrick, size)] ^ endptrick;
        allowedge_[p / 2] = true;
        j += jstep;
      }
      int bv = childs[Wrap(j, size)];
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (childs[Wrap(j, size)] != entrychild) {
        bv = childs[Wrap(j, size)];
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int found = -1;
        for (int leaf : Leaves(bv)) {
          found = leaf;
          if (label_[leaf] != 0) break;
        }
        if (found >= 0 && label_[found] != 0) {
          label_[found] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          AssignLabel(found, 2, labelend_[found]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = false;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  void AugmentBlossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= n_) AugmentBlossom(t, v);
    auto& childs = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    const int size = static_cast<int>(childs.size());
    int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
      j -= size;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = childs[Wrap(j, size)];
      int p = endps[Wrap(j - endptrick, size)] ^ endptrick;
      if (t >= n_) AugmentBlossom(t, endpoint_[p]);
      j += jstep;
      t = childs[Wrap(j, size)];
      if (t >= n_) AugmentBlossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossombase_[b] = blossombase_[childs[0]];
  }

  void AugmentMatching(int k) {
    int v = ends_[k].first, w = ends_[k].second;
    for (auto [s, p] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
      while (true) {
        int bs = inblossom_[s];
        if (bs >= n_) AugmentBlossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        int t = endpoint_[labelend_[bs]];
        int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= n_) AugmentBlossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int n_;
  bool max_cardinality_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<std::int64_t> weight_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<bool> has_bestedges_;
  std::vector<int> unused_;
  std::vector<std::int64_t> dualvar_;
  std::vector<bool> allowedge_;
  std::vector<int> queue_;
};

// Maps a mate vector back to edge indices, preferring the lowest index among
// parallel edges.
std::vector<int> MateToEdges(const MatchingProblem& problem,
                             const std::vector<int>& mate) {
  std::vector<int> out;
  std::vector<char> done(problem.num_vertices, 0);
  for (int e = 0; e < static_cast<int>(problem.edges.size()); ++e) {
    auto [a, b] = problem.edges[e];
    if (a < problem.num_vertices && mate[a] == b && !done[a] && !done[b]) {
      done[a] = done[b] = 1;
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace

std::vector<int> MaxWeightMatching(int num_vertices,
                                   const std::vector<WeightedEdge>& edges,
                                   bool max_cardinality) {
  if (num_vertices == 0 || edges.empty()) return std::vector<int>(num_vertices, -1);
  BlossomSolver solver(num_vertices, edges, max_cardinality);
  return solver.Solve();
}

bool IsMatching(const MatchingProblem& problem, const std::vector<int>& edges) {
  std::vector<char> used(problem.num_vertices, 0);
  for (int e : edges) {
    auto [a, b] = problem.edges[e];
    if (a == b || used[a] || used[b]) return false;
    used[a] = used[b] = 1;
  }
  return true;
}

std::int64_t MatchingCost(const MatchingProblem& problem,
                          const std::vector<int>& edges) {
  std::int64_t total = 0;
  for (int e : edges) total += problem.cost(e);
  return total;
}

std::vector<int> MaxMatching(const MatchingProblem& problem) {
  std::vector<WeightedEdge> weighted;
  for (auto [a, b] : problem.edges) {
    if (a != b) weighted.push_back({a, b, 1});
  }
  auto mate = MaxWeightMatching(problem.num_vertices, weighted, true);
  return MateToEdges(problem, mate);
}

std::optional<std::vector<int>> MinCostMatchingExactSize(
    const MatchingProblem& problem, int k) {
  const int m = problem.num_vertices;
  if (k < 0 || 2 * k > m) return std::nullopt;
  if (k == 0) return std::vector<int>{};
  std::int64_t max_cost = 0;
  for (size_t e = 0; e < problem.edges.size(); ++e) {
    if (problem.cost(static_cast<int>(e)) < 0) {
      throw std::invalid_argument("negative matching cost");
    }
    max_cost = std::max(max_cost, problem.cost(static_cast<int>(e)));
  }
  // Cheapest parallel copy per vertex pair.
  std::vector<int> best(problem.edges.size(), -1);
  std::vector<WeightedEdge> weighted;
  std::vector<int> weighted_origin;
  {
    std::vector<std::pair<std::pair<int, int>, int>> keyed;
    for (int e = 0; e < static_cast<int>(problem.edges.size()); ++e) {
      auto [a, b] = problem.edges[e];
      if (a == b) continue;
      keyed.push_back({{std::min(a, b), std::max(a, b)}, e});
    }
    std::sort(keyed.begin(), keyed.end(), [&](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      if (problem.cost(x.second) != problem.cost(y.second)) {
        return problem.cost(x.second) < problem.cost(y.second);
      }
      return x.second < y.second;
    });
    for (size_t i = 0; i < keyed.size(); ++i) {
      if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
      int e = keyed[i].second;
      weighted.push_back({keyed[i].first.first, keyed[i].first.second,
                          max_cost + 1 - problem.cost(e)});
      weighted_origin.push_back(e);
    }
  }
  const int dummies = m - 2 * k;
  for (int d = 0; d < dummies; ++d) {
    for (int v = 0; v < m; ++v) {
      weighted.push_back({m + d, v, max_cost + 1});
      weighted_origin.push_back(-1);
    }
  }
  auto mate = MaxWeightMatching(m + dummies, weighted, true);
  for (int v = 0; v < m + dummies; ++v) {
    if (mate[v] == -1) return std::nullopt;
  }
  std::vector<int> out;
  for (size_t i = 0; i < weighted.size(); ++i) {
    if (weighted_origin[i] < 0) continue;
    const auto& w = weighted[i];
    if (mate[w.u] == w.v) out.push_back(weighted_origin[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> MaxMatchingBoundedExpensive(const MatchingProblem& problem,
                                             int max_expensive) {
  if (max_expensive < 0) throw std::invalid_argument("negative expensive budget");
  MatchingProblem flagged = problem;
  flagged.costs.assign(problem.edges.size(), 0);
  for (size_t e = 0; e < problem.edges.size(); ++e) {
    flagged.costs[e] = problem.is_expensive(static_cast<int>(e)) ? 1 : 0;
  }
  const int upper = static_cast<int>(MaxMatching(problem).size());
  for (int k = upper; k > 0; --k) {
    auto m = MinCostMatchingExactSize(flagged, k);
    if (m && MatchingCost(flagged, *m) <= max_expensive) return *m;
  }
  return {};
}

}  // namespace pap
