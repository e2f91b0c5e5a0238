// Copyright 2026 The kpvcr Authors
//
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

#include "kpvcr/rigidity.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>

#include "kpvcr/errors.hpp"

namespace kpvcr {

std::string_view Tag(RigidityReason reason) {
  switch (reason) {
    case RigidityReason::kIsolated:
      return "lemma-1a";
    case RigidityReason::kLeafOnRigid:
      return "lemma-1b";
    case RigidityReason::kNeighborsRigid:
      return "4a";
    case RigidityReason::kLeafStar:
      return "4b1";
    case RigidityReason::kNoAnchors:
      return "4b2";
    case RigidityReason::kAnchorsRigid:
      return "4b3";
    case RigidityReason::kNoFeed:
      return "4b4";
    case RigidityReason::kMovable:
      return "movable";
  }
  return "movable";
}

namespace detail {
namespace {

int FreeLeaves(const CaterpillarForest& g, std::span<const char> occ, int s) {
  int n = 0;
  for (int leaf : g.leaves(s)) n += !occ[leaf];
  return n;
}

const std::vector<int>& SpineOf(const CaterpillarForest& g, int v) {
  return g.component(g.component_of(v)).spine;
}

// Vertices on the longest token-free path that starts at u (or at a free
// leaf of u) and walks the spine in direction `step` without leaving the
// window. Zero when the neighbour in that direction is missing or occupied.
int SideLength(const CaterpillarForest& g, std::span<const char> occ, int u,
               Window w, int step) {
  const auto& spine = SpineOf(g, u);
  int p = g.spine_position(u);
  int steps = 0;
  for (int q = p + step; q >= w.first && q <= w.last && !occ[spine[q]];
       q += step) {
    ++steps;
  }
  if (steps == 0) return 0;
  int last = spine[p + step * steps];
  return (FreeLeaves(g, occ, u) > 0 ? 1 : 0) + 1 + steps +
         (FreeLeaves(g, occ, last) > 0 ? 1 : 0);
}

bool HasCenterPath(int k, int free_leaves) {
  return (k == 2 && free_leaves >= 1) || (k == 3 && free_leaves >= 2);
}

}  // namespace

std::vector<char> WindowMembers(const CaterpillarForest& g, int u, Window w) {
  std::vector<char> in(g.size(), 0);
  const auto& spine = SpineOf(g, u);
  for (int q = w.first; q <= w.last; ++q) {
    in[spine[q]] = 1;
    for (int leaf : g.leaves(spine[q])) in[leaf] = 1;
  }
  return in;
}

bool SatisfiesH1(const CaterpillarForest& g, std::span<const char> occ, int u,
                 Window w) {
  const auto& spine = SpineOf(g, u);
  for (int q = w.first; q <= w.last; ++q) {
    int s = spine[q];
    if (s == u) continue;
    if (occ[s]) return false;
    for (int leaf : g.leaves(s)) {
      if (occ[leaf]) return false;
    }
  }
  return true;
}

bool SatisfiesH2(const CaterpillarForest& g, std::span<const char> occ, int k,
                 int u, Window w) {
  bool left = SideLength(g, occ, u, w, -1) >= k;
  bool right = SideLength(g, occ, u, w, +1) >= k;
  int free = FreeLeaves(g, occ, u);
  if (left && right) return true;
  if (!left && !right) {
    // Two centre paths sharing at most u and one leaf.
    return (k == 3 && free >= 3) || (k == 2 && free >= 2);
  }
  return HasCenterPath(k, free);
}

std::vector<Window> SearchRegions(const CaterpillarForest& g,
                                  std::span<const char> occ, int k, int u) {
  const int len = static_cast<int>(SpineOf(g, u).size());
  const int p = g.spine_position(u);
  const int cap = 2 * k - 1;
  auto ok = [&](Window w) {
    return w.size() <= cap && SatisfiesH1(g, occ, u, w) &&
           SatisfiesH2(g, occ, k, u, w);
  };
  int reach = std::max(0, k - 3);
  Window w{std::max(0, p - reach), std::min(len - 1, p + reach)};
  while (w.size() <= cap) {
    if (ok(w)) return {w};
    bool has_left = w.first > 0;
    bool has_right = w.last < len - 1;
    if (!has_left && !has_right) return {};
    std::vector<Window> found;
    if (has_left && ok(Window{w.first - 1, w.last})) {
      found.push_back({w.first - 1, w.last});
    }
    if (has_right && ok(Window{w.first, w.last + 1})) {
      found.push_back({w.first, w.last + 1});
    }
    if (!found.empty()) return found;
    w = Window{w.first - (has_left ? 1 : 0), w.last + (has_right ? 1 : 0)};
  }
  return {};
}

std::vector<int> Anchors(const CaterpillarForest& g, std::span<const char> occ,
                         int k, int u) {
  std::vector<int> out;
  std::vector<int> dist(g.size(), -1);
  std::deque<int> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : g.neighbors(x)) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      if (dist[y] > k) continue;
      if (occ[y]) {
        bool leaf_of_u = g.is_leaf(y) && g.attachment(y) == u;
        if (!leaf_of_u) out.push_back(y);
        continue;
      }
      queue.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CanFeed(const CaterpillarForest& g, std::span<const char> occ_in, int k,
             int u, std::span<const char> region, int v,
             const std::function<bool(int)>& rigid_in_gv) {
  std::vector<char> occ(occ_in.begin(), occ_in.end());
  auto slide = [&](int from, int to) {
    occ[from] = 0;
    occ[to] = 1;
  };
  // A token on a leaf first steps onto its spine neighbour, which lies on
  // the token-free path towards u.
  if (g.is_leaf(v)) {
    int w = g.attachment(v);
    if (region[w]) return true;
    slide(v, w);
    v = w;
  }
  int d = g.dist_index(u, v);
  if (d < k - 2 || d > k) {
    throw std::logic_error("anchor " + g.id(v).str() + " at distance " +
                           std::to_string(d) + " from " + g.id(u).str());
  }
  if (d == k) {
    // The only slide available to it is one step towards u.
    int x = g.path_index(v, u)[1];
    if (region[x]) return true;
    slide(v, x);
    v = x;
  }

  // Tokens found rigid in G - u are taken out together with their vertex;
  // the search restarts on what is left around v.
  std::vector<char> blocked(g.size(), 0);
  const VertexId vid = g.id(v);
  for (;;) {
    std::vector<char> in_gv(g.size(), 0);
    std::vector<int> stack{v};
    in_gv[v] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x)) {
        if (y != u && !blocked[y] && !in_gv[y]) {
          in_gv[y] = 1;
          stack.push_back(y);
        }
      }
    }
    bool touches_region = false;
    for (int x = 0; x < static_cast<int>(g.size()); ++x) {
      bool closed_leaf_of_u = x == u || (g.is_leaf(x) && g.attachment(x) == u);
      if (in_gv[x] && region[x] && !closed_leaf_of_u) touches_region = true;
    }
    if (!touches_region) return false;

    std::vector<int> hv;
    int root = -1;
    for (int x = 0; x < static_cast<int>(g.size()); ++x) {
      if (!in_gv[x] || region[x]) continue;
      hv.push_back(x);
      if (g.is_spine(x) &&
          (root < 0 || g.dist_index(u, x) > g.dist_index(u, root))) {
        root = x;
      }
    }
    CaterpillarForest hforest = g.induced(hv);
    PartitionResult parts = partition(hforest, k, g.id(root));
    if (parts.psi() == 0) {
      // H_v has no k-path; the token can walk straight into the region.
      return true;
    }
    const auto& first = parts.pieces.front();
    if (!std::binary_search(first.begin(), first.end(), vid)) {
      throw std::logic_error("anchor " + vid.str() + " lies outside T_1");
    }
    std::size_t surplus = parts.pieces.size();
    for (std::size_t i = 0; i < parts.pieces.size(); ++i) {
      int tokens = 0;
      for (VertexId x : parts.pieces[i]) tokens += occ[g.index_of(x)];
      if (tokens >= 2) {
        surplus = i;
        break;
      }
    }
    if (surplus == parts.pieces.size()) return false;
    bool stuck = false;
    for (std::size_t i = 0; i <= surplus; ++i) {
      for (VertexId x : parts.pieces[i]) {
        int xi = g.index_of(x);
        if (occ[xi] && xi != v && rigid_in_gv(xi)) {
          blocked[xi] = 1;
          stuck = true;
        }
      }
    }
    if (!stuck) return true;
  }
}

RigidityEngine::RigidityEngine(const CaterpillarForest& base,
                               std::span<const char> occ, int k)
    : base_(base), occ_(occ.begin(), occ.end()), k_(k) {}

RigidityVerdict RigidityEngine::Query(int vertex) {
  return QueryIn(base_.component(base_.component_of(vertex)).vertices,
                  vertex);
}

std::vector<int> RigidityEngine::SideComponent(const CaterpillarForest& g,
                                               const std::vector<int>& comp,
                                               int removed, int start) const {
  std::vector<char> seen(g.size(), 0);
  std::vector<int> stack{start}, out;
  seen[start] = 1;
  seen[removed] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(comp[x]);
    for (int y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RigidityVerdict RigidityEngine::QueryIn(const std::vector<int>& comp,
                                         int vertex) {
  auto key = std::make_pair(comp, vertex);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  // Local forest for this component; local index i is base vertex comp[i].
  std::optional<CaterpillarForest> owned;
  const CaterpillarForest* gp = &base_;
  std::vector<int> identity;
  const std::vector<int>* map = &comp;
  if (comp.size() == base_.size()) {
    identity.resize(comp.size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = int(i);
    map = &identity;
  } else {
    owned = base_.induced(comp);
    gp = &*owned;
  }
  const CaterpillarForest& g = *gp;
  std::vector<char> occ(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) occ[i] = occ_[comp[i]];
  const int u = static_cast<int>(
      std::lower_bound(comp.begin(), comp.end(), vertex) - comp.begin());

  auto rigid_in_g_minus_u = [&](int v) {
    return QueryIn(SideComponent(g, *map, u, v), (*map)[v]).rigid;
  };

  RigidityVerdict verdict;
  if (g.degree(u) == 0) {
    verdict = {true, RigidityReason::kIsolated};
  } else if (g.degree(u) == 1) {
    int v = g.neighbors(u)[0];
    if (occ[v] && rigid_in_g_minus_u(v)) {
      verdict = {true, RigidityReason::kLeafOnRigid};
    }
  } else {
    bool all_occupied = true;
    for (int v : g.neighbors(u)) all_occupied = all_occupied && occ[v];
    bool neighbors_rigid = all_occupied;
    if (all_occupied) {
      for (int v : g.neighbors(u)) {
        if (!rigid_in_g_minus_u(v)) {
          neighbors_rigid = false;
          break;
        }
      }
    }
    if (neighbors_rigid) {
      verdict = {true, RigidityReason::kNeighborsRigid};
    } else {
      std::vector<Window> regions = SearchRegions(g, occ, k_, u);
      if (!regions.empty()) {
        // k >= 4 leaves at most one region.
        std::vector<char> region = WindowMembers(g, u, regions.front());
        std::vector<int> anchors = Anchors(g, occ, k_, u);
        bool fed = false, all_rigid = true;
        for (int v : anchors) {
          if (rigid_in_g_minus_u(v)) continue;
          all_rigid = false;
          if (CanFeed(g, occ, k_, u, region, v, rigid_in_g_minus_u)) {
            fed = true;
            break;
          }
        }
        if (!fed) {
          verdict.rigid = true;
          verdict.reason = anchors.empty() ? RigidityReason::kNoAnchors
                           : all_rigid     ? RigidityReason::kAnchorsRigid
                                           : RigidityReason::kNoFeed;
        }
      }
    }
  }
  memo_.emplace(std::move(key), verdict);
  return verdict;
}

}  // namespace detail

namespace {

void RequireK4(int k) {
  if (k <= 3) {
    throw UnsupportedParameter(
        "rigidity is only decided for k >= 4; k = " + std::to_string(k) +
        " is an open case");
  }
}

int OccupiedSpine(const CaterpillarForest& forest,
                  std::span<const char> occ, VertexId u) {
  int x = forest.index_of(u);
  if (!occ[x]) throw InputError(u.str() + " carries no token");
  if (!forest.is_spine(x) || forest.degree(x) < 2) {
    throw InputError(u.str() + " is not an internal spine vertex");
  }
  return x;
}

bool AllowedIntersection(const CaterpillarForest& g, int u, const KPath& p,
                         const KPath& q) {
  std::set<VertexId> a(p.begin(), p.end());
  int shared_leaves = 0;
  bool has_u = false;
  for (VertexId x : q) {
    if (!a.contains(x)) continue;
    int xi = g.index_of(x);
    if (xi == u) {
      has_u = true;
    } else if (g.is_leaf(xi) && g.attachment(xi) == u) {
      ++shared_leaves;
    } else {
      return false;
    }
  }
  return has_u && shared_leaves <= 1;
}

}  // namespace

PathClassification classify_k_paths(const CaterpillarForest& forest,
                                    const TokenSet& tokens, VertexId u_id,
                                    const std::set<VertexId>* within) {
  auto occ = Occupancy(forest, tokens.occupied);
  const int u = OccupiedSpine(forest, occ, u_id);
  const int k = tokens.k;
  const auto& spine = forest.component(forest.component_of(u)).spine;
  const int p = forest.spine_position(u);
  const int lu = p > 0 ? spine[p - 1] : -1;
  const int ru = p + 1 < static_cast<int>(spine.size()) ? spine[p + 1] : -1;
  auto allowed = [&](int x) {
    if (within && !within->contains(forest.id(x))) return false;
    return x == u || !occ[x];
  };

  std::set<std::vector<int>> seen;
  PathClassification out;
  std::vector<int> path;
  std::vector<char> on_path(forest.size(), 0);
  auto record = [&] {
    std::vector<int> key = path;
    std::vector<int> rev(path.rbegin(), path.rend());
    // Orient from the end that lies in L[u]; centre paths have both ends
    // there and are oriented from the smaller label.
    auto in_closed = [&](int x) {
      return x == u || (forest.is_leaf(x) && forest.attachment(x) == u);
    };
    if (!in_closed(key.front()) || (in_closed(rev.front()) && rev < key)) {
      key = rev;
    }
    if (!seen.insert(key).second) return;
    KPath labelled;
    bool has_l = false, has_r = false;
    for (int x : key) {
      labelled.push_back(forest.id(x));
      has_l = has_l || x == lu;
      has_r = has_r || x == ru;
    }
    if (has_l) {
      out.left.push_back(std::move(labelled));
    } else if (has_r) {
      out.right.push_back(std::move(labelled));
    } else {
      out.center.push_back(std::move(labelled));
    }
  };
  auto extend = [&](auto&& self, int x) -> void {
    if (static_cast<int>(path.size()) == k) {
      record();
      return;
    }
    for (int y : forest.neighbors(x)) {
      if (on_path[y] || !allowed(y)) continue;
      on_path[y] = 1;
      path.push_back(y);
      self(self, y);
      path.pop_back();
      on_path[y] = 0;
    }
  };
  std::vector<int> starts;
  if (allowed(u)) starts.push_back(u);
  for (int leaf : forest.leaves(u)) {
    if (allowed(leaf)) starts.push_back(leaf);
  }
  for (int s : starts) {
    path.assign(1, s);
    on_path[s] = 1;
    if (k == 1) {
      record();
    } else {
      extend(extend, s);
    }
    on_path[s] = 0;
  }
  for (auto* bucket : {&out.left, &out.right, &out.center}) {
    std::sort(bucket->begin(), bucket->end());
  }
  return out;
}

std::vector<HRegion> find_h_regions(const CaterpillarForest& forest,
                                    const TokenSet& tokens, VertexId u_id) {
  if (tokens.k < 3) throw InputError("H-regions need k >= 3");
  auto occ = Occupancy(forest, tokens.occupied);
  const int u = OccupiedSpine(forest, occ, u_id);
  const auto& spine = forest.component(forest.component_of(u)).spine;
  std::vector<HRegion> out;
  for (detail::Window w : detail::SearchRegions(forest, occ, tokens.k, u)) {
    HRegion region;
    auto members = detail::WindowMembers(forest, u, w);
    for (std::size_t x = 0; x < members.size(); ++x) {
      if (members[x]) region.vertices.insert(forest.id(static_cast<int>(x)));
    }
    region.first_spine = forest.id(spine[w.first]);
    region.last_spine = forest.id(spine[w.last]);
    region.spine_size = static_cast<std::size_t>(w.size());
    PathClassification paths =
        classify_k_paths(forest, tokens, u_id, &region.vertices);
    std::vector<KPath> all;
    for (auto* bucket : {&paths.left, &paths.right, &paths.center}) {
      all.insert(all.end(), bucket->begin(), bucket->end());
    }
    bool done = false;
    for (std::size_t i = 0; i < all.size() && !done; ++i) {
      for (std::size_t j = i + 1; j < all.size() && !done; ++j) {
        if (AllowedIntersection(forest, u, all[i], all[j])) {
          region.path_p = all[i];
          region.path_q = all[j];
          done = true;
        }
      }
    }
    if (!done) throw std::logic_error("region without witness paths");
    out.push_back(std::move(region));
  }
  return out;
}

std::set<VertexId> anchor_set(const CaterpillarForest& forest,
                              const TokenSet& tokens, VertexId u_id) {
  auto occ = Occupancy(forest, tokens.occupied);
  const int u = OccupiedSpine(forest, occ, u_id);
  std::set<VertexId> out;
  for (int v : detail::Anchors(forest, occ, tokens.k, u)) {
    out.insert(forest.id(v));
  }
  return out;
}

bool can_feed_region(const CaterpillarForest& forest, const TokenSet& tokens,
                     VertexId u_id, const HRegion& region, VertexId v_id) {
  RequireK4(tokens.k);
  auto occ = Occupancy(forest, tokens.occupied);
  const int u = OccupiedSpine(forest, occ, u_id);
  if (!region.vertices.contains(u_id)) {
    throw InputError("region does not contain " + u_id.str());
  }
  const int v = forest.index_of(v_id);
  auto anchors = detail::Anchors(forest, occ, tokens.k, u);
  if (!std::binary_search(anchors.begin(), anchors.end(), v)) {
    throw InputError(v_id.str() + " is not an anchor of " + u_id.str());
  }
  std::vector<char> members(forest.size(), 0);
  for (VertexId x : region.vertices) members[forest.index_of(x)] = 1;
  detail::RigidityEngine engine(forest, occ, tokens.k);
  auto rigid_in_gv = [&](int x) {
    std::vector<char> seen(forest.size(), 0);
    std::vector<int> stack{x}, comp;
    seen[x] = seen[u] = 1;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      comp.push_back(y);
      for (int z : forest.neighbors(y)) {
        if (!seen[z]) {
          seen[z] = 1;
          stack.push_back(z);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    return engine.QueryIn(comp, x).rigid;
  };
  // A token stuck for good in G - u feeds nothing.
  if (rigid_in_gv(v)) return false;
  return detail::CanFeed(forest, occ, tokens.k, u, members, v, rigid_in_gv);
}

RigidityVerdict is_rigid(const CaterpillarForest& forest,
                         const TokenSet& tokens, VertexId u) {
  RequireK4(tokens.k);
  auto occ = Occupancy(forest, tokens.occupied);
  if (!is_kpvc(forest, occ, tokens.k)) {
    throw InputError("tokens do not form a k-path vertex cover");
  }
  int x = forest.index_of(u);
  if (!occ[x]) throw InputError(u.str() + " carries no token");
  detail::RigidityEngine engine(forest, occ, tokens.k);
  return engine.Query(x);
}

RigidReport rigid_set(const CaterpillarForest& forest,
                      const TokenSet& tokens) {
  RequireK4(tokens.k);
  auto occ = Occupancy(forest, tokens.occupied);
  if (!is_kpvc(forest, occ, tokens.k)) {
    throw InputError("tokens do not form a k-path vertex cover");
  }
  detail::RigidityEngine engine(forest, occ, tokens.k);
  RigidReport report;
  for (VertexId v : tokens.occupied) {
    RigidityVerdict verdict = engine.Query(forest.index_of(v));
    report.reasons[v] = verdict.reason;
    if (verdict.rigid) report.rigid.insert(v);
  }
  return report;
}

}  // namespace kpvcr
