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

#include "kpvcr/forest.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "kpvcr/errors.hpp"

namespace kpvcr {
namespace {

// Farthest vertex from `start` inside its component, with the distance.
std::pair<int, int> Farthest(const std::vector<std::vector<int>>& adj,
                             int start, std::vector<int>& dist) {
  std::deque<int> queue{start};
  dist[start] = 0;
  std::vector<int> touched{start};
  int best = start;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (dist[x] > dist[best] || (dist[x] == dist[best] && x < best)) best = x;
    for (int y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        touched.push_back(y);
        queue.push_back(y);
      }
    }
  }
  int d = dist[best];
  for (int x : touched) dist[x] = -1;
  return {best, d};
}

}  // namespace

CaterpillarForest CaterpillarForest::Build(
    std::uint32_t spine_length,
    const std::map<std::uint32_t, std::uint32_t>& leaf_counts) {
  if (spine_length == 0) throw InputError("spine length must be positive");
  std::vector<VertexId> ids;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::uint32_t i = 1; i <= spine_length; ++i) {
    ids.push_back(VertexId::Spine(i));
    if (i > 1) edges.emplace_back(VertexId::Spine(i - 1), VertexId::Spine(i));
  }
  for (auto [pos, count] : leaf_counts) {
    if (pos == 0 || pos > spine_length) {
      throw InputError("leaf position " + std::to_string(pos) +
                       " outside spine of length " +
                       std::to_string(spine_length));
    }
    for (std::uint32_t j = 1; j <= count; ++j) {
      ids.push_back(VertexId::Leaf(pos, j));
      edges.emplace_back(VertexId::Spine(pos), VertexId::Leaf(pos, j));
    }
  }
  return FromEdges(std::move(ids), edges);
}

CaterpillarForest CaterpillarForest::FromEdges(
    std::vector<VertexId> ids,
    std::span<const std::pair<VertexId, VertexId>> edges) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw InputError("duplicate vertex id");
  }
  auto lookup = [&](VertexId v) {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) {
      throw InputError("edge endpoint " + v.str() + " is not a vertex");
    }
    return static_cast<int>(it - ids.begin());
  };
  std::vector<std::vector<int>> adj(ids.size());
  for (auto [a, b] : edges) {
    int x = lookup(a), y = lookup(b);
    if (x == y) throw InputError("self-loop at " + a.str());
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw InputError("parallel edges");
    }
  }
  return FromAdjacency(std::move(ids), std::move(adj));
}

CaterpillarForest CaterpillarForest::FromAdjacency(
    std::vector<VertexId> ids, std::vector<std::vector<int>> adj) {
  CaterpillarForest f;
  f.ids_ = std::move(ids);
  f.adj_ = std::move(adj);
  f.canonicalize();
  return f;
}

void CaterpillarForest::canonicalize() {
  const int n = static_cast<int>(ids_.size());
  component_of_.assign(n, -1);
  spine_pos_.assign(n, -1);
  attach_.assign(n, -1);
  leaves_.assign(n, {});
  components_.clear();

  std::size_t edges = 0;
  for (const auto& row : adj_) edges += row.size();
  edges /= 2;

  for (int root = 0; root < n; ++root) {
    if (component_of_[root] >= 0) continue;
    const int c = static_cast<int>(components_.size());
    Component comp;
    std::vector<int> stack{root};
    component_of_[root] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.vertices.push_back(x);
      for (int y : adj_[x]) {
        if (component_of_[y] < 0) {
          component_of_[y] = c;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());

    std::vector<int> internal;
    for (int x : comp.vertices) {
      if (degree(x) >= 2) internal.push_back(x);
    }
    if (internal.empty()) {
      // One vertex, or a single edge whose larger label becomes the spine.
      comp.spine.push_back(comp.vertices.back());
    } else {
      auto internal_degree = [&](int x) {
        int d = 0;
        for (int y : adj_[x]) d += degree(y) >= 2;
        return d;
      };
      std::vector<int> ends;
      for (int x : internal) {
        int d = internal_degree(x);
        if (d > 2) throw InputError("component is not a caterpillar");
        if (d <= 1) ends.push_back(x);
      }
      if (ends.empty() || ends.size() > 2) {
        throw InputError("component is not a caterpillar");
      }
      int cur = std::min(ends.front(), ends.back()), prev = -1;
      while (cur >= 0) {
        comp.spine.push_back(cur);
        int next = -1;
        for (int y : adj_[cur]) {
          if (y != prev && degree(y) >= 2) next = y;
        }
        prev = cur;
        cur = next;
      }
      if (comp.spine.size() != internal.size()) {
        throw InputError("component is not a caterpillar");
      }
    }
    for (std::size_t p = 0; p < comp.spine.size(); ++p) {
      spine_pos_[comp.spine[p]] = static_cast<int>(p);
      attach_[comp.spine[p]] = comp.spine[p];
    }
    for (int x : comp.vertices) {
      if (spine_pos_[x] >= 0) continue;
      if (degree(x) != 1 || spine_pos_[adj_[x][0]] < 0) {
        throw InputError("component is not a caterpillar");
      }
      attach_[x] = adj_[x][0];
      leaves_[adj_[x][0]].push_back(x);
    }
    components_.push_back(std::move(comp));
  }
  // A forest on n vertices with c components has exactly n - c edges.
  if (edges + components_.size() != ids_.size()) {
    throw InputError("graph contains a cycle");
  }
}

std::optional<int> CaterpillarForest::find(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

int CaterpillarForest::index_of(VertexId v) const {
  auto idx = find(v);
  if (!idx) throw InputError("unknown vertex " + v.str());
  return *idx;
}

std::size_t CaterpillarForest::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adj_) total += row.size();
  return total / 2;
}

std::vector<std::pair<VertexId, VertexId>> CaterpillarForest::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (int x = 0; x < static_cast<int>(size()); ++x) {
    for (int y : adj_[x]) {
      if (x < y) out.emplace_back(ids_[x], ids_[y]);
    }
  }
  return out;
}

int CaterpillarForest::left(int s) const {
  const auto& spine = components_[component_of_[s]].spine;
  int p = spine_pos_[s];
  return p > 0 ? spine[p - 1] : s;
}

int CaterpillarForest::right(int s) const {
  const auto& spine = components_[component_of_[s]].spine;
  int p = spine_pos_[s];
  return p + 1 < static_cast<int>(spine.size()) ? spine[p + 1] : s;
}

int CaterpillarForest::dist_index(int u, int v) const {
  if (!same_component(u, v)) return -1;
  if (u == v) return 0;
  int pu = spine_pos_[attach_[u]], pv = spine_pos_[attach_[v]];
  return std::abs(pu - pv) + (is_leaf(u) ? 1 : 0) + (is_leaf(v) ? 1 : 0);
}

std::vector<int> CaterpillarForest::path_index(int u, int v) const {
  if (!same_component(u, v)) {
    throw PathError("no path between " + ids_[u].str() + " and " +
                    ids_[v].str() + ": different components");
  }
  std::vector<int> out{u};
  if (u == v) return out;
  const auto& spine = components_[component_of_[u]].spine;
  auto push = [&](int x) {
    if (out.back() != x) out.push_back(x);
  };
  int pu = spine_pos_[attach_[u]], pv = spine_pos_[attach_[v]];
  int step = pu <= pv ? 1 : -1;
  for (int p = pu;; p += step) {
    push(spine[p]);
    if (p == pv) break;
  }
  push(v);
  return out;
}

std::optional<std::size_t> CaterpillarForest::dist(VertexId u,
                                                    VertexId v) const {
  int d = dist_index(index_of(u), index_of(v));
  if (d < 0) return std::nullopt;
  return static_cast<std::size_t>(d);
}

std::vector<VertexId> CaterpillarForest::tree_path(VertexId u,
                                                   VertexId v) const {
  std::vector<VertexId> out;
  for (int x : path_index(index_of(u), index_of(v))) out.push_back(ids_[x]);
  return out;
}

std::size_t CaterpillarForest::longest_path_vertices(int component) const {
  std::vector<int> dist(size(), -1);
  int start = components_[component].vertices.front();
  auto [far, d0] = Farthest(adj_, start, dist);
  auto [other, d] = Farthest(adj_, far, dist);
  (void)d0;
  (void)other;
  return static_cast<std::size_t>(d) + 1;
}

std::size_t CaterpillarForest::longest_path_vertices() const {
  std::size_t best = 0;
  for (int c = 0; c < static_cast<int>(components_.size()); ++c) {
    best = std::max(best, longest_path_vertices(c));
  }
  return best;
}

CaterpillarForest CaterpillarForest::induced(std::span<const int> keep) const {
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> remap(size(), -1);
  std::vector<VertexId> ids;
  ids.reserve(sorted.size());
  for (int x : sorted) {
    remap[x] = static_cast<int>(ids.size());
    ids.push_back(ids_[x]);
  }
  std::vector<std::vector<int>> adj(sorted.size());
  for (int x : sorted) {
    for (int y : adj_[x]) {
      if (remap[y] >= 0) adj[remap[x]].push_back(remap[y]);
    }
  }
  return FromAdjacency(std::move(ids), std::move(adj));
}

CaterpillarForest CaterpillarForest::delete_vertices(
    const std::set<VertexId>& removed) const {
  std::vector<int> keep;
  keep.reserve(size());
  for (int x = 0; x < static_cast<int>(size()); ++x) {
    if (!removed.contains(ids_[x])) keep.push_back(x);
  }
  return induced(keep);
}

CaterpillarForest CaterpillarForest::component_forest(int component) const {
  return induced(components_[component].vertices);
}

}  // namespace kpvcr
