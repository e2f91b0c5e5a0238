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

#include "kpvcr/cover.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "kpvcr/errors.hpp"

namespace kpvcr {
namespace {

void CheckK(int k) {
  if (k < 2) throw InputError("k must be at least 2, got " + std::to_string(k));
}

// Longest path (in vertices) over the components of the forest restricted
// to unblocked vertices, by double breadth-first search.
std::size_t LongestFreePath(const CaterpillarForest& forest,
                            std::span<const char> blocked) {
  const int n = static_cast<int>(forest.size());
  std::vector<int> dist(n, -1);
  std::vector<char> seen(n, 0);
  std::deque<int> queue;
  std::vector<int> touched;
  auto sweep = [&](int start) {
    queue.assign(1, start);
    dist[start] = 0;
    touched.assign(1, start);
    int best = start;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (dist[x] > dist[best]) best = x;
      for (int y : forest.neighbors(x)) {
        if (!blocked[y] && dist[y] < 0) {
          dist[y] = dist[x] + 1;
          touched.push_back(y);
          queue.push_back(y);
        }
      }
    }
    return best;
  };
  std::size_t longest = 0;
  for (int s = 0; s < n; ++s) {
    if (blocked[s] || seen[s]) continue;
    int far = sweep(s);
    for (int x : touched) {
      seen[x] = 1;
      dist[x] = -1;
    }
    int other = sweep(far);
    longest = std::max(longest, static_cast<std::size_t>(dist[other]) + 1);
    for (int x : touched) dist[x] = -1;
  }
  return longest;
}

}  // namespace

std::vector<char> Occupancy(const CaterpillarForest& forest,
                            const std::set<VertexId>& occupied) {
  std::vector<char> occ(forest.size(), 0);
  for (VertexId v : occupied) occ[forest.index_of(v)] = 1;
  return occ;
}

std::set<VertexId> Labels(const CaterpillarForest& forest,
                          std::span<const char> occupancy) {
  std::set<VertexId> out;
  for (std::size_t x = 0; x < occupancy.size(); ++x) {
    if (occupancy[x]) out.insert(forest.id(static_cast<int>(x)));
  }
  return out;
}

bool is_kpvc(const CaterpillarForest& forest, std::span<const char> occupancy,
             int k) {
  CheckK(k);
  return LongestFreePath(forest, occupancy) < static_cast<std::size_t>(k);
}

bool is_kpvc(const CaterpillarForest& forest, const TokenSet& tokens) {
  return is_kpvc(forest, Occupancy(forest, tokens.occupied), tokens.k);
}

TreePartition PartitionTree(std::span<const std::vector<int>> adjacency,
                            int k, int root) {
  CheckK(k);
  const int n = static_cast<int>(adjacency.size());
  std::vector<int> parent(n, -2), depth(n, 0), order;
  parent[root] = -1;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    order.push_back(x);
    for (int y : adjacency[x]) {
      if (parent[y] == -2) {
        parent[y] = x;
        depth[y] = depth[x] + 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<std::vector<int>> children(n);
  for (int x : order) {
    if (parent[x] >= 0) children[parent[x]].push_back(x);
  }
  // Deepest first; lower index first among equal depths. Every child is
  // visited before its parent, so when v is reached the subtrees below it
  // are already free of k-paths and T_v is properly rooted as soon as its
  // two tallest child chains plus v reach k vertices.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return depth[a] != depth[b] ? depth[a] > depth[b] : a < b;
  });

  std::vector<int> height(n, 0);
  std::vector<char> taken(n, 0);
  TreePartition out;
  for (int v : order) {
    int h1 = 0, h2 = 0;
    for (int c : children[v]) {
      int h = taken[c] ? 0 : height[c];
      if (h > h1) {
        h2 = h1;
        h1 = h;
      } else if (h > h2) {
        h2 = h;
      }
    }
    if (h1 + h2 + 1 < k) {
      height[v] = h1 + 1;
      continue;
    }
    std::vector<int> piece;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      taken[x] = 1;
      piece.push_back(x);
      for (int c : children[x]) {
        if (!taken[c]) stack.push_back(c);
      }
    }
    std::sort(piece.begin(), piece.end());
    out.pieces.push_back(std::move(piece));
    out.representatives.push_back(v);
  }
  if (!out.pieces.empty()) {
    // The last piece absorbs whatever is left of the tree.
    auto& last = out.pieces.back();
    for (int x : order) {
      if (!taken[x]) last.push_back(x);
    }
    std::sort(last.begin(), last.end());
  }
  return out;
}

PartitionResult partition(const CaterpillarForest& forest, int k,
                          VertexId root) {
  CheckK(k);
  int r = forest.index_of(root);
  const auto& comp = forest.component(forest.component_of(r));
  // Restrict to the root's component, re-indexed in label order.
  std::vector<int> local(forest.size(), -1);
  for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
    local[comp.vertices[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> adjacency(comp.vertices.size());
  for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
    for (int y : forest.neighbors(comp.vertices[i])) {
      adjacency[i].push_back(local[y]);
    }
  }
  TreePartition tp = PartitionTree(adjacency, k, local[r]);
  PartitionResult out;
  for (std::size_t i = 0; i < tp.pieces.size(); ++i) {
    std::vector<VertexId> piece;
    for (int x : tp.pieces[i]) piece.push_back(forest.id(comp.vertices[x]));
    out.pieces.push_back(std::move(piece));
    out.representatives.push_back(
        forest.id(comp.vertices[tp.representatives[i]]));
  }
  return out;
}

std::size_t minimum_cover_size(const CaterpillarForest& forest, int k) {
  std::size_t total = 0;
  for (int c = 0; c < static_cast<int>(forest.component_count()); ++c) {
    VertexId root = forest.id(forest.component(c).spine.front());
    total += partition(forest, k, root).psi();
  }
  return total;
}

}  // namespace kpvcr
