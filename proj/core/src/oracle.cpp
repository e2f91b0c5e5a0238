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

#include "kpvcr/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "kpvcr/errors.hpp"

namespace kpvcr {
namespace {

void CheckSize(const CaterpillarForest& forest) {
  if (forest.size() > 64) {
    throw InputError("oracle supports at most 64 vertices, got " +
                     std::to_string(forest.size()));
  }
}

bool Covers(std::uint64_t mask, const std::vector<std::uint64_t>& paths) {
  for (std::uint64_t p : paths) {
    if ((p & mask) == 0) return false;
  }
  return true;
}

template <typename Fn>
void ForEachSlide(const CaterpillarForest& forest, std::uint64_t mask,
                  Fn&& fn) {
  for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
    int x = std::countr_zero(rest);
    for (int y : forest.neighbors(x)) {
      if (mask >> y & 1) continue;
      fn(mask ^ (std::uint64_t{1} << x) ^ (std::uint64_t{1} << y));
    }
  }
}

}  // namespace

std::vector<std::uint64_t> KPathMasks(const CaterpillarForest& forest, int k) {
  CheckSize(forest);
  if (k < 1) throw InputError("k must be positive");
  std::vector<std::uint64_t> out;
  const int n = static_cast<int>(forest.size());
  std::vector<int> path;
  std::function<void(int, std::uint64_t)> extend = [&](int x,
                                                       std::uint64_t mask) {
    if (static_cast<int>(path.size()) == k) {
      if (path.front() <= path.back()) out.push_back(mask);
      return;
    }
    for (int y : forest.neighbors(x)) {
      if (mask >> y & 1) continue;
      path.push_back(y);
      extend(y, mask | std::uint64_t{1} << y);
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    extend(s, std::uint64_t{1} << s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t ToMask(const CaterpillarForest& forest, const TokenSet& tokens) {
  CheckSize(forest);
  std::uint64_t mask = 0;
  for (VertexId v : tokens.occupied) {
    mask |= std::uint64_t{1} << forest.index_of(v);
  }
  return mask;
}

TokenSet FromMask(const CaterpillarForest& forest, std::uint64_t mask, int k) {
  TokenSet t;
  t.k = k;
  for (; mask; mask &= mask - 1) {
    t.occupied.insert(forest.id(std::countr_zero(mask)));
  }
  return t;
}

namespace {

std::vector<std::uint64_t> CoverMasks(const CaterpillarForest& forest, int k,
                                      std::size_t size,
                                      std::size_t max_states) {
  const int n = static_cast<int>(forest.size());
  std::vector<std::uint64_t> out;
  if (size > static_cast<std::size_t>(n)) return out;
  auto paths = KPathMasks(forest, k);
  if (size == 0) {
    if (paths.empty()) out.push_back(0);
    return out;
  }
  const std::uint64_t limit =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  // Gosper's hack over all n-bit masks with `size` bits set.
  std::uint64_t mask = (size == 64) ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << size) - 1;
  while (true) {
    if (Covers(mask, paths)) {
      out.push_back(mask);
      if (out.size() > max_states) {
        throw ResourceError("k-PVC enumeration exceeded state cap",
                            out.size());
      }
    }
    if (mask == 0) break;
    std::uint64_t low = mask & (~mask + 1);
    std::uint64_t ripple = mask + low;
    if (ripple == 0 || ripple > limit) break;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
    if (mask > limit) break;
  }
  return out;
}

}  // namespace

std::vector<TokenSet> enumerate_kpvcs(const CaterpillarForest& forest, int k,
                                      std::size_t size) {
  std::vector<TokenSet> out;
  for (std::uint64_t m : CoverMasks(forest, k, size, kDefaultStateCap)) {
    out.push_back(FromMask(forest, m, k));
  }
  return out;
}

int ReconfigGraph::index_of(std::uint64_t mask) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), mask);
  if (it == nodes.end() || *it != mask) return -1;
  return static_cast<int>(it - nodes.begin());
}

ReconfigGraph build_reconfig_graph(const CaterpillarForest& forest, int k,
                                   std::size_t size, std::size_t max_states) {
  CheckSize(forest);
  ReconfigGraph g;
  g.k = k;
  g.token_count = size;
  g.nodes = CoverMasks(forest, k, size, max_states);
  g.adjacency.assign(g.nodes.size(), {});
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    ForEachSlide(forest, g.nodes[i], [&](std::uint64_t next) {
      int j = g.index_of(next);
      if (j >= 0) g.adjacency[i].push_back(j);
    });
    std::sort(g.adjacency[i].begin(), g.adjacency[i].end());
  }
  g.component.assign(g.nodes.size(), -1);
  for (std::size_t s = 0; s < g.nodes.size(); ++s) {
    if (g.component[s] >= 0) continue;
    std::vector<int> stack{static_cast<int>(s)};
    g.component[s] = g.component_count;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.adjacency[x]) {
        if (g.component[y] < 0) {
          g.component[y] = g.component_count;
          stack.push_back(y);
        }
      }
    }
    ++g.component_count;
  }
  return g;
}

namespace {

// Visits every cover reachable from `start`; returns the visited set.
std::vector<std::uint64_t> Explore(const CaterpillarForest& forest,
                                   std::uint64_t start, int k,
                                   std::size_t max_states,
                                   std::uint64_t stop_at, bool& found) {
  auto paths = KPathMasks(forest, k);
  std::vector<std::uint64_t> seen{start};
  std::set<std::uint64_t> visited{start};
  std::deque<std::uint64_t> queue{start};
  found = start == stop_at;
  while (!queue.empty() && !found) {
    std::uint64_t cur = queue.front();
    queue.pop_front();
    ForEachSlide(forest, cur, [&](std::uint64_t next) {
      if (found || visited.contains(next) || !Covers(next, paths)) return;
      visited.insert(next);
      seen.push_back(next);
      if (seen.size() > max_states) {
        throw ResourceError("reconfiguration search exceeded state cap",
                            seen.size());
      }
      if (next == stop_at) found = true;
      queue.push_back(next);
    });
  }
  return seen;
}

void CheckCover(const CaterpillarForest& forest, const TokenSet& t,
                const char* name) {
  if (!is_kpvc(forest, t)) {
    throw InputError(std::string(name) + " is not a k-path vertex cover");
  }
}

}  // namespace

bool oracle_reachable(const CaterpillarForest& forest, const TokenSet& from,
                      const TokenSet& to, std::size_t max_states) {
  CheckSize(forest);
  if (from.size() != to.size()) {
    throw InputError("covers have different sizes");
  }
  if (from.k != to.k) throw InputError("covers use different k");
  CheckCover(forest, from, "start");
  CheckCover(forest, to, "target");
  bool found = false;
  Explore(forest, ToMask(forest, from), from.k, max_states,
          ToMask(forest, to), found);
  return found;
}

std::set<VertexId> oracle_rigid_set(const CaterpillarForest& forest,
                                    const TokenSet& tokens,
                                    std::size_t max_states) {
  CheckSize(forest);
  CheckCover(forest, tokens, "cover");
  bool found = false;
  std::uint64_t start = ToMask(forest, tokens);
  auto seen = Explore(forest, start, tokens.k, max_states, ~std::uint64_t{0},
                      found);
  std::uint64_t common = start;
  for (std::uint64_t m : seen) common &= m;
  return FromMask(forest, common, tokens.k).occupied;
}

std::size_t CaterpillarShape::vertex_count() const {
  return spine + std::accumulate(leaves.begin(), leaves.end(), std::size_t{0});
}

CaterpillarForest CaterpillarShape::build() const {
  std::map<std::uint32_t, std::uint32_t> counts;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i] > 0) counts[static_cast<std::uint32_t>(i + 1)] = leaves[i];
  }
  return CaterpillarForest::Build(spine, counts);
}

std::string CaterpillarShape::str() const {
  std::string out = "spine " + std::to_string(spine);
  std::string leaf_part;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i] == 0) continue;
    leaf_part += " " + std::to_string(i + 1) + "=" + std::to_string(leaves[i]);
  }
  if (!leaf_part.empty()) out += " leaves" + leaf_part;
  return out;
}

std::vector<CaterpillarShape> enumerate_caterpillars(
    std::uint32_t max_spine, std::uint32_t max_leaves,
    std::size_t max_vertices) {
  std::vector<CaterpillarShape> out;
  for (std::uint32_t len = 2; len <= max_spine; ++len) {
    std::vector<std::uint32_t> counts(len, 0);
    while (true) {
      std::vector<std::uint32_t> reversed(counts.rbegin(), counts.rend());
      CaterpillarShape shape{len, counts};
      if (counts >= reversed && shape.vertex_count() <= max_vertices) {
        out.push_back(std::move(shape));
      }
      // Odometer increment, last position fastest.
      int pos = static_cast<int>(len) - 1;
      while (pos >= 0 && counts[pos] == max_leaves) counts[pos--] = 0;
      if (pos < 0) break;
      ++counts[pos];
    }
  }
  return out;
}

}  // namespace kpvcr
