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

#include "kpvcr/planner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kpvcr/errors.hpp"
#include "kpvcr/rigidity.hpp"

namespace kpvcr {

std::vector<VertexId> VertexOrder::sorted(
    const std::set<VertexId>& vertices) const {
  std::vector<VertexId> out(vertices.begin(), vertices.end());
  std::sort(out.begin(), out.end(),
            [&](VertexId a, VertexId b) { return less(a, b); });
  return out;
}

namespace {

std::vector<std::size_t> LocalRanks(const CaterpillarForest& g) {
  std::vector<std::size_t> rank(g.size(), 0);
  std::size_t next = 0;
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    for (int s : g.component(static_cast<int>(c)).spine) {
      for (int leaf : g.leaves(s)) rank[leaf] = next++;
      rank[s] = next++;
    }
  }
  return rank;
}

// Longest token-free path, in vertices, that starts at `from` and never
// enters `avoid`; capped at `cap`.
int FreeArm(const CaterpillarForest& g, const std::vector<char>& occ, int from,
            int avoid, int cap) {
  if (occ[from]) return 0;
  int best = 1;
  struct Frame {
    int v, parent, depth;
  };
  std::vector<Frame> stack{{from, avoid, 1}};
  while (!stack.empty() && best < cap) {
    Frame f = stack.back();
    stack.pop_back();
    best = std::max(best, f.depth);
    if (f.depth >= cap) continue;
    for (int w : g.neighbors(f.v)) {
      if (w != f.parent && !occ[w]) stack.push_back({w, f.v, f.depth + 1});
    }
  }
  return std::min(best, cap);
}

class Slider {
 public:
  Slider(const CaterpillarForest& g, std::vector<char> occ, int k)
      : g_(g), occ_(std::move(occ)), k_(k), rank_(LocalRanks(g)) {}

  const std::vector<char>& occupancy() const { return occ_; }
  const std::vector<std::pair<int, int>>& moves() const { return moves_; }

  std::vector<int> Sorted() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(g_.size()); ++v) {
      if (occ_[v]) out.push_back(v);
    }
    std::sort(out.begin(), out.end(),
              [&](int a, int b) { return rank_[a] < rank_[b]; });
    return out;
  }
  std::vector<int> SortedOf(const std::vector<char>& occ) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(g_.size()); ++v) {
      if (occ[v]) out.push_back(v);
    }
    std::sort(out.begin(), out.end(),
              [&](int a, int b) { return rank_[a] < rank_[b]; });
    return out;
  }
  bool Before(int a, int b) const { return rank_[a] < rank_[b]; }

  // Whether sliding a -> b (adjacent, a occupied, b free) keeps a cover.
  bool Keeps(int a, int b) {
    if (!occ_[a] || occ_[b] || a == b) return false;
    occ_[a] = 0;
    occ_[b] = 1;
    int top1 = 0, top2 = 0;
    for (int w : g_.neighbors(a)) {
      int arm = FreeArm(g_, occ_, w, a, k_);
      if (arm > top1) {
        top2 = top1;
        top1 = arm;
      } else if (arm > top2) {
        top2 = arm;
      }
    }
    occ_[a] = 1;
    occ_[b] = 0;
    return top1 + top2 + 1 < k_;
  }

  void Slide(int a, int b) {
    auto nb = g_.neighbors(a);
    if (std::find(nb.begin(), nb.end(), b) == nb.end() || !Keeps(a, b)) {
      throw std::logic_error("planner produced an invalid slide " +
                             g_.id(a).str() + " -> " + g_.id(b).str());
    }
    occ_[a] = 0;
    occ_[b] = 1;
    moves_.emplace_back(a, b);
  }

  bool CanRight(int x) {
    if (!g_.is_spine(x)) return false;
    int r = g_.right(x);
    return r != x && Keeps(x, r);
  }
  bool CanLeft(int x) {
    if (!g_.is_spine(x)) return false;
    int l = g_.left(x);
    return l != x && Keeps(x, l);
  }

  // Index i is 0-based; y lists the target vertices in order.
  void Step(std::size_t i, const std::vector<int>& y) {
    const int yi = y[i];
    std::vector<int> x = Sorted();
    if (x.size() != y.size()) throw std::logic_error("size mismatch");
    if (g_.is_leaf(x[i]) && g_.attachment(x[i]) == yi) {
      Slide(x[i], yi);
      CheckTail(i, y);
      return;
    }
    const std::size_t limit = 8 * g_.size() * g_.size() + 64;
    std::size_t rounds = 0;
    while (!occ_[yi]) {
      if (++rounds > limit) throw std::logic_error("construction stalled");
      x = Sorted();
      auto largest = [&](std::size_t hi) -> int {
        for (int j = static_cast<int>(hi); j >= 0; --j) {
          if (g_.is_leaf(x[j]) || CanRight(x[j])) return j;
        }
        return -1;
      };
      int istar;
      if (g_.is_leaf(yi) && occ_[g_.attachment(yi)]) {
        int up = g_.attachment(yi);
        if (Keeps(up, yi)) {
          Slide(up, yi);
          break;
        }
        istar = i == 0 ? -1 : largest(i - 1);
      } else {
        istar = largest(i);
      }
      if (istar < 0) throw std::logic_error("no token can advance");
      int xs = x[istar];
      if (g_.is_leaf(xs)) {
        int up = g_.attachment(xs);
        if (occ_[up]) {
          int jstar = -1;
          for (std::size_t j = istar + 1; j < x.size(); ++j) {
            if (g_.is_spine(x[j]) && CanLeft(x[j])) {
              jstar = static_cast<int>(j);
              break;
            }
          }
          if (jstar < 0) throw std::logic_error("no token can step back");
          for (int j = jstar; j > istar; --j) {
            if (g_.is_spine(x[j])) Slide(x[j], g_.left(x[j]));
          }
        }
        Slide(xs, up);
      } else {
        Slide(xs, g_.right(xs));
      }
    }
    CheckTail(i, y);
  }

  // Lifts every leaf token whose spine neighbour is free.
  void Lift() {
    for (bool again = true; again;) {
      again = false;
      for (int v = 0; v < static_cast<int>(g_.size()); ++v) {
        if (occ_[v] && g_.is_leaf(v) && !occ_[g_.attachment(v)]) {
          Slide(v, g_.attachment(v));
          again = true;
        }
      }
    }
  }

  // Brings leaf tokens onto the spine until none is left or the spine is
  // full. Leaves every leaf token under an occupied spine vertex.
  void Normalize() {
    Lift();
    while (LeafTokens() > 0 && !SpineFull()) {
      if (AbsorbOne()) continue;
      const int before = LeafTokens();
      bool progress = false;
      for (int phase = 0; phase < 8 && !progress; ++phase) {
        bool moved = Sweep(phase % 2 == 0 ? +1 : -1);
        progress = LeafTokens() < before || (LeafTokens() > 0 && AbsorbOne());
        if (!moved && phase > 0 && !progress) break;
      }
      if (!progress) {
        throw std::logic_error("leaf tokens cannot be brought onto the spine");
      }
    }
  }

  bool SpineFull() const {
    for (int s : Spine()) {
      if (!occ_[s]) return false;
    }
    return true;
  }

  // With the whole spine occupied, rearranges leaf tokens to match `want`.
  // Every intermediate state frees exactly one spine vertex.
  void PermuteLeaves(const std::vector<char>& want) {
    const auto& spine = Spine();
    for (;;) {
      int a = -1, b = -1;
      for (int v = 0; v < static_cast<int>(g_.size()); ++v) {
        if (!g_.is_leaf(v)) continue;
        if (occ_[v] && !want[v] && a < 0) a = v;
        if (!occ_[v] && want[v] && b < 0) b = v;
      }
      if (a < 0 || b < 0) return;
      int pa = g_.spine_position(g_.attachment(a));
      int pb = g_.spine_position(g_.attachment(b));
      int step = pa <= pb ? 1 : -1;
      Slide(spine[pb], b);
      for (int q = pb; q != pa; q -= step) Slide(spine[q - step], spine[q]);
      Slide(a, spine[pa]);
    }
  }

 private:
  const std::vector<int>& Spine() const { return g_.component(0).spine; }

  int LeafTokens() const {
    int n = 0;
    for (int v = 0; v < static_cast<int>(g_.size()); ++v) {
      n += occ_[v] && g_.is_leaf(v);
    }
    return n;
  }

  // Shifts the occupied block between spine position x and the nearest free
  // position in direction `step` one place, then lifts leaf a into s_x.
  // Commits only if every slide keeps a cover.
  bool TryAbsorb(int x, int a, int step) {
    const auto& spine = Spine();
    const int len = static_cast<int>(spine.size());
    int z = x + step;
    while (z >= 0 && z < len && occ_[spine[z]]) z += step;
    if (z < 0 || z >= len) return false;
    std::vector<char> saved = occ_;
    std::size_t mark = moves_.size();
    auto attempt = [&](int from, int to) {
      auto nb = g_.neighbors(from);
      if (std::find(nb.begin(), nb.end(), to) == nb.end() ||
          !Keeps(from, to)) {
        return false;
      }
      occ_[from] = 0;
      occ_[to] = 1;
      moves_.emplace_back(from, to);
      return true;
    };
    bool ok = true;
    for (int q = z - step; ok && q != x - step; q -= step) {
      ok = attempt(spine[q], spine[q + step]);
    }
    ok = ok && attempt(a, spine[x]);
    if (!ok) {
      occ_ = std::move(saved);
      moves_.resize(mark);
    }
    return ok;
  }

  // One slide of a spine token on side `side` of position x (-1 left, +1
  // right) one step towards x. Nearest tokens are tried first.
  bool PushTowards(int x, int side) {
    const auto& spine = Spine();
    const int len = static_cast<int>(spine.size());
    for (int q = x + side; q >= 0 && q < len; q += side) {
      int v = spine[q];
      if (!occ_[v] || q - side == x) continue;
      int w = spine[q - side];
      if (!occ_[w] && Keeps(v, w)) {
        Slide(v, w);
        return true;
      }
    }
    return false;
  }

  // Tries to lower the number of leaf tokens by local moves around one pile.
  bool AbsorbOne() {
    const auto& spine = Spine();
    std::vector<std::pair<int, int>> piles;  // (position, occupied leaf)
    for (int q = 0; q < static_cast<int>(spine.size()); ++q) {
      for (int leaf : g_.leaves(spine[q])) {
        if (occ_[leaf]) {
          piles.emplace_back(q, leaf);
          break;
        }
      }
    }
    for (auto [x, a] : piles) {
      if (TryAbsorb(x, a, +1) || TryAbsorb(x, a, -1)) return true;
    }
    auto [x, a] = piles.front();
    const int before = LeafTokens();
    const std::size_t limit = 4 * g_.size() * g_.size() + 64;
    for (std::size_t round = 0; round < limit; ++round) {
      if (TryAbsorb(x, a, +1) || TryAbsorb(x, a, -1)) return true;
      if (!PushTowards(x, -1) && !PushTowards(x, +1)) break;
      Lift();
      if (LeafTokens() < before) return true;
    }
    return false;
  }

  // Slides spine tokens one way (+1 right, -1 left) until none can move,
  // lifting leaf tokens whenever their spine neighbour frees up.
  bool Sweep(int dir) {
    const auto& spine = Spine();
    const int len = static_cast<int>(spine.size());
    bool moved = false;
    for (bool again = true; again;) {
      again = false;
      for (int i = 0; i < len; ++i) {
        int q = dir > 0 ? len - 1 - i : i;
        int t = q + dir;
        if (t < 0 || t >= len || !occ_[spine[q]] || occ_[spine[t]]) continue;
        if (Keeps(spine[q], spine[t])) {
          Slide(spine[q], spine[t]);
          Lift();
          again = moved = true;
        }
      }
    }
    return moved;
  }

  void CheckTail(std::size_t i, const std::vector<int>& y) const {
    std::vector<int> x = Sorted();
    for (std::size_t j = i; j < y.size(); ++j) {
      if (x[j] != y[j]) {
        throw std::logic_error("token " + std::to_string(j + 1) +
                               " did not settle on " + g_.id(y[j]).str());
      }
    }
  }

  const CaterpillarForest& g_;
  std::vector<char> occ_;
  int k_;
  std::vector<std::size_t> rank_;
  std::vector<std::pair<int, int>> moves_;
};

void RequireK4(int k) {
  if (k <= 3) {
    throw UnsupportedParameter(
        "reconfiguration is only decided for k >= 4; k = " +
        std::to_string(k) + " is an open case");
  }
}

void RequireCovers(const CaterpillarForest& forest, const TokenSet& a,
                   const TokenSet& b) {
  if (a.k != b.k) throw InputError("the two covers use different k");
  if (!is_kpvc(forest, a)) throw InputError("start is not a k-PVC");
  if (!is_kpvc(forest, b)) throw InputError("target is not a k-PVC");
}


// Equal-size placements on a component with no k-path: move the last token
// on the tree path towards each missing target.
void PlanFree(const CaterpillarForest& g, std::vector<char> occ,
              const std::vector<char>& want,
              std::vector<std::pair<int, int>>& moves) {
  for (;;) {
    int a = -1, b = -1;
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
      if (occ[v] && !want[v] && a < 0) a = v;
      if (!occ[v] && want[v] && b < 0) b = v;
    }
    if (a < 0 || b < 0) return;
    std::vector<int> path = g.path_index(a, b);
    std::size_t t = 0;
    for (std::size_t p = 0; p + 1 < path.size(); ++p) {
      if (occ[path[p]]) t = p;
    }
    for (std::size_t p = t; p + 1 < path.size(); ++p) {
      occ[path[p]] = 0;
      occ[path[p + 1]] = 1;
      moves.emplace_back(path[p], path[p + 1]);
    }
  }
}

}  // namespace

VertexOrder vertex_order(const CaterpillarForest& forest) {
  VertexOrder out;
  auto rank = LocalRanks(forest);
  for (std::size_t v = 0; v < forest.size(); ++v) {
    out.rank[forest.id(static_cast<int>(v))] = rank[v];
  }
  return out;
}

bool is_ts_reachable(const CaterpillarForest& forest, const TokenSet& from,
                     const TokenSet& to) {
  RequireK4(from.k);
  RequireCovers(forest, from, to);
  if (from.size() != to.size()) return false;
  RigidReport rf = rigid_set(forest, from);
  RigidReport rt = rigid_set(forest, to);
  if (rf.rigid != rt.rigid) return false;
  CaterpillarForest reduced = forest.delete_vertices(rf.rigid);
  std::vector<long> balance(reduced.component_count(), 0);
  for (VertexId v : from.occupied) {
    if (auto x = reduced.find(v)) ++balance[reduced.component_of(*x)];
  }
  for (VertexId v : to.occupied) {
    if (auto x = reduced.find(v)) --balance[reduced.component_of(*x)];
  }
  return std::all_of(balance.begin(), balance.end(),
                     [](long b) { return b == 0; });
}

std::optional<TsSequence> build_sequence(const CaterpillarForest& forest,
                                         const TokenSet& from,
                                         const TokenSet& to) {
  if (!is_ts_reachable(forest, from, to)) return std::nullopt;
  const int k = from.k;
  std::set<VertexId> rigid = rigid_set(forest, from).rigid;
  CaterpillarForest reduced = forest.delete_vertices(rigid);

  TsSequence forward{from, {}};
  TsSequence backward{to, {}};
  for (std::size_t c = 0; c < reduced.component_count(); ++c) {
    CaterpillarForest g = reduced.component_forest(static_cast<int>(c));
    TokenSet a{{}, k}, b{{}, k};
    for (VertexId v : g.vertices()) {
      if (from.contains(v)) a.occupied.insert(v);
      if (to.contains(v)) b.occupied.insert(v);
    }
    if (a == b) continue;
    std::vector<char> occ_a = Occupancy(g, a.occupied);
    std::vector<char> occ_b = Occupancy(g, b.occupied);
    std::vector<std::pair<int, int>> moves_a, moves_b;
    if (g.longest_path_vertices() < static_cast<std::size_t>(k)) {
      PlanFree(g, occ_a, occ_b, moves_a);
    } else {
      if (!rigid_set(g, a).rigid.empty() || !rigid_set(g, b).rigid.empty()) {
        throw std::logic_error("a component left after removing rigid "
                               "tokens still has rigid tokens");
      }
      Slider side_a(g, occ_a, k), side_b(g, occ_b, k);
      side_a.Normalize();
      side_b.Normalize();
      if (side_a.SpineFull()) {
        side_a.PermuteLeaves(side_b.occupancy());
      } else {
        // Both sides now sit on the spine only.
        for (std::size_t i = a.size(); i-- > 0;) {
          std::vector<int> xa = side_a.Sorted(), xb = side_b.Sorted();
          if (xa[i] == xb[i]) continue;
          if (side_a.Before(xa[i], xb[i])) {
            side_a.Step(i, xb);
          } else {
            side_b.Step(i, xa);
          }
        }
      }
      if (side_a.occupancy() != side_b.occupancy()) {
        throw std::logic_error("the two halves did not meet");
      }
      moves_a = side_a.moves();
      moves_b = side_b.moves();
    }
    for (auto [p, q] : moves_a) forward.moves.push_back({g.id(p), g.id(q)});
    for (auto [p, q] : moves_b) backward.moves.push_back({g.id(p), g.id(q)});
  }
  return forward.concat(backward.reversed());
}

TsSequence construct_si(const CaterpillarForest& forest,
                        const TokenSet& current, const TokenSet& target,
                        std::size_t i) {
  if (forest.component_count() != 1) {
    throw std::logic_error("construct_si needs a connected caterpillar");
  }
  if (current.size() != target.size() || i == 0 || i > current.size()) {
    throw std::logic_error("construct_si: index or size out of range");
  }
  RequireK4(current.k);
  RequireCovers(forest, current, target);
  if (!rigid_set(forest, current).rigid.empty()) {
    throw std::logic_error("construct_si: current cover has rigid tokens");
  }
  Slider slider(forest, Occupancy(forest, current.occupied), current.k);
  std::vector<int> x = slider.Sorted();
  std::vector<int> y = slider.SortedOf(Occupancy(forest, target.occupied));
  for (std::size_t j = i; j < x.size(); ++j) {
    if (x[j] != y[j]) {
      throw std::logic_error("construct_si: covers differ after index i");
    }
  }
  if (!slider.Before(x[i - 1], y[i - 1])) {
    throw std::logic_error("construct_si: x_i must precede y_i");
  }
  slider.Step(i - 1, y);
  TsSequence out{current, {}};
  for (auto [p, q] : slider.moves()) {
    out.moves.push_back({forest.id(p), forest.id(q)});
  }
  return out;
}

}  // namespace kpvcr
