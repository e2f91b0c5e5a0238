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

#ifndef KPVCR_RIGIDITY_HPP_
#define KPVCR_RIGIDITY_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "kpvcr/cover.hpp"
#include "kpvcr/forest.hpp"

namespace kpvcr {

using KPath = std::vector<VertexId>;

// Token-free k-paths ending at an occupied spine vertex u (or at one of its
// leaves), split by whether they run through u's left spine neighbour, its
// right spine neighbour, or stay inside u and its leaves. Paths are listed
// starting from the end that lies in L[u].
struct PathClassification {
  std::vector<KPath> left;
  std::vector<KPath> right;
  std::vector<KPath> center;

  std::size_t size() const { return left.size() + right.size() + center.size(); }
};

// A minimal window of spine vertices around u, together with all their
// leaves, that holds two token-free k-paths meeting only at u (or at u and
// one of its leaves), while no other spine vertex in the window has a token
// on itself or its leaves.
struct HRegion {
  std::set<VertexId> vertices;
  VertexId first_spine;   // leftmost spine vertex of the window
  VertexId last_spine;    // rightmost spine vertex of the window
  std::size_t spine_size = 0;
  KPath path_p;
  KPath path_q;

  friend bool operator==(const HRegion&, const HRegion&) = default;
};

enum class RigidityReason {
  kIsolated,        // lemma-1a
  kLeafOnRigid,     // lemma-1b
  kNeighborsRigid,  // 4a
  kLeafStar,        // 4b1 (only reachable for k = 3)
  kNoAnchors,       // 4b2
  kAnchorsRigid,    // 4b3
  kNoFeed,          // 4b4
  kMovable,
};
std::string_view Tag(RigidityReason reason);

struct RigidityVerdict {
  bool rigid = false;
  RigidityReason reason = RigidityReason::kMovable;
};

struct RigidReport {
  std::set<VertexId> rigid;
  std::map<VertexId, RigidityReason> reasons;  // one entry per token
};

// u must be an occupied spine vertex (InputError otherwise). When `within`
// is given, only paths whose vertices all lie in it are reported.
PathClassification classify_k_paths(const CaterpillarForest& forest,
                                    const TokenSet& tokens, VertexId u,
                                    const std::set<VertexId>* within = nullptr);

// All minimal regions around u; at most two, and at most one when k >= 4.
// Requires k >= 3.
std::vector<HRegion> find_h_regions(const CaterpillarForest& forest,
                                    const TokenSet& tokens, VertexId u);

// Tokens off L(u) within distance k of u whose connecting path carries no
// other token.
std::set<VertexId> anchor_set(const CaterpillarForest& forest,
                              const TokenSet& tokens, VertexId u);

// Whether some slide sequence in G - u brings the token on anchor v, or one
// on a leaf of v, into the region. Throws UnsupportedParameter for k <= 3.
bool can_feed_region(const CaterpillarForest& forest, const TokenSet& tokens,
                     VertexId u, const HRegion& region, VertexId v);

// Throws UnsupportedParameter for k <= 3 and InputError if u is free or
// the tokens do not form a k-PVC.
RigidityVerdict is_rigid(const CaterpillarForest& forest,
                         const TokenSet& tokens, VertexId u);
RigidReport rigid_set(const CaterpillarForest& forest, const TokenSet& tokens);

namespace detail {

// Spine window [first, last] (positions on u's component spine).
struct Window {
  int first = 0;
  int last = 0;
  int size() const { return last - first + 1; }
  friend bool operator==(const Window&, const Window&) = default;
};

std::vector<char> WindowMembers(const CaterpillarForest& g, int u, Window w);
bool SatisfiesH1(const CaterpillarForest& g, std::span<const char> occ, int u,
                 Window w);
bool SatisfiesH2(const CaterpillarForest& g, std::span<const char> occ, int k,
                 int u, Window w);
// The widening search over at most seven candidate windows.
std::vector<Window> SearchRegions(const CaterpillarForest& g,
                                  std::span<const char> occ, int k, int u);
std::vector<int> Anchors(const CaterpillarForest& g, std::span<const char> occ,
                         int k, int u);
// rigid_in_gv(x): whether the token on x is rigid in G - u.
bool CanFeed(const CaterpillarForest& g, std::span<const char> occ, int k,
             int u, std::span<const char> region, int v,
             const std::function<bool(int)>& rigid_in_gv);

// Memoised rigidity over the components of vertex-deleted subgraphs of one
// base forest. Keys are (component vertex set, queried vertex).
class RigidityEngine {
 public:
  RigidityEngine(const CaterpillarForest& base, std::span<const char> occ,
                 int k);
  RigidityVerdict Query(int vertex);
  // comp: sorted base indices of one connected vertex set holding vertex.
  RigidityVerdict QueryIn(const std::vector<int>& comp, int vertex);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::vector<int> SideComponent(const CaterpillarForest& g,
                                 const std::vector<int>& comp, int removed,
                                 int start) const;

  const CaterpillarForest& base_;
  std::vector<char> occ_;
  int k_;
  std::map<std::pair<std::vector<int>, int>, RigidityVerdict> memo_;
};

}  // namespace detail
}  // namespace kpvcr

#endif  // KPVCR_RIGIDITY_HPP_
