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

#ifndef KPVCR_FOREST_HPP_
#define KPVCR_FOREST_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "kpvcr/vertex_id.hpp"

namespace kpvcr {

// A forest in which every component is a caterpillar.
//
// Vertices are addressed either by their VertexId label or by a dense index
// into vertices() (which is sorted by label). Every component is stored in
// canonical form: its spine is the set of vertices of degree >= 2, ordered
// along the path and oriented so the first spine vertex carries the smaller
// label. A single vertex is its own spine; in a two-vertex component the
// larger label is the spine and the other vertex its leaf. With this form
// the spine endpoints always have degree >= 2 unless the component is a
// star, which is what the rigidity and planning routines assume.
class CaterpillarForest {
 public:
  struct Component {
    std::vector<int> spine;     // ordered s_1..s_l
    std::vector<int> vertices;  // sorted
  };

  CaterpillarForest() = default;

  // The declared caterpillar with spine s1..s<spine_length> and
  // leaf_counts[i] leaves l<i>.1.. on s<i>. Throws InputError on a zero
  // spine length or a leaf entry for a position outside the spine.
  static CaterpillarForest Build(
      std::uint32_t spine_length,
      const std::map<std::uint32_t, std::uint32_t>& leaf_counts = {});

  // Arbitrary labelled forest. Throws InputError on duplicate labels,
  // unknown endpoints, cycles, or components that are not caterpillars.
  static CaterpillarForest FromEdges(
      std::vector<VertexId> ids,
      std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::span<const VertexId> vertices() const { return ids_; }
  const VertexId& id(int v) const { return ids_[v]; }
  bool contains(VertexId v) const { return find(v).has_value(); }
  std::optional<int> find(VertexId v) const;
  // Throws InputError for labels not in the forest.
  int index_of(VertexId v) const;

  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::size_t edge_count() const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  std::size_t component_count() const { return components_.size(); }
  const Component& component(int c) const { return components_[c]; }
  int component_of(int v) const { return component_of_[v]; }
  bool same_component(int u, int v) const {
    return component_of_[u] == component_of_[v];
  }

  bool is_spine(int v) const { return spine_pos_[v] >= 0; }
  bool is_leaf(int v) const { return spine_pos_[v] < 0; }
  // 0-based position on its component's spine, -1 for leaves.
  int spine_position(int v) const { return spine_pos_[v]; }
  // The spine vertex a leaf hangs from; a spine vertex maps to itself.
  int attachment(int v) const { return attach_[v]; }
  // Leaf-neighbours of a spine vertex, sorted by label.
  std::span<const int> leaves(int spine_vertex) const {
    return leaves_[spine_vertex];
  }
  // l(s) and r(s) with the boundary convention s_0 = s_1, s_{l+1} = s_l.
  int left(int spine_vertex) const;
  int right(int spine_vertex) const;

  std::optional<std::size_t> dist(VertexId u, VertexId v) const;
  // Throws PathError when u and v lie in different components.
  std::vector<VertexId> tree_path(VertexId u, VertexId v) const;

  // Index-level variants; dist_index returns -1 across components.
  int dist_index(int u, int v) const;
  std::vector<int> path_index(int u, int v) const;

  // Vertices on a longest simple path, maximised over components.
  std::size_t longest_path_vertices() const;
  std::size_t longest_path_vertices(int component) const;

  CaterpillarForest delete_vertices(const std::set<VertexId>& removed) const;
  // Induced forest on the given vertex indices (any order, no duplicates).
  CaterpillarForest induced(std::span<const int> keep) const;
  CaterpillarForest component_forest(int component) const;

 private:
  static CaterpillarForest FromAdjacency(std::vector<VertexId> ids,
                                         std::vector<std::vector<int>> adj);
  void canonicalize();

  std::vector<VertexId> ids_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> component_of_;
  std::vector<Component> components_;
  std::vector<int> spine_pos_;
  std::vector<int> attach_;
  std::vector<std::vector<int>> leaves_;
};

}  // namespace kpvcr

#endif  // KPVCR_FOREST_HPP_
