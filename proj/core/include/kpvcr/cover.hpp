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

#ifndef KPVCR_COVER_HPP_
#define KPVCR_COVER_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <vector>

#include "kpvcr/forest.hpp"
#include "kpvcr/vertex_id.hpp"

namespace kpvcr {

// A placement of tokens (at most one per vertex) together with the path
// length k it is meant to cover.
struct TokenSet {
  std::set<VertexId> occupied;
  int k = 2;

  std::size_t size() const { return occupied.size(); }
  bool contains(VertexId v) const { return occupied.contains(v); }

  friend bool operator==(const TokenSet&, const TokenSet&) = default;
};

// Dense 0/1 occupancy over forest.vertices(). Throws InputError if a token
// sits on a vertex the forest does not have.
std::vector<char> Occupancy(const CaterpillarForest& forest,
                            const std::set<VertexId>& occupied);
std::set<VertexId> Labels(const CaterpillarForest& forest,
                          std::span<const char> occupancy);

// True iff no simple path on k vertices avoids every token. Throws
// InputError for k < 2 or tokens outside the forest.
bool is_kpvc(const CaterpillarForest& forest, const TokenSet& tokens);
bool is_kpvc(const CaterpillarForest& forest, std::span<const char> occupancy,
             int k);

// Output of the greedy tree partition: pieces T_1..T_p in discovery order
// and their representatives v_1..v_p. The representatives form a minimum
// k-path vertex cover of the tree, so psi() is its size.
struct PartitionResult {
  std::vector<std::vector<VertexId>> pieces;
  std::vector<VertexId> representatives;

  std::size_t psi() const { return representatives.size(); }
};

// Index-level partition of an arbitrary tree given by adjacency lists.
// Vertices of equal depth are scanned in increasing index order.
struct TreePartition {
  std::vector<std::vector<int>> pieces;
  std::vector<int> representatives;
};
TreePartition PartitionTree(std::span<const std::vector<int>> adjacency,
                            int k, int root);

// Partitions the component of `forest` that contains `root`, rooted there.
// Throws InputError if root is not a vertex or k < 2.
PartitionResult partition(const CaterpillarForest& forest, int k,
                          VertexId root);

// psi_k summed over all components of the forest.
std::size_t minimum_cover_size(const CaterpillarForest& forest, int k);

}  // namespace kpvcr

#endif  // KPVCR_COVER_HPP_
