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

#ifndef KPVCR_ORACLE_HPP_
#define KPVCR_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "kpvcr/cover.hpp"
#include "kpvcr/forest.hpp"

namespace kpvcr {

// Ground truth by exhaustion. Token sets are bitmasks over
// forest.vertices(), so every routine here requires at most 64 vertices.

inline constexpr std::size_t kDefaultStateCap = 5'000'000;

// All simple paths on exactly k vertices, one mask per path.
std::vector<std::uint64_t> KPathMasks(const CaterpillarForest& forest, int k);

std::uint64_t ToMask(const CaterpillarForest& forest, const TokenSet& tokens);
TokenSet FromMask(const CaterpillarForest& forest, std::uint64_t mask, int k);

// Every k-PVC with exactly `size` tokens, in increasing mask order.
std::vector<TokenSet> enumerate_kpvcs(const CaterpillarForest& forest, int k,
                                      std::size_t size);

// Nodes are all k-PVCs of one size; edges join covers one slide apart.
struct ReconfigGraph {
  int k = 2;
  std::size_t token_count = 0;
  std::vector<std::uint64_t> nodes;           // sorted
  std::vector<std::vector<int>> adjacency;    // indices into nodes
  std::vector<int> component;                 // connected-component label
  int component_count = 0;

  int index_of(std::uint64_t mask) const;     // -1 if absent
};

// Throws ResourceError when the number of covers exceeds max_states.
ReconfigGraph build_reconfig_graph(const CaterpillarForest& forest, int k,
                                   std::size_t size,
                                   std::size_t max_states = kDefaultStateCap);

// Breadth-first search from I over single valid slides. Throws InputError
// unless |I| = |J| and both are k-PVCs; ResourceError past max_states.
bool oracle_reachable(const CaterpillarForest& forest, const TokenSet& from,
                      const TokenSet& to,
                      std::size_t max_states = kDefaultStateCap);

// Vertices of I that belong to every cover reachable from I.
std::set<VertexId> oracle_rigid_set(const CaterpillarForest& forest,
                                    const TokenSet& tokens,
                                    std::size_t max_states = kDefaultStateCap);

// Declared caterpillar: spine length plus leaf count per spine position.
struct CaterpillarShape {
  std::uint32_t spine = 1;
  std::vector<std::uint32_t> leaves;  // leaves[i] hangs off s<i+1>

  std::size_t vertex_count() const;
  CaterpillarForest build() const;
  std::string str() const;  // e.g. "spine 5 leaves 1=2 3=3"
};

// Every caterpillar with spine length in [2, max_spine] and per-vertex
// leaf counts in [0, max_leaves], once per reversal class (the leaf-count
// vector kept is the lexicographically larger of itself and its reverse).
// Shapes with more than max_vertices vertices are skipped.
std::vector<CaterpillarShape> enumerate_caterpillars(
    std::uint32_t max_spine, std::uint32_t max_leaves,
    std::size_t max_vertices = 64);

}  // namespace kpvcr

#endif  // KPVCR_ORACLE_HPP_
