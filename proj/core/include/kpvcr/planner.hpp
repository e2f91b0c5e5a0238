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

#ifndef KPVCR_PLANNER_HPP_
#define KPVCR_PLANNER_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "kpvcr/cover.hpp"
#include "kpvcr/forest.hpp"
#include "kpvcr/sequence.hpp"

namespace kpvcr {

// Leaves of s_i (by leaf index), then s_i, then the leaves of s_{i+1}, and
// so on. Components are ranked one after another in component order.
struct VertexOrder {
  std::map<VertexId, std::size_t> rank;

  bool less(VertexId a, VertexId b) const { return rank.at(a) < rank.at(b); }
  std::vector<VertexId> sorted(const std::set<VertexId>& vertices) const;
};

VertexOrder vertex_order(const CaterpillarForest& forest);

// Throws UnsupportedParameter for k <= 3 and InputError when either side is
// not a k-PVC of the forest or the two sides disagree on k.
bool is_ts_reachable(const CaterpillarForest& forest, const TokenSet& from,
                     const TokenSet& to);

// A valid slide sequence from `from` to `to`, or nullopt when none exists.
// Rigid tokens never move.
std::optional<TsSequence> build_sequence(const CaterpillarForest& forest,
                                         const TokenSet& from,
                                         const TokenSet& to);

// Moves the i-th token of `current` (1-based, in vertex_order) onto the i-th
// vertex of `target` while every later token ends where it started. Needs a
// connected forest, equal sizes, current and target agreeing after index i,
// the i-th current vertex ordered before the i-th target vertex, and no
// rigid token; throws std::logic_error otherwise.
TsSequence construct_si(const CaterpillarForest& forest,
                        const TokenSet& current, const TokenSet& target,
                        std::size_t i);

}  // namespace kpvcr

#endif  // KPVCR_PLANNER_HPP_
