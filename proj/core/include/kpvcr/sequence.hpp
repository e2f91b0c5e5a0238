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

#ifndef KPVCR_SEQUENCE_HPP_
#define KPVCR_SEQUENCE_HPP_

#include <cstddef>
#include <vector>

#include "kpvcr/cover.hpp"
#include "kpvcr/forest.hpp"
#include "kpvcr/vertex_id.hpp"

namespace kpvcr {

struct Move {
  VertexId from;
  VertexId to;
  friend bool operator==(const Move&, const Move&) = default;
};

// A start cover and the slides applied to it, in order.
struct TsSequence {
  TokenSet start;
  std::vector<Move> moves;

  std::size_t size() const { return moves.size(); }
  bool empty() const { return moves.empty(); }

  // Replays the moves as set updates. Throws InputError when a move starts
  // on a free vertex or ends on an occupied one.
  TokenSet end() const;
  std::vector<TokenSet> states() const;

  // Same path walked backwards: starts at end() and undoes each move.
  TsSequence reversed() const;
  // Throws InputError unless other.start == end().
  TsSequence concat(const TsSequence& other) const;

  friend bool operator==(const TsSequence&, const TsSequence&) = default;
};

// True iff the start is a k-PVC of the forest and every move slides a token
// along an edge onto a free vertex, leaving a k-PVC behind.
bool validate_sequence(const CaterpillarForest& forest, int k,
                       const TsSequence& seq);

}  // namespace kpvcr

#endif  // KPVCR_SEQUENCE_HPP_
