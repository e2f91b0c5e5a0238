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

#ifndef KPVCR_VERTEX_ID_HPP_
#define KPVCR_VERTEX_ID_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace kpvcr {

// Label of a vertex in a declared caterpillar: `s<i>` for the i-th declared
// spine vertex, `l<i>.<j>` for the j-th leaf hanging off it. Labels survive
// vertex deletion; the structural role of a vertex inside a sub-forest is
// recomputed by CaterpillarForest and may differ from the label's kind.
struct VertexId {
  std::uint32_t spine = 0;  // 1-based
  std::uint32_t leaf = 0;   // 0 for spine vertices, otherwise 1-based

  static VertexId Spine(std::uint32_t i) { return {i, 0}; }
  static VertexId Leaf(std::uint32_t i, std::uint32_t j) { return {i, j}; }

  bool is_spine_label() const { return leaf == 0; }

  // Orders by spine index, then leaf index, so s<i> precedes l<i>.*.
  friend auto operator<=>(const VertexId&, const VertexId&) = default;

  std::string str() const;

  // Throws InputError on anything that is not `s<i>` or `l<i>.<j>`.
  static VertexId parse(std::string_view text);
};

std::ostream& operator<<(std::ostream& os, const VertexId& v);

}  // namespace kpvcr

template <>
struct std::hash<kpvcr::VertexId> {
  std::size_t operator()(const kpvcr::VertexId& v) const noexcept {
    return (static_cast<std::size_t>(v.spine) << 32) ^ v.leaf;
  }
};

#endif  // KPVCR_VERTEX_ID_HPP_
