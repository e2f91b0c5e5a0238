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

#include "kpvcr/vertex_id.hpp"

#include <charconv>
#include <limits>

#include "kpvcr/errors.hpp"

namespace kpvcr {
namespace {

bool ParseIndex(std::string_view text, std::uint32_t& out) {
  if (text.empty() || text.front() == '0') return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::string VertexId::str() const {
  if (leaf == 0) return "s" + std::to_string(spine);
  return "l" + std::to_string(spine) + "." + std::to_string(leaf);
}

VertexId VertexId::parse(std::string_view text) {
  auto fail = [&] {
    return InputError("malformed vertex id '" + std::string(text) + "'");
  };
  if (text.size() < 2) throw fail();
  std::string_view body = text.substr(1);
  VertexId v;
  if (text.front() == 's') {
    if (!ParseIndex(body, v.spine)) throw fail();
    return v;
  }
  if (text.front() != 'l') throw fail();
  auto dot = body.find('.');
  if (dot == std::string_view::npos) throw fail();
  if (!ParseIndex(body.substr(0, dot), v.spine) ||
      !ParseIndex(body.substr(dot + 1), v.leaf)) {
    throw fail();
  }
  return v;
}

std::ostream& operator<<(std::ostream& os, const VertexId& v) {
  return os << v.str();
}

}  // namespace kpvcr
