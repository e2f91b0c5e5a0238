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

#ifndef KPVCR_INSTANCE_HPP_
#define KPVCR_INSTANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kpvcr/cover.hpp"
#include "kpvcr/errors.hpp"
#include "kpvcr/forest.hpp"
#include "kpvcr/sequence.hpp"

namespace kpvcr {

// Line-oriented instance text:
//   kpvcr 1
//   k <int>
//   spine <int>
//   leaves <i>=<c> ...      (optional)
//   start <ids...>
//   target <ids...>
// Blank lines and '#' comments are ignored; each directive appears once.
struct Instance {
  int k = 4;
  std::uint32_t spine = 2;
  std::map<std::uint32_t, std::uint32_t> leaves;
  std::vector<VertexId> start;
  std::vector<VertexId> target;

  CaterpillarForest forest() const;
  TokenSet start_set() const;
  TokenSet target_set() const;
  friend bool operator==(const Instance&, const Instance&) = default;
};

enum class ParseErrorCode {
  kSyntax,
  kUnknownVertex,
  kDuplicateDirective,
  kDuplicateVertex,
  kInvalidCover,
};
std::string_view Name(ParseErrorCode code);  // "syntax", "unknown_vertex", ...

class ParseError : public InputError {
 public:
  ParseError(ParseErrorCode code, std::size_t line, const std::string& detail);
  ParseErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }  // 0 when not tied to a line

 private:
  ParseErrorCode code_;
  std::size_t line_;
};

// Throws ParseError at the first problem. With validate_covers set, start
// and target must both be k-PVCs.
Instance parse_instance(std::string_view text, bool validate_covers = true);
std::string print_instance(const Instance& instance);

// "witness <m>" followed by m lines "slide <from> <to>".
std::vector<Move> parse_witness(std::string_view text);
std::string print_witness(const std::vector<Move>& moves);

}  // namespace kpvcr

#endif  // KPVCR_INSTANCE_HPP_
