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

#ifndef KPVCR_TOOLS_CLI_HPP_
#define KPVCR_TOOLS_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "kpvcr/instance.hpp"

namespace kpvcr::cli {

// Exit codes shared by every subcommand.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kInputError = 2;
inline constexpr int kResourceError = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

struct GenOptions {
  std::uint32_t spine = 10;
  double leaf_prob = 0.3;
  int k = 4;
  std::uint64_t seed = 1;
  bool scramble = false;
  std::uint32_t extra = 0;  // tokens added to the minimum cover
};
Instance generate(const GenOptions& options);

std::string export_dot(const Instance& instance);

}  // namespace kpvcr::cli

#endif  // KPVCR_TOOLS_CLI_HPP_
