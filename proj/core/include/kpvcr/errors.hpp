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

#ifndef KPVCR_ERRORS_HPP_
#define KPVCR_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kpvcr {

// Malformed or inconsistent caller input (unknown vertex, bad cover, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tree path requested between vertices of different components.
class PathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The rigidity machinery only decides k >= 4.
class UnsupportedParameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Oracle state space exceeded its cap. Carries the number of states seen.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t states)
      : std::runtime_error(what), states_(states) {}
  std::size_t states() const { return states_; }

 private:
  std::size_t states_;
};

}  // namespace kpvcr

#endif  // KPVCR_ERRORS_HPP_
