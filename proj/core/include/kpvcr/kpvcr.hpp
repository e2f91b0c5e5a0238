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


// Umbrella header for the kpvcr library.
#ifndef KPVCR_KPVCR_HPP_
#define KPVCR_KPVCR_HPP_

#include "kpvcr/cover.hpp"
#include "kpvcr/errors.hpp"
#include "kpvcr/forest.hpp"
#include "kpvcr/instance.hpp"
#include "kpvcr/oracle.hpp"
#include "kpvcr/planner.hpp"
#include "kpvcr/rigidity.hpp"
#include "kpvcr/sequence.hpp"
#include "kpvcr/vertex_id.hpp"

#endif  // KPVCR_KPVCR_HPP_
