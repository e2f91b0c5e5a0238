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

#include "kpvcr/sequence.hpp"

#include <algorithm>

#include "kpvcr/errors.hpp"

namespace kpvcr {
namespace {

void Apply(TokenSet& tokens, const Move& m) {
  if (!tokens.occupied.contains(m.from)) {
    throw InputError("slide from free vertex " + m.from.str());
  }
  if (tokens.occupied.contains(m.to)) {
    throw InputError("slide onto occupied vertex " + m.to.str());
  }
  tokens.occupied.erase(m.from);
  tokens.occupied.insert(m.to);
}

}  // namespace

TokenSet TsSequence::end() const {
  TokenSet cur = start;
  for (const Move& m : moves) Apply(cur, m);
  return cur;
}

std::vector<TokenSet> TsSequence::states() const {
  std::vector<TokenSet> out{start};
  out.reserve(moves.size() + 1);
  for (const Move& m : moves) {
    out.push_back(out.back());
    Apply(out.back(), m);
  }
  return out;
}

TsSequence TsSequence::reversed() const {
  TsSequence out{end(), {}};
  out.moves.reserve(moves.size());
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    out.moves.push_back({it->to, it->from});
  }
  return out;
}

TsSequence TsSequence::concat(const TsSequence& other) const {
  if (!(end() == other.start)) {
    throw InputError("sequences do not meet: first ends elsewhere");
  }
  TsSequence out = *this;
  out.moves.insert(out.moves.end(), other.moves.begin(), other.moves.end());
  return out;
}

bool validate_sequence(const CaterpillarForest& forest, int k,
                       const TsSequence& seq) {
  if (k < 2 || seq.start.k != k) return false;
  std::vector<char> occ(forest.size(), 0);
  for (VertexId v : seq.start.occupied) {
    auto x = forest.find(v);
    if (!x) return false;
    occ[*x] = 1;
  }
  if (!is_kpvc(forest, occ, k)) return false;
  for (const Move& m : seq.moves) {
    auto a = forest.find(m.from);
    auto b = forest.find(m.to);
    if (!a || !b || !occ[*a] || occ[*b]) return false;
    auto nb = forest.neighbors(*a);
    if (std::find(nb.begin(), nb.end(), *b) == nb.end()) return false;
    occ[*a] = 0;
    occ[*b] = 1;
    if (!is_kpvc(forest, occ, k)) return false;
  }
  return true;
}

}  // namespace kpvcr
