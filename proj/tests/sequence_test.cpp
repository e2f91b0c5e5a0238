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


#include <gtest/gtest.h>

#include <random>

#include "kpvcr/sequence.hpp"
#include "test_support.hpp"

namespace kpvcr {
namespace {

using testing::Cat;
using testing::Cover;
using testing::L;
using testing::S;

TEST(SequenceTest, EndAndStates) {
  TsSequence seq{Cover({S(2), S(4)}, 4), {{S(4), S(5)}, {S(2), S(3)}}};
  EXPECT_EQ(seq.end(), Cover({S(3), S(5)}, 4));
  auto states = seq.states();
  ASSERT_EQ(states.size(), 3u);
  EXPECT_EQ(states[1], Cover({S(2), S(5)}, 4));
}

TEST(SequenceTest, ReverseAndConcat) {
  TsSequence a{Cover({S(2), S(4)}, 4), {{S(4), S(5)}}};
  TsSequence b{Cover({S(2), S(5)}, 4), {{S(2), S(3)}}};
  auto ab = a.concat(b);
  EXPECT_EQ(ab.moves.size(), 2u);
  EXPECT_EQ(ab.reversed().end(), a.start);
  EXPECT_EQ(a.reversed().reversed(), a);
  EXPECT_THROW(b.concat(a), InputError);
}

TEST(SequenceTest, ApplyingAnImpossibleMoveThrows) {
  TsSequence seq{Cover({S(2)}, 4), {{S(3), S(4)}}};
  EXPECT_THROW(seq.end(), InputError);
}

TEST(ValidateTest, Examples) {
  auto g = Cat(5, {{1, 1}, {5, 1}});
  EXPECT_TRUE(validate_sequence(g, 4, {Cover({S(3)}, 4), {}}));
  EXPECT_FALSE(validate_sequence(g, 4, {Cover({S(2), S(4)}, 4),
                                        {{S(2), S(5)}}}));
}

TEST(ValidateTest, RejectsEveryBrokenInvariant) {
  auto g = Cat(5, {{1, 1}, {5, 1}});
  auto start = Cover({S(2), S(4)}, 4);
  // Slide from a free vertex.
  EXPECT_FALSE(validate_sequence(g, 4, {start, {{S(3), S(2)}}}));
  // Slide onto an occupied vertex.
  EXPECT_FALSE(validate_sequence(g, 4, {Cover({S(2), S(3)}, 4),
                                        {{S(2), S(3)}}}));
  // Uncovers s3 s4 s5 s6.
  EXPECT_FALSE(validate_sequence(Cat(6), 4, {Cover({S(3)}, 4), {{S(3), S(2)}}}));
  // Start is not a cover.
  EXPECT_FALSE(validate_sequence(g, 4, {Cover({S(2)}, 4), {}}));
  // Mismatched k or unknown vertex.
  EXPECT_FALSE(validate_sequence(g, 5, {start, {}}));
  EXPECT_FALSE(validate_sequence(g, 4, {Cover({S(2), S(9)}, 4), {}}));
  EXPECT_TRUE(validate_sequence(g, 4, {start, {{S(4), S(5)}, {S(5), L(5, 1)}}}));
}

// Random valid walks for the algebraic laws.
TsSequence RandomWalk(const CaterpillarForest& g, const TokenSet& start,
                      std::mt19937_64& rng, int steps) {
  TsSequence seq{start, {}};
  std::vector<char> occ = Occupancy(g, start.occupied);
  for (int s = 0; s < steps; ++s) {
    std::vector<std::pair<int, int>> options;
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
      if (!occ[v]) continue;
      for (int w : g.neighbors(v)) {
        if (occ[w]) continue;
        occ[v] = 0;
        occ[w] = 1;
        if (is_kpvc(g, occ, start.k)) options.emplace_back(v, w);
        occ[v] = 1;
        occ[w] = 0;
      }
    }
    if (options.empty()) break;
    auto [v, w] = options[rng() % options.size()];
    occ[v] = 0;
    occ[w] = 1;
    seq.moves.push_back({g.id(v), g.id(w)});
  }
  return seq;
}

class SequenceLawTest : public ::testing::TestWithParam<int> {};

TEST_P(SequenceLawTest, ReverseAndConcatLaws) {
  std::mt19937_64 rng(GetParam());
  auto g = testing::RandomShape(rng, 10, 2).build();
  const int k = 3 + static_cast<int>(rng() % 4);
  auto start = testing::RandomCover(g, k, rng, 2, 5);
  auto a = RandomWalk(g, start, rng, 8);
  auto b = RandomWalk(g, a.end(), rng, 8);
  ASSERT_TRUE(validate_sequence(g, k, a));
  ASSERT_TRUE(validate_sequence(g, k, b));
  EXPECT_EQ(a.reversed().reversed(), a);
  EXPECT_TRUE(validate_sequence(g, k, a.reversed()));
  auto ab = a.concat(b);
  EXPECT_TRUE(validate_sequence(g, k, ab));
  EXPECT_EQ(ab.end(), b.end());
  EXPECT_EQ(ab.reversed(), b.reversed().concat(a.reversed()));
}

INSTANTIATE_TEST_SUITE_P(Seeds, SequenceLawTest, ::testing::Range(1, 51));

}  // namespace
}  // namespace kpvcr
