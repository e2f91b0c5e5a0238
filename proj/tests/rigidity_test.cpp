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

#include <set>

#include "kpvcr/oracle.hpp"
#include "kpvcr/rigidity.hpp"
#include "test_support.hpp"

namespace kpvcr {
namespace {

using testing::Cat;
using testing::Cover;
using testing::L;
using testing::S;

CaterpillarForest Hub() { return Cat(5, {{1, 2}, {3, 3}, {5, 2}}); }
CaterpillarForest Blocked() { return Cat(8, {{1, 2}, {6, 3}, {8, 1}}); }
TokenSet BlockedCover() {
  return Cover({S(1), S(4), S(6), L(6, 1), S(7), S(8)}, 3);
}

std::set<VertexId> Span(const CaterpillarForest& g, std::uint32_t a,
                        std::uint32_t b) {
  std::set<VertexId> out;
  for (std::uint32_t i = a; i <= b; ++i) {
    out.insert(S(i));
    for (int leaf : g.leaves(g.index_of(S(i)))) out.insert(g.id(leaf));
  }
  return out;
}

std::set<KPath> AsSet(const std::vector<KPath>& paths) {
  return {paths.begin(), paths.end()};
}

TEST(ClassifyTest, StarAroundOccupiedEndpoint) {
  auto g = Blocked();
  std::set<VertexId> closed{S(1), L(1, 1), L(1, 2)};
  auto c = classify_k_paths(g, BlockedCover(), S(1), &closed);
  EXPECT_TRUE(c.left.empty());
  EXPECT_TRUE(c.right.empty());
  ASSERT_EQ(c.center.size(), 1u);
  EXPECT_EQ(std::set<VertexId>(c.center[0].begin(), c.center[0].end()),
            closed);
}

TEST(ClassifyTest, LongSpine) {
  auto g = Cat(9, {{1, 1}, {9, 1}});
  auto within = Span(g, 2, 8);
  auto c = classify_k_paths(g, Cover({S(1), S(5), S(9)}, 4), S(5), &within);
  EXPECT_EQ(AsSet(c.left), (std::set<KPath>{{S(5), S(4), S(3), S(2)}}));
  EXPECT_EQ(AsSet(c.right), (std::set<KPath>{{S(5), S(6), S(7), S(8)}}));
  EXPECT_TRUE(c.center.empty());
}

TEST(ClassifyTest, BlockedVertexHasNoPaths) {
  auto g = Cat(5, {{3, 1}});
  auto c = classify_k_paths(g, Cover({S(2), S(3), S(4), L(3, 1)}, 3), S(3));
  EXPECT_EQ(c.size(), 0u);
}

TEST(ClassifyTest, RejectsFreeOrLeafVertex) {
  auto g = Blocked();
  EXPECT_THROW(classify_k_paths(g, BlockedCover(), S(2)), InputError);
  EXPECT_THROW(classify_k_paths(g, BlockedCover(), L(6, 1)), InputError);
}

TEST(HRegionTest, BothSidesOpenGiveTwoRegions) {
  auto g = Hub();
  auto regions = find_h_regions(
      g, Cover({S(1), S(3), S(5), L(3, 1), L(5, 1), L(5, 2)}, 3), S(3));
  ASSERT_EQ(regions.size(), 2u);
  std::set<std::set<VertexId>> got{regions[0].vertices, regions[1].vertices};
  EXPECT_EQ(got, (std::set<std::set<VertexId>>{Span(g, 2, 3), Span(g, 3, 4)}));
  for (const auto& h : regions) EXPECT_EQ(h.spine_size, 2u);
}

TEST(HRegionTest, CoveredSideGivesNone) {
  auto regions = find_h_regions(
      Hub(), Cover({S(1), S(3), S(4), S(5), L(3, 1), L(3, 2)}, 3), S(3));
  EXPECT_TRUE(regions.empty());
}

TEST(HRegionTest, WholeGraphRegion) {
  auto g = Cat(5, {{1, 1}, {5, 1}});
  auto regions = find_h_regions(g, Cover({S(3)}, 4), S(3));
  ASSERT_EQ(regions.size(), 1u);
  EXPECT_EQ(regions[0].spine_size, 5u);
  EXPECT_EQ(regions[0].vertices.size(), g.size());
}

TEST(AnchorTest, Examples) {
  EXPECT_EQ(anchor_set(Blocked(), BlockedCover(), S(1)), (std::set<VertexId>{S(4)}));
  EXPECT_TRUE(
      anchor_set(Cat(5, {{1, 1}, {5, 1}}), Cover({S(3)}, 4), S(3)).empty());
  EXPECT_EQ(anchor_set(Cat(9, {{1, 1}, {9, 1}}), Cover({S(1), S(5), S(9)}, 4),
                       S(5)),
            (std::set<VertexId>{S(1), S(9)}));
}

HRegion OnlyRegion(const CaterpillarForest& g, const TokenSet& tokens,
                   VertexId u, std::uint32_t first, std::uint32_t last) {
  auto regions = find_h_regions(g, tokens, u);
  EXPECT_EQ(regions.size(), 1u);
  if (regions.empty()) return {};
  EXPECT_EQ(regions[0].first_spine, S(first));
  EXPECT_EQ(regions[0].last_spine, S(last));
  return regions[0];
}

TEST(CanFeedTest, TokenSlidesIntoRegion) {
  auto g = Cat(9, {{1, 1}, {9, 1}});
  auto tokens = Cover({S(1), S(5), S(9)}, 4);
  auto h = OnlyRegion(g, tokens, S(5), 2, 8);
  EXPECT_TRUE(can_feed_region(g, tokens, S(5), h, S(1)));
}

TEST(CanFeedTest, MinimumCoverCannotFeed) {
  auto g = Cat(10, {{4, 1}, {10, 1}});
  auto tokens = Cover({S(4), S(8)}, 4);
  auto h = OnlyRegion(g, tokens, S(8), 5, 10);
  EXPECT_FALSE(can_feed_region(g, tokens, S(8), h, S(4)));
}

TEST(CanFeedTest, NoKPathBeyondAnchor) {
  auto g = Cat(13, {{1, 1}, {13, 1}});
  auto tokens = Cover({S(1), S(5), S(9), S(13)}, 4);
  auto h = OnlyRegion(g, tokens, S(9), 6, 12);
  EXPECT_TRUE(can_feed_region(g, tokens, S(9), h, S(13)));
}

TEST(CanFeedTest, StuckSurplusDoesNotFeed) {
  // The second piece beyond the anchor holds two tokens, but both are
  // rigid, so nothing can reach the region.
  auto g = Cat(9, {{3, 2}, {4, 1}, {7, 1}, {8, 3}, {9, 1}});
  auto tokens = Cover({S(3), S(6), S(8), L(8, 3)}, 4);
  auto h = OnlyRegion(g, tokens, S(3), 2, 4);
  EXPECT_FALSE(can_feed_region(g, tokens, S(3), h, S(6)));
  EXPECT_EQ(oracle_rigid_set(g, tokens),
            (std::set<VertexId>{S(3), S(8), L(8, 3)}));
}

TEST(CanFeedTest, RejectsNonAnchorAndSmallK) {
  auto g = Cat(9, {{1, 1}, {9, 1}});
  auto tokens = Cover({S(1), S(5), S(9)}, 4);
  auto h = OnlyRegion(g, tokens, S(5), 2, 8);
  EXPECT_THROW(can_feed_region(g, tokens, S(5), h, S(5)), InputError);
  auto t3 = tokens;
  t3.k = 3;
  EXPECT_THROW(can_feed_region(g, t3, S(5), h, S(1)), UnsupportedParameter);
}

TEST(IsRigidTest, Examples) {
  auto g5 = Cat(5, {{1, 1}, {5, 1}});
  auto v = is_rigid(g5, Cover({S(3)}, 4), S(3));
  EXPECT_TRUE(v.rigid);
  EXPECT_EQ(Tag(v.reason), "4b2");

  v = is_rigid(Cat(9, {{1, 1}, {9, 1}}), Cover({S(1), S(5), S(9)}, 4), S(5));
  EXPECT_FALSE(v.rigid);
  EXPECT_EQ(Tag(v.reason), "movable");

  v = is_rigid(g5, Cover({S(3), L(5, 1)}, 4), L(5, 1));
  EXPECT_FALSE(v.rigid);

  v = is_rigid(Cat(10, {{4, 1}, {10, 1}}), Cover({S(4), S(8)}, 4), S(8));
  EXPECT_TRUE(v.rigid);
  EXPECT_EQ(Tag(v.reason), "4b3");
}

TEST(IsRigidTest, LeafOnRigidSpineVertex) {
  auto g = Cat(5, {{1, 1}, {3, 1}, {5, 1}});
  auto tokens = Cover({S(3), L(3, 1)}, 4);
  auto v = is_rigid(g, tokens, L(3, 1));
  EXPECT_TRUE(v.rigid);
  EXPECT_EQ(Tag(v.reason), "lemma-1b");
  EXPECT_EQ(oracle_rigid_set(g, tokens), (std::set<VertexId>{S(3), L(3, 1)}));
}

TEST(IsRigidTest, IsolatedVertex) {
  auto g = Cat(5, {{1, 1}, {5, 1}}).delete_vertices({S(5)});
  auto v = is_rigid(g, Cover({S(2), L(5, 1)}, 4), L(5, 1));
  EXPECT_TRUE(v.rigid);
  EXPECT_EQ(Tag(v.reason), "lemma-1a");
}

TEST(IsRigidTest, Errors) {
  auto g = Cat(5, {{1, 1}, {5, 1}});
  EXPECT_THROW(is_rigid(g, Cover({S(3)}, 3), S(3)), UnsupportedParameter);
  EXPECT_THROW(is_rigid(g, Cover({S(2)}, 4), S(2)), InputError);
  EXPECT_THROW(is_rigid(g, Cover({S(3)}, 4), S(2)), InputError);
  EXPECT_THROW(rigid_set(g, Cover({S(3)}, 3)), UnsupportedParameter);
}

TEST(RigidSetTest, Examples) {
  EXPECT_EQ(rigid_set(Cat(5, {{1, 1}, {5, 1}}), Cover({S(3)}, 4)).rigid,
            (std::set<VertexId>{S(3)}));
  EXPECT_TRUE(rigid_set(Cat(9, {{1, 1}, {9, 1}}), Cover({S(1), S(5), S(9)}, 4))
                  .rigid.empty());
  EXPECT_TRUE(rigid_set(Cat(3), Cover({}, 4)).rigid.empty());
}

TEST(RigidSetTest, ReportCoversEveryToken) {
  auto g = Cat(9, {{3, 2}, {4, 1}, {7, 1}, {8, 3}, {9, 1}});
  auto tokens = Cover({S(3), S(6), S(8), L(8, 3)}, 4);
  auto report = rigid_set(g, tokens);
  EXPECT_EQ(report.rigid, (std::set<VertexId>{S(3), S(8), L(8, 3)}));
  EXPECT_EQ(report.reasons.size(), tokens.size());
  EXPECT_EQ(Tag(report.reasons.at(S(6))), "movable");
}

// Definition-level reference for H-regions: windows of consecutive spine
// vertices around u with all their leaves.
struct Window {
  int first, last;
};

bool WindowOk(const CaterpillarForest& g, const TokenSet& tokens, int u,
              const std::vector<int>& spine, Window w) {
  const int k = tokens.k;
  std::vector<int> keep;
  for (int q = w.first; q <= w.last; ++q) {
    int s = spine[q];
    if (s != u) {
      if (tokens.contains(g.id(s))) return false;
      for (int leaf : g.leaves(s)) {
        if (tokens.contains(g.id(leaf))) return false;
      }
    }
    keep.push_back(s);
    for (int leaf : g.leaves(s)) keep.push_back(leaf);
  }
  std::sort(keep.begin(), keep.end());
  auto sub = g.induced(keep);
  std::vector<std::set<VertexId>> candidates;
  for (const auto& p : testing::AllKPaths(sub, k)) {
    if (!p.contains(g.id(u))) continue;
    bool free = true;
    for (VertexId x : p) free = free && (x == g.id(u) || !tokens.contains(x));
    if (free) candidates.push_back(p);
  }
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    for (std::size_t b = a + 1; b < candidates.size(); ++b) {
      std::set<VertexId> common;
      for (VertexId x : candidates[a]) {
        if (candidates[b].contains(x)) common.insert(x);
      }
      bool ok = common.contains(g.id(u));
      int extra = 0;
      for (VertexId x : common) {
        if (x == g.id(u)) continue;
        int xi = g.index_of(x);
        ok = ok && g.is_leaf(xi) && g.attachment(xi) == u;
        ++extra;
      }
      if (ok && extra <= 1) return true;
    }
  }
  return false;
}

class HRegionPropertyTest
    : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(HRegionPropertyTest, MatchesMinimalWindows) {
  auto [seed, k] = GetParam();
  std::mt19937_64 rng(seed);
  CaterpillarShape shape;
  do {
    shape = testing::RandomShape(rng, 8, 2);
  } while (shape.vertex_count() > 13);
  auto g = shape.build();
  for (int t = 0; t < 6; ++t) {
    TokenSet tokens = testing::RandomCover(g, k, rng, t % 3, 10);
    const auto& spine = g.component(0).spine;
    for (VertexId uid : tokens.occupied) {
      int u = g.index_of(uid);
      if (!g.is_spine(u) || g.degree(u) < 2) continue;
      const int p = g.spine_position(u);
      const int len = static_cast<int>(spine.size());
      std::set<std::pair<VertexId, VertexId>> want;
      for (int size = 1; size <= len && want.empty(); ++size) {
        for (int first = std::max(0, p - size + 1);
             first <= p && first + size - 1 < len; ++first) {
          Window w{first, first + size - 1};
          if (WindowOk(g, tokens, u, spine, w)) {
            want.emplace(g.id(spine[w.first]), g.id(spine[w.last]));
          }
        }
      }
      std::set<std::pair<VertexId, VertexId>> got;
      for (const auto& h : find_h_regions(g, tokens, uid)) {
        got.emplace(h.first_spine, h.last_spine);
        EXPECT_TRUE(h.vertices.contains(uid));
        EXPECT_GE(static_cast<int>(h.spine_size), 2 * k - 5);
        EXPECT_LE(static_cast<int>(h.spine_size), 2 * k - 1);
        ASSERT_EQ(static_cast<int>(h.path_p.size()), k);
        ASSERT_EQ(static_cast<int>(h.path_q.size()), k);
        for (const KPath* path : {&h.path_p, &h.path_q}) {
          for (std::size_t i = 0; i + 1 < path->size(); ++i) {
            EXPECT_EQ(g.dist((*path)[i], (*path)[i + 1]), 1u);
          }
          for (VertexId x : *path) {
            EXPECT_TRUE(h.vertices.contains(x));
            EXPECT_TRUE(x == uid || !tokens.contains(x));
          }
        }
      }
      EXPECT_EQ(got, want) << shape.str() << " k=" << k << " u=" << uid;
      if (k >= 4) EXPECT_LE(got.size(), 1u);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Seeds, HRegionPropertyTest,
    ::testing::Combine(::testing::Range(1, 21), ::testing::Values(3, 4, 5)));

class RigidOracleTest : public ::testing::TestWithParam<int> {};

TEST_P(RigidOracleTest, MatchesReachableIntersection) {
  std::mt19937_64 rng(GetParam());
  CaterpillarShape shape;
  do {
    shape = testing::RandomShape(rng, 9, 3);
  } while (shape.vertex_count() > 16);
  auto g = shape.build();
  for (int k = 4; k <= 6; ++k) {
    for (int t = 0; t < 4; ++t) {
      TokenSet tokens = testing::RandomCover(g, k, rng, t % 3, 12);
      auto report = rigid_set(g, tokens);
      for (VertexId v : report.rigid) EXPECT_TRUE(tokens.contains(v));
      EXPECT_EQ(report.rigid, oracle_rigid_set(g, tokens))
          << shape.str() << " k=" << k;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RigidOracleTest, ::testing::Range(1, 61));

}  // namespace
}  // namespace kpvcr
