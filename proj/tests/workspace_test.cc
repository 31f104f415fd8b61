// Copyright 2026 The exdeploy Authors
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


#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "exdeploy/workspace.h"
#include "oracles/oracles.h"

namespace exdeploy {
namespace {

Workspace2D SquareWorld() {
  return Workspace2D({{0, 0}, {10, 10}}, {Polygon({{4, 4}, {6, 4}, {6, 6}, {4, 6}})});
}

std::vector<std::vector<Point2>> MixedRings() {
  return {{{1, 1}, {3, 1}, {3, 3}, {1, 3}},
          {{5, 1}, {9, 1}, {9, 2}, {6, 2}, {6, 5}, {5, 5}},
          {{2, 6}, {5, 8}, {1, 9}},
          {{6, 7}, {9, 7}, {9, 9.5}, {8, 9.5}, {8, 8}, {7, 8}, {7, 9.5}, {6, 9.5}}};
}

Workspace2D MixedWorld() {
  std::vector<Polygon> obstacles;
  for (const auto& ring : MixedRings()) obstacles.emplace_back(ring);
  return Workspace2D({{0, 0}, {10, 10}}, obstacles);
}

TEST(WorkspaceTest, SegmentExamples) {
  Workspace2D empty({{0, 0}, {10, 10}}, {});
  EXPECT_FALSE(SegmentIntersectsObstacles({0, 0}, {10, 0}, empty));
  Workspace2D w = SquareWorld();
  EXPECT_TRUE(SegmentIntersectsObstacles({0, 5}, {10, 5}, w));
  EXPECT_FALSE(SegmentIntersectsObstacles({4, 4}, {6, 4}, w));
  EXPECT_FALSE(SegmentIntersectsObstacles({2, 4}, {8, 4}, w));
  EXPECT_FALSE(SegmentIntersectsObstacles({4, 2}, {4, 8}, w));
  EXPECT_TRUE(SegmentIntersectsObstacles({4, 4}, {6, 6}, w));
  EXPECT_FALSE(SegmentIntersectsObstacles({3, 3}, {4, 4}, w));
  EXPECT_FALSE(SegmentIntersectsObstacles({2, 6}, {6, 2}, w));  // touches a corner
}

TEST(WorkspaceTest, CollinearEdgeContactMatchesExactOracle) {
  Workspace2D w = SquareWorld();
  const std::vector<Point2> ring = {{4, 4}, {6, 4}, {6, 6}, {4, 6}};
  const std::vector<std::pair<Point2, Point2>> cases = {
      {{4, 4}, {6, 4}}, {{3, 4}, {7, 4}}, {{4.5, 6}, {5.5, 6}},
      {{6, 3}, {6, 7}}, {{4, 4}, {4, 6}}, {{0.1, 4}, {9.9, 4}}};
  for (auto [a, b] : cases) {
    EXPECT_EQ(SegmentIntersectsObstacles(a, b, w), oracle::ExactSegmentHitsInterior(a, b, ring));
    EXPECT_FALSE(SegmentIntersectsObstacles(a, b, w));
  }
}

TEST(WorkspaceTest, SegmentTestIsSymmetric) {
  Workspace2D w = MixedWorld();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coord(0, 20);
  for (int i = 0; i < 4000; ++i) {
    Point2 a{coord(rng) * 0.5, coord(rng) * 0.5};
    Point2 b{coord(rng) * 0.5, coord(rng) * 0.5};
    EXPECT_EQ(SegmentIntersectsObstacles(a, b, w), SegmentIntersectsObstacles(b, a, w));
  }
}

TEST(WorkspaceTest, ObstacleEdgesAreFree) {
  Workspace2D w = MixedWorld();
  for (const Polygon& p : w.obstacles()) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_FALSE(SegmentIntersectsObstacles(p.vertex(i), p.next(i), w));
    }
  }
}

TEST(WorkspaceTest, SegmentAgreesWithExactOracle) {
  Workspace2D w = MixedWorld();
  auto rings = MixedRings();
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coord(0, 20);
  for (int i = 0; i < 3000; ++i) {
    Point2 a{coord(rng) * 0.5, coord(rng) * 0.5};
    Point2 b{coord(rng) * 0.5, coord(rng) * 0.5};
    if (a == b) continue;
    bool expected = false;
    for (const auto& ring : rings) expected = expected || oracle::ExactSegmentHitsInterior(a, b, ring);
    EXPECT_EQ(SegmentIntersectsObstacles(a, b, w), expected);
  }
}

TEST(WorkspaceTest, FreeSpaceExamples) {
  Workspace2D w = SquareWorld();
  EXPECT_FALSE(PointInFreeSpace({5, 5}, w));
  EXPECT_TRUE(PointInFreeSpace({4, 4}, w));
  EXPECT_TRUE(PointInFreeSpace({5, 4}, w));
  EXPECT_FALSE(PointInFreeSpace({11, 5}, w));
  EXPECT_FALSE(PointInFreeSpace({-0.5, 5}, w));
  EXPECT_TRUE(PointInFreeSpace({0, 0}, w));
}

TEST(WorkspaceTest, FreeSpaceAgreesWithRayCasting) {
  Workspace2D w = MixedWorld();
  auto rings = MixedRings();
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    Point2 p{u(rng), u(rng)};
    bool inside = false;
    for (const auto& ring : rings) inside = inside || oracle::RayCastInside(p, ring);
    EXPECT_EQ(PointInFreeSpace(p, w), !inside);
  }
}

TEST(WorkspaceTest, RejectsInvalidLayouts) {
  Polygon a({{1, 1}, {3, 1}, {3, 3}, {1, 3}});
  Polygon b({{2, 2}, {4, 2}, {4, 4}, {2, 4}});
  Polygon inner({{1.5, 1.5}, {2.5, 1.5}, {2.5, 2.5}, {1.5, 2.5}});
  Polygon touching({{3, 1}, {5, 1}, {5, 3}, {3, 3}});
  EXPECT_THROW(Workspace2D({{0, 0}, {10, 10}}, {a, b}), std::invalid_argument);
  EXPECT_THROW(Workspace2D({{0, 0}, {10, 10}}, {a, inner}), std::invalid_argument);
  EXPECT_THROW(Workspace2D({{0, 0}, {10, 10}}, {a, a}), std::invalid_argument);
  EXPECT_THROW(Workspace2D({{0, 0}, {2, 2}}, {a}), std::invalid_argument);
  EXPECT_THROW(Workspace2D({{0, 0}, {0, 10}}, {}), std::invalid_argument);
  EXPECT_NO_THROW(Workspace2D({{0, 0}, {10, 10}}, {a, touching}));
}

TEST(TerrainGridTest, Validation) {
  EXPECT_THROW(TerrainGrid({0, 0}, 1.0, 1, 3, {0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(TerrainGrid({0, 0}, 0.0, 2, 2, {0, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(TerrainGrid({0, 0}, 1.0, 2, 2, {0, 0, 0}), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(TerrainGrid({0, 0}, 1.0, 2, 2, {0, 0, inf, 0}), std::invalid_argument);
  TerrainGrid g({1, 2}, 0.5, 3, 5, std::vector<double>(15, 0.0));
  EXPECT_DOUBLE_EQ(g.footprint().max.x, 3.0);
  EXPECT_DOUBLE_EQ(g.footprint().max.y, 3.0);
}

TEST(TerrainGridTest, BilinearSample) {
  // values = x + 10 y on a 3 x 3 lattice with unit cells.
  std::vector<double> v;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) v.push_back(c + 10.0 * r);
  EXPECT_DOUBLE_EQ(BilinearSample(v, 3, 3, {0, 0}, 1.0, {0.25, 1.5}), 15.25);
  EXPECT_DOUBLE_EQ(BilinearSample(v, 3, 3, {0, 0}, 1.0, {2, 2}), 22.0);
  EXPECT_DOUBLE_EQ(BilinearSample(v, 3, 3, {0, 0}, 1.0, {0, 0}), 0.0);
}

}  // namespace
}  // namespace exdeploy
