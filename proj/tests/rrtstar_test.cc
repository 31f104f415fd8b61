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


#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "exdeploy/errors.h"
#include "exdeploy/rrtstar.h"

namespace exdeploy {
namespace {

// tau on a (rows x cols) unit lattice with origin (0, 0).
TraversabilityMap MakeMap(std::size_t rows, std::size_t cols,
                          const std::function<double(double, double)>& tau) {
  std::vector<double> v;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) v.push_back(tau(static_cast<double>(c), static_cast<double>(r)));
  return TraversabilityMap({0, 0}, 1.0, rows, cols, v, {}, {});
}

TraversabilityMap Flat() { return MakeMap(21, 21, [](double, double) { return 0.0; }); }

// Wall at x in [9, 11] with a gap at y in [15, 17].
TraversabilityMap Corridor() {
  return MakeMap(21, 21, [](double x, double y) {
    return (x >= 9 && x <= 11 && !(y >= 15 && y <= 17)) ? 1.0 : 0.0;
  });
}

RrtParams FlatParams(std::uint64_t seed) {
  RrtParams p;
  p.samples = 5000;
  p.step = 1.5;
  p.radius_const = MinimumRewireConstant(400.0);
  p.seed = seed;
  return p;
}

double PolylineLength(const std::vector<Point2>& path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) total += Distance(path[i - 1], path[i]);
  return total;
}

TEST(RrtParamsTest, Validation) {
  RrtParams ok;
  EXPECT_NO_THROW(ok.Validate());
  RrtParams p = ok;
  p.samples = 0;
  EXPECT_THROW(p.Validate(), InvalidParams);
  p = ok;
  p.step = 0;
  EXPECT_THROW(p.Validate(), InvalidParams);
  p = ok;
  p.radius_const = -1;
  EXPECT_THROW(p.Validate(), InvalidParams);
  p = ok;
  p.tau_max = 0;
  EXPECT_THROW(p.Validate(), InvalidParams);
  p.tau_max = 1.5;
  EXPECT_THROW(p.Validate(), InvalidParams);
  p.tau_max = 1.0;
  EXPECT_NO_THROW(p.Validate());
}

TEST(RrtStarTest, RewireConstant) {
  // 2 * sqrt(1 + 1/2) * sqrt(area / pi) for the plane.
  EXPECT_DOUBLE_EQ(MinimumRewireConstant(std::numbers::pi), 2.0 * std::sqrt(1.5));
}

TEST(RrtStarTest, StartEqualsGoal) {
  auto plan = Plan({3, 4}, {3, 4}, Flat(), FlatParams(1));
  ASSERT_TRUE(plan.has_value());
  EXPECT_EQ(plan->length, 0.0);
  ASSERT_EQ(plan->polyline.size(), 1u);
  EXPECT_EQ(plan->polyline[0], (Point2{3, 4}));
}

TEST(RrtStarTest, InvalidEndpoints) {
  auto map = MakeMap(11, 11, [](double x, double y) { return (x >= 6 && y >= 6) ? 1.0 : 0.0; });
  RrtParams p;
  EXPECT_THROW(Plan({1, 1}, {8, 8}, map, p), InvalidEndpoint);
  EXPECT_THROW(Plan({8, 8}, {1, 1}, map, p), InvalidEndpoint);
  EXPECT_THROW(Plan({1, 1}, {12, 1}, map, p), InvalidEndpoint);
}

TEST(RrtStarTest, FlatTenUnitPair) {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    auto plan = Plan({0, 0}, {10, 0}, Flat(), FlatParams(seed));
    ASSERT_TRUE(plan.has_value());
    EXPECT_GE(plan->length, 10.0);
    EXPECT_LE(plan->length, 11.0);
    EXPECT_NEAR(PolylineLength(plan->polyline), plan->length, 1e-9);
    EXPECT_EQ(plan->polyline.front(), (Point2{0, 0}));
    EXPECT_EQ(plan->polyline.back(), (Point2{10, 0}));
  }
}

TEST(RrtStarTest, TreeInvariants) {
  TraversabilityMap map = Corridor();
  RrtParams p = FlatParams(5);
  p.samples = 1500;
  RrtOutcome out = PlanWithTree({2, 5}, {18, 5}, map, p);
  const RrtTree& t = out.tree;
  ASSERT_EQ(t.nodes.size(), t.parent.size());
  ASSERT_EQ(t.nodes.size(), t.cost.size());
  EXPECT_EQ(t.parent[0], -1);
  EXPECT_EQ(t.cost[0], 0.0);
  for (std::size_t v = 0; v < t.nodes.size(); ++v) {
    EXPECT_LE(map.Sample(t.nodes[v]), p.tau_max);
    if (v == 0) continue;
    const auto u = static_cast<std::size_t>(t.parent[v]);
    EXPECT_DOUBLE_EQ(t.cost[v], t.cost[u] + Distance(t.nodes[u], t.nodes[v]));
    // Edge interior sampled at half the cell size.
    const double len = Distance(t.nodes[u], t.nodes[v]);
    const int pieces = static_cast<int>(std::ceil(len / 0.5));
    for (int k = 1; k < pieces; ++k) {
      Point2 q = t.nodes[u] + (static_cast<double>(k) / pieces) * (t.nodes[v] - t.nodes[u]);
      EXPECT_LE(map.Sample(q), p.tau_max);
    }
    // Acyclic: the root is reachable within |nodes| hops.
    int hops = 0;
    for (int w = static_cast<int>(v); w != 0 && hops <= static_cast<int>(t.nodes.size()); w = t.parent[static_cast<std::size_t>(w)]) ++hops;
    EXPECT_LE(hops, static_cast<int>(t.nodes.size()));
  }
}

TEST(RrtStarTest, CorridorPathStaysTraversable) {
  TraversabilityMap map = Corridor();
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    RrtParams p = FlatParams(seed);
    p.samples = 3000;
    auto plan = Plan({2, 5}, {18, 5}, map, p);
    ASSERT_TRUE(plan.has_value());
    // Interpolated tau on the wall's centre line drops to 0.5 at y = 14.5.
    const double via_gap = Distance({2, 5}, {10, 14.5}) + Distance({10, 14.5}, {18, 5});
    EXPECT_GE(plan->length, via_gap - 1e-9);
    for (std::size_t i = 0; i < plan->polyline.size(); ++i) {
      EXPECT_LE(map.Sample(plan->polyline[i]), p.tau_max);
      if (i == 0) continue;
      Point2 a = plan->polyline[i - 1], b = plan->polyline[i];
      const int pieces = static_cast<int>(std::ceil(Distance(a, b) / 0.5));
      for (int k = 1; k < pieces; ++k) {
        EXPECT_LE(map.Sample(a + (static_cast<double>(k) / pieces) * (b - a)), p.tau_max);
      }
    }
  }
}

TEST(RrtStarTest, SealedWallIsUnreachable) {
  auto map = MakeMap(21, 21, [](double x, double) { return (x >= 9 && x <= 11) ? 1.0 : 0.0; });
  RrtParams p = FlatParams(1);
  p.samples = 800;
  EXPECT_FALSE(Plan({2, 5}, {18, 5}, map, p).has_value());
  std::vector<Point2> sites{{2, 5}};
  std::vector<Point2> targets{{18, 5}, {3, 5}};
  DistanceMatrix m = PairwiseMatrix(sites, targets, map, p);
  EXPECT_EQ(m.at(0, 0), m.d_max());
  EXPECT_DOUBLE_EQ(m.d_max(), 10.0 * std::hypot(20.0, 20.0));
  EXPECT_LT(m.at(0, 1), 1.5);
}

TEST(RrtStarTest, UnweightedThresholdIgnoresTerrain) {
  auto map = MakeMap(21, 21, [](double x, double) { return (x >= 9 && x <= 11) ? 1.0 : 0.0; });
  RrtParams p = FlatParams(1);
  p.samples = 3000;
  p.tau_max = 1.0;
  auto plan = Plan({2, 5}, {18, 5}, map, p);
  ASSERT_TRUE(plan.has_value());
  EXPECT_LE(plan->length, 17.6);
}

TEST(RrtStarTest, DeterministicInSeed) {
  TraversabilityMap map = Corridor();
  RrtParams p = FlatParams(11);
  p.samples = 1000;
  RrtOutcome a = PlanWithTree({2, 5}, {18, 5}, map, p);
  RrtOutcome b = PlanWithTree({2, 5}, {18, 5}, map, p);
  EXPECT_EQ(a.tree.nodes, b.tree.nodes);
  EXPECT_EQ(a.tree.parent, b.tree.parent);
  EXPECT_EQ(a.tree.cost, b.tree.cost);
  ASSERT_EQ(a.plan.has_value(), b.plan.has_value());
  if (a.plan) EXPECT_EQ(a.plan->length, b.plan->length);
  p.seed = 12;
  RrtOutcome c = PlanWithTree({2, 5}, {18, 5}, map, p);
  EXPECT_NE(a.tree.nodes, c.tree.nodes);
}

TEST(RrtStarTest, WeightedCostIsAtLeastLength) {
  auto map = MakeMap(21, 21, [](double x, double y) { return 0.015 * (x + y); });
  RrtParams p = FlatParams(4);
  p.samples = 1500;
  p.traversability_weighted_cost = true;
  RrtOutcome out = PlanWithTree({2, 2}, {15, 12}, map, p);
  ASSERT_TRUE(out.plan.has_value());
  EXPECT_GT(out.plan->length, PolylineLength(out.plan->polyline));
  for (std::size_t v = 1; v < out.tree.nodes.size(); ++v) {
    const auto u = static_cast<std::size_t>(out.tree.parent[v]);
    EXPECT_GE(out.tree.cost[v] - out.tree.cost[u], Distance(out.tree.nodes[u], out.tree.nodes[v]));
  }
}

TEST(PairwiseMatrixTest, FlatExamples) {
  RrtParams p = FlatParams(3);
  std::vector<Point2> a{{0, 0}};
  std::vector<Point2> b{{10, 0}};
  DistanceMatrix m = PairwiseMatrix(a, b, Flat(), p);
  EXPECT_GE(m.at(0, 0), 10.0);
  EXPECT_LE(m.at(0, 0), 11.0);

  p.samples = 300;
  std::vector<Point2> pts{{1, 1}, {5, 9}, {14, 3}};
  DistanceMatrix sq = PairwiseMatrix(pts, pts, Flat(), p);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(sq.at(i, i), 0.0);
}

TEST(PairwiseMatrixTest, BitwiseReproducibleAcrossRunsAndThreads) {
  RrtParams p = FlatParams(9);
  p.samples = 400;
  std::vector<Point2> sites{{2, 2}, {3, 18}, {6, 10}};
  std::vector<Point2> targets{{18, 2}, {17, 16}, {14, 8}, {1, 10}};
  TraversabilityMap map = Corridor();
  DistanceMatrix a = PairwiseMatrix(sites, targets, map, p, 1);
  DistanceMatrix b = PairwiseMatrix(sites, targets, map, p, 1);
  DistanceMatrix c = PairwiseMatrix(sites, targets, map, p, 3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  p.seed = 10;
  EXPECT_NE(a, PairwiseMatrix(sites, targets, map, p, 1));
}

TEST(PairwiseMatrixTest, BlockedEndpointWarns) {
  TraversabilityMap map = Corridor();
  RrtParams p = FlatParams(1);
  p.samples = 200;
  std::vector<Point2> sites{{10, 5}, {2, 2}};
  std::vector<Point2> targets{{3, 3}};
  std::vector<std::string> warnings;
  DistanceMatrix m = PairwiseMatrix(sites, targets, map, p, 1, &warnings);
  EXPECT_EQ(m.at(0, 0), m.d_max());
  EXPECT_LT(m.at(1, 0), m.d_max());
  EXPECT_FALSE(warnings.empty());
}

TEST(PairwiseMatrixTest, PairSeedsDiffer) {
  EXPECT_NE(PairSeed(7, 0, 1), PairSeed(7, 1, 0));
  EXPECT_NE(PairSeed(7, 0, 0), PairSeed(8, 0, 0));
  EXPECT_EQ(PairSeed(7, 2, 3), PairSeed(7, 2, 3));
}

}  // namespace
}  // namespace exdeploy
