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
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "exdeploy/errors.h"
#include "exdeploy/terrain.h"

namespace exdeploy {
namespace {

TerrainGrid Grid(std::size_t rows, std::size_t cols, double cell,
                 const std::function<double(double, double)>& h) {
  std::vector<double> v;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) v.push_back(h(c * cell, r * cell));
  return TerrainGrid({0, 0}, cell, rows, cols, v);
}

FeatureMaps Uniform(std::size_t rows, std::size_t cols, double slope, double flat,
                    double step) {
  FeatureMaps f;
  f.rows = rows;
  f.cols = cols;
  f.slope.assign(rows * cols, slope);
  f.flatness.assign(rows * cols, flat);
  f.step_height.assign(rows * cols, step);
  return f;
}

TEST(FeatureMapsTest, ConstantGridIsFeatureless) {
  FeatureMaps f = ComputeFeatureMaps(Grid(6, 7, 0.5, [](double, double) { return 3.25; }));
  for (std::size_t k = 0; k < f.slope.size(); ++k) {
    EXPECT_EQ(f.slope[k], 0.0);
    EXPECT_EQ(f.flatness[k], 0.0);
    EXPECT_EQ(f.step_height[k], 0.0);
  }
}

TEST(FeatureMapsTest, PlaneHasUnitSlope) {
  for (int window : {3, 5}) {
    FeatureMaps f = ComputeFeatureMaps(Grid(8, 9, 0.5, [](double x, double) { return x; }), window);
    for (std::size_t r = 1; r + 1 < f.rows; ++r)
      for (std::size_t c = 1; c + 1 < f.cols; ++c) EXPECT_DOUBLE_EQ(f.slope[r * f.cols + c], 1.0);
  }
  FeatureMaps g = ComputeFeatureMaps(Grid(5, 5, 2.0, [](double x, double y) { return 3 * x + 4 * y; }));
  EXPECT_DOUBLE_EQ(g.slope[2 * 5 + 2], 5.0);
}

TEST(FeatureMapsTest, SpikeStepHeight) {
  const double h = 2.5;
  auto grid = Grid(7, 7, 1.0, [&](double x, double y) { return x == 3 && y == 3 ? h : 0.0; });
  FeatureMaps f = ComputeFeatureMaps(grid, 3);
  for (std::size_t r = 0; r < 7; ++r) {
    for (std::size_t c = 0; c < 7; ++c) {
      bool near = std::abs(static_cast<int>(r) - 3) <= 1 && std::abs(static_cast<int>(c) - 3) <= 1;
      EXPECT_EQ(f.step_height[r * 7 + c], near ? h : 0.0);
    }
  }
  // One spike among nine samples: population std is h * sqrt(8) / 9.
  EXPECT_DOUBLE_EQ(f.flatness[3 * 7 + 3], h * std::sqrt(8.0) / 9.0);
}

TEST(FeatureMapsTest, BorderWindowsReplicateEdges) {
  // Corner window of a 3 x 3 replicated neighbourhood of the lattice corner.
  auto grid = Grid(3, 3, 1.0, [](double x, double y) { return x + 10 * y; });
  FeatureMaps f = ComputeFeatureMaps(grid, 3);
  // Window values at (0,0): rows {0,0,1} x cols {0,0,1} -> {0,0,1,0,0,1,10,10,11}.
  std::vector<double> w = {0, 0, 1, 0, 0, 1, 10, 10, 11};
  double mean = 33.0 / 9.0;
  double var = 0;
  for (double v : w) var += (v - mean) * (v - mean);
  EXPECT_DOUBLE_EQ(f.flatness[0], std::sqrt(var / 9.0));
  EXPECT_EQ(f.step_height[0], 11.0);
  EXPECT_DOUBLE_EQ(f.slope[0], std::hypot(1.0, 10.0));
}

TEST(FeatureMapsTest, WindowValidation) {
  auto grid = Grid(4, 6, 1.0, [](double, double) { return 0.0; });
  EXPECT_THROW(ComputeFeatureMaps(grid, 2), InvalidWindow);
  EXPECT_THROW(ComputeFeatureMaps(grid, 1), InvalidWindow);
  EXPECT_THROW(ComputeFeatureMaps(grid, 5), WindowTooLarge);
  EXPECT_NO_THROW(ComputeFeatureMaps(Grid(5, 6, 1.0, [](double, double) { return 0.0; }), 5));
}

TEST(FeatureMapsTest, LinearInHeightScale) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-3, 3);
  std::vector<double> h(12 * 10);
  for (double& v : h) v = u(rng);
  std::vector<double> h2 = h;
  for (double& v : h2) v *= 2;
  FeatureMaps a = ComputeFeatureMaps(TerrainGrid({0, 0}, 0.7, 12, 10, h));
  FeatureMaps b = ComputeFeatureMaps(TerrainGrid({0, 0}, 0.7, 12, 10, h2));
  for (std::size_t k = 0; k < h.size(); ++k) {
    EXPECT_EQ(b.slope[k], 2 * a.slope[k]);
    EXPECT_EQ(b.flatness[k], 2 * a.flatness[k]);
    EXPECT_EQ(b.step_height[k], 2 * a.step_height[k]);
  }
}

TEST(TraversabilityTest, ZeroFeaturesGiveZero) {
  auto map = ComputeTraversability(Uniform(3, 3, 0, 0, 0), {}, {});
  for (double t : map.tau()) EXPECT_EQ(t, 0.0);
}

TEST(TraversabilityTest, CriticalFeaturesGiveExactlyOne) {
  const TraversabilityWeights weights[] = {
      {0.4, 0.3, 0.3}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, {0.6, 0.3, 0.1}, {0.7, 0.2, 0.1}, {0.1, 0.1, 0.8}};
  TraversabilityThresholds th{0.8, 0.35, 1.7};
  for (const auto& w : weights) {
    auto at = ComputeTraversability(Uniform(2, 2, th.slope, th.flatness, th.step), w, th);
    EXPECT_EQ(at.at(0, 0), 1.0);
    auto twice = ComputeTraversability(Uniform(2, 2, 2 * th.slope, 2 * th.flatness, 2 * th.step), w, th);
    EXPECT_EQ(twice.at(1, 1), 1.0);
  }
}

TEST(TraversabilityTest, WeightedSum) {
  TraversabilityThresholds th{2.0, 0.5, 1.0};
  auto map = ComputeTraversability(Uniform(2, 2, 0.5, 0.1, 0.2), {0.5, 0.25, 0.25}, th);
  EXPECT_DOUBLE_EQ(map.at(0, 1), 0.5 * 0.25 + 0.25 * 0.2 + 0.25 * 0.2);
}

TEST(TraversabilityTest, RejectsBadWeightsAndThresholds) {
  FeatureMaps f = Uniform(2, 2, 0, 0, 0);
  EXPECT_THROW(ComputeTraversability(f, {0.5, 0.3, 0.3}, {}), InvalidWeights);
  EXPECT_THROW(ComputeTraversability(f, {1.0, 0.0, 0.0}, {}), InvalidWeights);
  EXPECT_THROW(ComputeTraversability(f, {1.2, -0.1, -0.1}, {}), InvalidWeights);
  EXPECT_THROW(ComputeTraversability(f, {}, {0.0, 1.0, 1.0}), InvalidParams);
  EXPECT_THROW(ComputeTraversability(f, {}, {1.0, -1.0, 1.0}), InvalidParams);
  EXPECT_NO_THROW(ComputeTraversability(f, {0.4, 0.3, 0.3 + 1e-10}, {}));
}

TEST(TraversabilityTest, DegenerateSlopeOnlyWeights) {
  auto grid = Grid(9, 9, 1.0, [](double x, double y) { return 0.3 * x * x + std::sin(y); });
  FeatureMaps f = ComputeFeatureMaps(grid);
  TraversabilityThresholds th{4.0, 1.0, 1.0};
  auto map = ComputeTraversability(f, {1.0, 0.0, 0.0}, th, true);
  for (std::size_t k = 0; k < f.slope.size(); ++k) {
    EXPECT_DOUBLE_EQ(map.tau()[k], std::clamp(f.slope[k] / th.slope, 0.0, 1.0));
  }
}

TEST(TraversabilityTest, StaysInUnitIntervalOnSpikes) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> h(15 * 15, 0.0);
    for (double& v : h) {
      double p = u(rng);
      v = p < 0.1 ? 1e6 * u(rng) : (p < 0.2 ? -1e5 * u(rng) : 1e-3 * u(rng));
    }
    auto map = ComputeTraversability(ComputeFeatureMaps(TerrainGrid({0, 0}, 0.1, 15, 15, h)), {}, {});
    for (double t : map.tau()) {
      EXPECT_GE(t, 0.0);
      EXPECT_LE(t, 1.0);
    }
  }
}

TEST(TraversabilityTest, MonotoneInEachFeature) {
  TraversabilityThresholds th{1.5, 0.7, 2.0};
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 3);
  for (int i = 0; i < 500; ++i) {
    double s = u(rng), f = u(rng), z = u(rng), bump = u(rng);
    double base = ComputeTraversability(Uniform(2, 2, s, f, z), {}, th).at(0, 0);
    EXPECT_LE(base, ComputeTraversability(Uniform(2, 2, s + bump, f, z), {}, th).at(0, 0));
    EXPECT_LE(base, ComputeTraversability(Uniform(2, 2, s, f + bump, z), {}, th).at(0, 0));
    EXPECT_LE(base, ComputeTraversability(Uniform(2, 2, s, f, z + bump), {}, th).at(0, 0));
  }
}

TEST(IsTraversableTest, Examples) {
  TraversabilityMap flat({0, 0}, 1.0, 4, 4, std::vector<double>(16, 0.0), {}, {});
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 3);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(IsTraversable(flat, {u(rng), u(rng)}, 1e-6));

  std::vector<double> cluster(25, 0.0);
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t c = 1; c <= 3; ++c) cluster[r * 5 + c] = 1.0;
  TraversabilityMap blob({0, 0}, 1.0, 5, 5, cluster, {}, {});
  EXPECT_FALSE(IsTraversable(blob, {2, 2}, 0.5));
  EXPECT_FALSE(IsTraversable(blob, {1.5, 2.5}, 0.5));
  EXPECT_TRUE(IsTraversable(blob, {0, 0}, 0.5));

  TraversabilityMap pair({0, 0}, 1.0, 2, 2, {0.2, 0.6, 0.2, 0.6}, {}, {});
  EXPECT_TRUE(IsTraversable(pair, {0.5, 0.0}, 0.4));
  EXPECT_TRUE(IsTraversable(pair, {0.5, 1.0}, 0.4));
  EXPECT_FALSE(IsTraversable(pair, {0.75, 0.5}, 0.4));
  EXPECT_THROW(IsTraversable(pair, {1.5, 0.5}, 0.4), OutOfGrid);
  EXPECT_THROW(pair.Sample({0.5, -0.1}), OutOfGrid);
}

TEST(TauExportTest, CsvAndPgmLayout) {
  TraversabilityMap m({0, 0}, 1.0, 2, 3, {0.0, 0.5, 1.0, 1.0, 1.0, 0.25}, {}, {});
  std::ostringstream csv;
  WriteTauCsv(m, csv);
  EXPECT_EQ(csv.str(), "0,0.5,1\n1,1,0.25\n");
  std::ostringstream pgm;
  WriteTauPgm(m, pgm);
  std::string bytes = pgm.str();
  const std::string header = "P5\n3 2\n255\n";
  ASSERT_EQ(bytes.size(), header.size() + 6);
  EXPECT_EQ(bytes.substr(0, header.size()), header);
  // First image row is grid row 1 (highest y).
  EXPECT_EQ(static_cast<unsigned char>(bytes[header.size() + 0]), 0);
  EXPECT_EQ(static_cast<unsigned char>(bytes[header.size() + 2]), 191);
  EXPECT_EQ(static_cast<unsigned char>(bytes[header.size() + 3]), 255);
  EXPECT_EQ(static_cast<unsigned char>(bytes[header.size() + 4]), 128);
}

}  // namespace
}  // namespace exdeploy
