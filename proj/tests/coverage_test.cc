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
#include <filesystem>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "exdeploy/coverage.h"
#include "exdeploy/errors.h"
#include "exdeploy/metrics.h"
#include "exdeploy/scenario.h"
#include "oracles/oracles.h"

namespace exdeploy {
namespace {

namespace fs = std::filesystem;
const fs::path kScenarios = EXDEPLOY_SCENARIO_DIR;

DistanceMatrix Mat(std::size_t rows, std::size_t cols, std::vector<double> v, double d_max = 1000.0) {
  return DistanceMatrix(rows, cols, std::move(v), d_max, "test");
}

std::vector<std::vector<double>> Rows(const DistanceMatrix& m) {
  std::vector<std::vector<double>> out(m.sites(), std::vector<double>(m.targets()));
  for (std::size_t i = 0; i < m.sites(); ++i)
    for (std::size_t j = 0; j < m.targets(); ++j) out[i][j] = m.at(i, j);
  return out;
}

DistanceMatrix RandomMatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_real_distribution<double> u(0.0, 50.0);
  std::vector<double> v(rows * cols);
  for (double& x : v) x = u(rng);
  return Mat(rows, cols, v, 100.0);
}

TEST(ExemplarLossTest, Examples) {
  AugmentedMatrix a = AugmentWithPhantom(Mat(1, 1, {3}), 7.0);
  const int phantom[] = {1};
  EXPECT_EQ(ExemplarLoss(phantom, a), 7.0);

  AugmentedMatrix b = AugmentWithPhantom(Mat(2, 2, {1, 5, 4, 2}));
  const int both[] = {0, 1};
  EXPECT_EQ(ExemplarLoss(both, b), 1.5);
  EXPECT_THROW(ExemplarLoss({}, b), EmptySet);
  const int bad[] = {3};
  EXPECT_THROW(ExemplarLoss(bad, b), InvalidParams);
}

TEST(UtilityTest, Examples) {
  AugmentedMatrix a = AugmentWithPhantom(Mat(1, 2, {1, 3}), 7.0);
  EXPECT_EQ(Utility({}, a), 0.0);
  const int s[] = {0};
  EXPECT_EQ(Utility(s, a), 5.0);
  const int with_phantom[] = {0, 1};
  EXPECT_THROW(Utility(with_phantom, a), PhantomInSelection);
}

TEST(UtilityTest, MatchesOracleOnEverySubset) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 6, t = 1 + trial % 8;
    DistanceMatrix m = RandomMatrix(rng, n, t);
    const double d0 = m.MaxEntry() + (trial % 3);
    AugmentedMatrix a = AugmentWithPhantom(m, d0);
    const auto rows = Rows(m);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> subset;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) subset.push_back(static_cast<int>(i));
      EXPECT_NEAR(Utility(subset, a), oracle::CoverageValue(rows, d0, subset), 1e-9);
    }
  }
}

TEST(UtilityTest, MonotoneSubmodularOnRandomInstances) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> sites(1, 6), targets(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    DistanceMatrix m = RandomMatrix(rng, sites(rng), targets(rng));
    for (const DistanceMatrix& variant : {m, ApplyHotspot(m, 20.0, std::log1p(60.0))}) {
      CoverageUtility f(AugmentWithPhantom(variant));
      PropertyReport r = CheckProperties(f, 1);
      EXPECT_TRUE(r.exhaustive);
      EXPECT_EQ(r.monotone_violations, 0u);
      EXPECT_EQ(r.submodular_violations, 0u);
    }
  }
}

TEST(UtilityTest, GreedyIsScaleInvariant) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    DistanceMatrix m = RandomMatrix(rng, 10, 12);
    std::vector<double> scaled = m.values();
    for (double& x : scaled) x *= 3.5;
    CoverageUtility f(AugmentWithPhantom(m));
    CoverageUtility g(AugmentWithPhantom(Mat(10, 12, scaled, 350.0)));
    GreedyResult a = GreedyCardinality(f, 4);
    GreedyResult b = GreedyCardinality(g, 4);
    EXPECT_EQ(a.selected, b.selected);
    EXPECT_NEAR(b.value, 3.5 * a.value, 1e-9 * b.value);
  }
}

TEST(ProblemTest, FairAccessOnLargeScenario) {
  Scenario s = LoadScenario(kScenarios / "scenario_fig3.json");
  DistanceMatrix m = BuildMatrix(s, Metric::kEuclidean);
  DeploymentProblem p = BuildFairAccess(s, m);
  EXPECT_EQ(p.task, Task::kFairAccess);
  ASSERT_TRUE(std::holds_alternative<int>(p.constraint));
  GreedyResult r = Solve(p);
  EXPECT_EQ(r.selected.size(), 6u);
  EXPECT_EQ(r.guarantee, Guarantee::kOneMinusInverseE);
  EXPECT_EQ(p.utility->matrix().d0(), m.MaxEntry());
  for (std::size_t i = 1; i < r.gains.size(); ++i) EXPECT_LE(r.gains[i], r.gains[i - 1] + 1e-9);
}

TEST(ProblemTest, SingleCandidate) {
  CoverageUtility f(AugmentWithPhantom(Mat(1, 2, {1, 3})));
  EXPECT_EQ(GreedyCardinality(f, 1).selected, std::vector<int>{0});
  EXPECT_THROW(ParseScenario(R"({"bounds": [0, 0, 4, 4], "obstacles": [],
      "targets": [[1, 1], [3, 3]], "candidates": [[2, 2]], "K": 1})"),
               ValidationError);
}

TEST(ProblemTest, PartitionPassesThrough) {
  Scenario s = LoadScenario(kScenarios / "small_partition.json");
  DistanceMatrix m = BuildMatrix(s, Metric::kVisgraph);
  DeploymentProblem p = BuildProblem(s, m);
  ASSERT_TRUE(std::holds_alternative<PartitionConstraint>(p.constraint));
  GreedyResult r = Solve(p);
  EXPECT_EQ(r.guarantee, Guarantee::kHalf);
  ASSERT_EQ(r.selected.size(), 3u);
  int first = 0, second = 0;
  for (int e : r.selected) (e < 4 ? first : second)++;
  EXPECT_EQ(first, 2);
  EXPECT_EQ(second, 1);
}

TEST(ProblemTest, DimensionMismatch) {
  Scenario s = LoadScenario(kScenarios / "minimal.json");
  DistanceMatrix wrong = Mat(2, 2, {1, 2, 3, 4});
  EXPECT_THROW(BuildFairAccess(s, wrong), DimensionMismatch);
  EXPECT_THROW(BuildHotspot(s, wrong), DimensionMismatch);
}

TEST(HotspotProblemTest, SmallDistancesBecomeLogs) {
  DistanceMatrix m = Mat(2, 3, {0.5, 1, 2, 3, 4, 5});
  DistanceMatrix h = ApplyHotspot(m, 10.0, std::log1p(10.0));
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(h.values()[k], std::log1p(m.values()[k]));
}

TEST(HotspotProblemTest, EverythingBeyondThresholdIsWorthless) {
  DistanceMatrix m = Mat(3, 2, {6, 7, 8, 9, 10, 11});
  CoverageUtility f(AugmentWithPhantom(ApplyHotspot(m, 5.0, 2.0)));
  const int all[] = {0, 1, 2};
  EXPECT_EQ(f.Evaluate(all), 0.0);
  EXPECT_EQ(f.matrix().d0(), 2.0);
}

TEST(HotspotProblemTest, ClusterBeatsOutliers) {
  std::string targets;
  for (int i = 0; i < 20; ++i) {
    targets += "[" + std::to_string(18 + (i % 5)) + ", " + std::to_string(18 + i / 5) + "], ";
  }
  targets += "[95, 95], [95, 5]";
  // Candidate 1 minimizes the worst distance; candidate 0 sits in the cluster.
  const std::string doc = R"({"bounds": [0, 0, 100, 100], "obstacles": [],
      "task": "hotspot", "hotspot": {"ell": 10, "L": 3},
      "candidates": [[20, 20], [60, 50]], "K": 1, "targets": [)" + targets + "]}";
  Scenario s = ParseScenario(doc);
  DistanceMatrix m = BuildMatrix(s, Metric::kEuclidean);
  DeploymentProblem p = BuildProblem(s, m);
  EXPECT_EQ(p.task, Task::kHotspot);
  GreedyResult r = Solve(p);
  EXPECT_EQ(r.selected, std::vector<int>{0});
  const int cluster[] = {0}, middle[] = {1};
  EXPECT_GT(MaxTargetDistance(cluster, m), MaxTargetDistance(middle, m));
}

TEST(MaxTargetDistanceTest, Examples) {
  DistanceMatrix m = Mat(2, 2, {1, 5, 4, 2});
  const int first[] = {0}, both[] = {0, 1};
  EXPECT_EQ(MaxTargetDistance(first, m), 5.0);
  EXPECT_EQ(MaxTargetDistance(both, m), 2.0);
  EXPECT_THROW(MaxTargetDistance({}, m), EmptySet);
}

TEST(MaxTargetDistanceTest, NonincreasingInTheSet) {
  std::mt19937_64 rng(13);
  DistanceMatrix m = RandomMatrix(rng, 8, 10);
  std::vector<int> s;
  double prev = INFINITY;
  for (int e : {5, 2, 7, 0, 3}) {
    s.push_back(e);
    double v = MaxTargetDistance(s, m);
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(NearestAssignmentTest, TiesGoToLowerIndex) {
  DistanceMatrix m = Mat(3, 3, {1, 4, 2, 1, 3, 2, 5, 3, 9});
  const int s[] = {2, 1, 0};
  EXPECT_EQ(NearestAssignment(s, m), (std::vector<int>{0, 1, 0}));
  const int only[] = {2};
  EXPECT_EQ(NearestAssignment(only, m), (std::vector<int>{2, 2, 2}));
  EXPECT_THROW(NearestAssignment({}, m), EmptySet);
}

}  // namespace
}  // namespace exdeploy
