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

#ifndef EXDEPLOY_RRTSTAR_H_
#define EXDEPLOY_RRTSTAR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exdeploy/distance_matrix.h"
#include "exdeploy/geometry.h"
#include "exdeploy/terrain.h"

namespace exdeploy {

struct RrtParams {
  int samples = 2000;
  double step = 2.0;            // max extension per steer
  double radius_const = 50.0;   // gamma in the rewire radius schedule
  std::uint64_t seed = 0;
  double tau_max = 0.5;
  // Spacing of tau checks along an edge; 0 selects half the map cell size.
  double edge_check_resolution = 0.0;
  // Off: edge cost is horizontal length and tau only gates feasibility.
  // On: edge cost is length * (1 + mean tau along the edge).
  bool traversability_weighted_cost = false;

  // Throws InvalidParams.
  void Validate() const;
};

// Smallest gamma for which the (log n / n)^(1/2) radius schedule keeps RRT*
// asymptotically optimal on a free region of the given area.
double MinimumRewireConstant(double free_area);

struct RrtTree {
  std::vector<Point2> nodes;
  std::vector<int> parent;   // -1 for the root
  std::vector<double> cost;  // cost-to-root
};

struct RrtPlan {
  double length = 0.0;
  std::vector<Point2> polyline;
};

struct RrtOutcome {
  std::optional<RrtPlan> plan;  // nullopt: goal never connected
  RrtTree tree;
};

// Traversability-gated RRT* from start to goal. Deterministic in
// params.seed. Throws InvalidEndpoint when start or goal is off the map or
// above tau_max.
RrtOutcome PlanWithTree(Point2 start, Point2 goal, const TraversabilityMap& map,
                        const RrtParams& params);

std::optional<RrtPlan> Plan(Point2 start, Point2 goal,
                            const TraversabilityMap& map,
                            const RrtParams& params);

// Seed for pair (i, j) derived from the master seed.
std::uint64_t PairSeed(std::uint64_t seed, std::size_t site, std::size_t target);

// One independent planner per (site, target) pair, each with PairSeed.
// Unreachable pairs and non-traversable endpoints become
// UnreachableCap(map footprint); the latter also append to `warnings`.
DistanceMatrix PairwiseMatrix(std::span<const Point2> sites,
                              std::span<const Point2> targets,
                              const TraversabilityMap& map,
                              const RrtParams& params, int threads = 1,
                              std::vector<std::string>* warnings = nullptr,
                              std::string metric_tag = "rrtstar");

}  // namespace exdeploy

#endif  // EXDEPLOY_RRTSTAR_H_
