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

#include "exdeploy/coverage.h"

#include <algorithm>
#include <limits>

#include "exdeploy/errors.h"

namespace exdeploy {

namespace {

void CheckRows(std::span<const int> rows, std::size_t limit) {
  for (int r : rows) {
    if (r < 0 || static_cast<std::size_t>(r) >= limit) {
      throw InvalidParams("selection index outside the matrix");
    }
  }
}

void CheckShape(const Scenario& scenario, const DistanceMatrix& m) {
  if (m.sites() != scenario.candidates.size() ||
      m.targets() != scenario.targets.size()) {
    throw DimensionMismatch("matrix shape does not match candidates x targets");
  }
}

DeploymentProblem MakeProblem(const Scenario& scenario, const DistanceMatrix& m,
                              Task task) {
  DeploymentProblem problem;
  problem.utility = std::make_shared<CoverageUtility>(AugmentWithPhantom(m));
  if (scenario.partition) {
    problem.constraint = *scenario.partition;
  } else {
    problem.constraint = scenario.k;
  }
  problem.task = task;
  return problem;
}

}  // namespace

double ExemplarLoss(std::span<const int> rows, const AugmentedMatrix& m) {
  if (rows.empty()) throw EmptySet("exemplar loss needs a nonempty set");
  CheckRows(rows, m.rows());
  if (m.targets() == 0) return 0.0;
  double total = 0.0;
  for (std::size_t t = 0; t < m.targets(); ++t) {
    double best = std::numeric_limits<double>::infinity();
    for (int r : rows) best = std::min(best, m.at(static_cast<std::size_t>(r), t));
    total += best;
  }
  return total / static_cast<double>(m.targets());
}

double Utility(std::span<const int> sites, const AugmentedMatrix& m) {
  const int phantom = static_cast<int>(m.phantom());
  std::vector<int> rows;
  rows.reserve(sites.size() + 1);
  for (int s : sites) {
    if (s == phantom) throw PhantomInSelection("phantom element in selection");
    rows.push_back(s);
  }
  rows.push_back(phantom);
  const int only_phantom[] = {phantom};
  return ExemplarLoss(only_phantom, m) - ExemplarLoss(rows, m);
}

DeploymentProblem BuildFairAccess(const Scenario& scenario, const DistanceMatrix& m) {
  CheckShape(scenario, m);
  return MakeProblem(scenario, m, Task::kFairAccess);
}

DeploymentProblem BuildHotspot(const Scenario& scenario, const DistanceMatrix& m) {
  CheckShape(scenario, m);
  const HotspotParams hp = ResolveHotspot(scenario);
  return MakeProblem(scenario, ApplyHotspot(m, hp.ell, hp.cap), Task::kHotspot);
}

DeploymentProblem BuildProblem(const Scenario& scenario, const DistanceMatrix& m) {
  return scenario.task == Task::kHotspot ? BuildHotspot(scenario, m)
                                         : BuildFairAccess(scenario, m);
}

GreedyResult Solve(const DeploymentProblem& problem, GreedyOptions options) {
  if (const int* k = std::get_if<int>(&problem.constraint)) {
    return GreedyCardinality(*problem.utility, *k, options);
  }
  return GreedyPartition(*problem.utility,
                         std::get<PartitionConstraint>(problem.constraint), options);
}

double MaxTargetDistance(std::span<const int> sites, const DistanceMatrix& m) {
  if (sites.empty()) throw EmptySet("max target distance needs a nonempty set");
  CheckRows(sites, m.sites());
  double worst = 0.0;
  for (std::size_t t = 0; t < m.targets(); ++t) {
    double best = std::numeric_limits<double>::infinity();
    for (int s : sites) best = std::min(best, m.at(static_cast<std::size_t>(s), t));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<int> NearestAssignment(std::span<const int> sites, const DistanceMatrix& m) {
  if (sites.empty()) throw EmptySet("assignment needs a nonempty set");
  CheckRows(sites, m.sites());
  std::vector<int> out(m.targets());
  for (std::size_t t = 0; t < m.targets(); ++t) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int s : sites) {
      const double d = m.at(static_cast<std::size_t>(s), t);
      if (d < best_d || (d == best_d && s < best)) {
        best_d = d;
        best = s;
      }
    }
    out[t] = best;
  }
  return out;
}

}  // namespace exdeploy
