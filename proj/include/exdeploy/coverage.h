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

#ifndef EXDEPLOY_COVERAGE_H_
#define EXDEPLOY_COVERAGE_H_

#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "exdeploy/distance_matrix.h"
#include "exdeploy/metrics.h"
#include "exdeploy/scenario.h"
#include "exdeploy/submodular.h"

namespace exdeploy {

// Mean over targets of the distance to the nearest exemplar in `rows`, where
// rows index the augmented matrix (the phantom is m.phantom()). Throws
// EmptySet for an empty selection.
double ExemplarLoss(std::span<const int> rows, const AugmentedMatrix& m);

// f(R) = L({d0}) - L(R + {d0}). Throws PhantomInSelection if R names the
// phantom row.
double Utility(std::span<const int> sites, const AugmentedMatrix& m);

// Exemplar-clustering coverage utility over candidate sites. Monotone and
// submodular for any nonnegative matrix, symmetric or not.
class CoverageUtility : public SetFunction {
 public:
  explicit CoverageUtility(AugmentedMatrix matrix) : matrix_(std::move(matrix)) {}

  std::size_t ground_size() const override { return matrix_.base().sites(); }
  double Evaluate(std::span<const int> subset) const override {
    return Utility(subset, matrix_);
  }
  const AugmentedMatrix& matrix() const { return matrix_; }

 private:
  AugmentedMatrix matrix_;
};

struct DeploymentProblem {
  std::shared_ptr<const CoverageUtility> utility;
  std::variant<int, PartitionConstraint> constraint;  // K or blocks
  Task task = Task::kFairAccess;
};

// Utility over the raw shortest-path matrix. Throws DimensionMismatch when
// the matrix shape differs from candidates x targets.
DeploymentProblem BuildFairAccess(const Scenario& scenario, const DistanceMatrix& m);

// Utility over the truncated-log transform with ResolveHotspot(scenario).
DeploymentProblem BuildHotspot(const Scenario& scenario, const DistanceMatrix& m);

// Dispatches on scenario.task.
DeploymentProblem BuildProblem(const Scenario& scenario, const DistanceMatrix& m);

// Cardinality greedy for K, partition greedy for blocks.
GreedyResult Solve(const DeploymentProblem& problem, GreedyOptions options = {});

// Worst target's distance to its nearest selected site. Throws EmptySet.
double MaxTargetDistance(std::span<const int> sites, const DistanceMatrix& m);

// Nearest selected site per target (lowest site id on ties). Throws EmptySet.
std::vector<int> NearestAssignment(std::span<const int> sites,
                                   const DistanceMatrix& m);

}  // namespace exdeploy

#endif  // EXDEPLOY_COVERAGE_H_
