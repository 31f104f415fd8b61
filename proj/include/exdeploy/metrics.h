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

#ifndef EXDEPLOY_METRICS_H_
#define EXDEPLOY_METRICS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exdeploy/distance_matrix.h"
#include "exdeploy/scenario.h"
#include "exdeploy/terrain.h"

namespace exdeploy {

// log(1 + d) for d <= ell, cap above it (natural log). Throws InvalidParams
// for d < 0, ell <= 0 or cap < log(1 + ell); the last would make the
// transform non-monotone.
double HotspotTransform(double d, double ell, double cap);

// Element-wise HotspotTransform; the result's D_max is `cap`.
DistanceMatrix ApplyHotspot(const DistanceMatrix& m, double ell, double cap);

// Site matrix plus one phantom exemplar row (index m.sites()) at constant
// distance d0 from every target.
class AugmentedMatrix {
 public:
  AugmentedMatrix(DistanceMatrix base, double d0);

  const DistanceMatrix& base() const { return base_; }
  double d0() const { return d0_; }
  std::size_t phantom() const { return base_.sites(); }
  std::size_t rows() const { return base_.sites() + 1; }
  std::size_t targets() const { return base_.targets(); }
  double at(std::size_t row, std::size_t target) const {
    return row == phantom() ? d0_ : base_.at(row, target);
  }

 private:
  DistanceMatrix base_;
  double d0_;
};

// d0 defaults to the largest base entry, so every real site is at least as
// close as the phantom to every target. Throws InvalidD0 for an explicit d0
// below that.
AugmentedMatrix AugmentWithPhantom(const DistanceMatrix& m,
                                   std::optional<double> d0 = std::nullopt);

enum class Metric { kEuclidean, kVisgraph, kRrtstar, kRrtstarUnweighted };

// Accepts euclidean, visgraph, rrtstar, rrtstar-unweighted (or _unweighted).
// Throws ValidationError.
Metric ParseMetric(std::string_view name);
std::string MetricName(Metric metric);

struct MatrixOptions {
  bool use_cache = false;
  std::filesystem::path cache_dir;
  int threads = 1;
  std::vector<std::string>* warnings = nullptr;  // rrt endpoint warnings
  bool* cache_hit = nullptr;
};

DistanceMatrix EuclideanMatrix(std::span<const Point2> sites,
                               std::span<const Point2> targets, double d_max);

// Traversability map from the scenario terrain and terrain_params.
TraversabilityMap ScenarioTraversability(const Scenario& scenario);

// Candidate -> target matrix for the scenario. visgraph needs an obstacle
// workspace and the rrtstar metrics need terrain (MetricGeometryMismatch
// otherwise). rrtstar-unweighted runs the same planner with tau_max = 1.
// With use_cache set, results are read from and written to
// <cache_dir>/<scenario hash>.<metric>.csv plus .meta.json.
DistanceMatrix BuildMatrix(const Scenario& scenario, Metric metric,
                           const MatrixOptions& options = {});

// Cache file pair. The meta document records everything the matrix depends
// on beyond the scenario hash; a mismatch invalidates the entry.
struct MatrixCacheEntry {
  std::filesystem::path csv;
  std::filesystem::path meta;
};
MatrixCacheEntry CachePaths(const std::filesystem::path& dir,
                            const std::string& scenario_hash, Metric metric);

// site_index,target_index,distance rows with round-trip precision.
void WriteMatrixCsv(const DistanceMatrix& m, std::ostream& out);
// Throws ParseError on malformed or incomplete input.
std::vector<double> ReadMatrixCsv(std::istream& in, std::size_t sites,
                                  std::size_t targets);

}  // namespace exdeploy

#endif  // EXDEPLOY_METRICS_H_
