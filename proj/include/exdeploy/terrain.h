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

#ifndef EXDEPLOY_TERRAIN_H_
#define EXDEPLOY_TERRAIN_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "exdeploy/geometry.h"
#include "exdeploy/workspace.h"

namespace exdeploy {

inline constexpr int kDefaultFeatureWindow = 3;

// Local terrain descriptors sampled on the elevation lattice. All three are
// linear in the height scale.
struct FeatureMaps {
  Point2 origin;
  double cell_size = 1.0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> slope;        // central-difference gradient magnitude
  std::vector<double> flatness;     // window standard deviation of height
  std::vector<double> step_height;  // window max minus min height
};

// Border samples use clamped (replicated) windows. Throws InvalidWindow for an
// even or < 3 window and WindowTooLarge when window > min(rows, cols).
FeatureMaps ComputeFeatureMaps(const TerrainGrid& grid,
                               int window = kDefaultFeatureWindow);

struct TraversabilityWeights {
  double slope = 0.4;
  double flatness = 0.3;
  double step = 0.3;
};

struct TraversabilityThresholds {
  double slope = 1.0;     // s_crit, rise over run
  double flatness = 1.0;  // f_crit, length
  double step = 1.0;      // zeta_crit, length
};

// Per-sample score in [0, 1]: 0 is easiest, 1 is at or beyond the vehicle's
// critical limits.
class TraversabilityMap {
 public:
  TraversabilityMap(Point2 origin, double cell_size, std::size_t rows,
                    std::size_t cols, std::vector<double> tau,
                    TraversabilityWeights weights,
                    TraversabilityThresholds thresholds);

  Point2 origin() const { return origin_; }
  double cell_size() const { return cell_size_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<double>& tau() const { return tau_; }
  double at(std::size_t r, std::size_t c) const { return tau_[r * cols_ + c]; }
  const TraversabilityWeights& weights() const { return weights_; }
  const TraversabilityThresholds& thresholds() const { return thresholds_; }
  Bounds footprint() const;

  // Bilinear tau at p. Throws OutOfGrid outside the footprint.
  double Sample(Point2 p) const;

 private:
  Point2 origin_;
  double cell_size_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> tau_;
  TraversabilityWeights weights_;
  TraversabilityThresholds thresholds_;
};

// tau = clamp(w1 * slope / s_crit + w2 * flatness / f_crit + w3 * step /
// zeta_crit, 0, 1). Weights must be positive and sum to 1 within 1e-9
// (InvalidWeights); thresholds must be positive (InvalidParams). Scores within
// 1e-9 of 1 are reported as exactly 1.
// `allow_degenerate_weights` admits zero weights, for sensitivity tests.
TraversabilityMap ComputeTraversability(const FeatureMaps& features,
                                        const TraversabilityWeights& weights,
                                        const TraversabilityThresholds& thresholds,
                                        bool allow_degenerate_weights = false);

// Interpolated tau at p is at most tau_max. Throws OutOfGrid.
bool IsTraversable(const TraversabilityMap& map, Point2 p, double tau_max);

// Row-major CSV of tau, one grid row per line, first line is row 0.
void WriteTauCsv(const TraversabilityMap& map, std::ostream& out);
// Binary PGM (P5), 0 = black = tau 1. Top image row is the highest y.
void WriteTauPgm(const TraversabilityMap& map, std::ostream& out);

}  // namespace exdeploy

#endif  // EXDEPLOY_TERRAIN_H_
