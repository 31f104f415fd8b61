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

#include "exdeploy/terrain.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "exdeploy/errors.h"

namespace exdeploy {

namespace {

constexpr double kWeightSumTolerance = 1e-9;

std::size_t Clamp(long i, std::size_t n) {
  return static_cast<std::size_t>(std::clamp<long>(i, 0, static_cast<long>(n) - 1));
}

}  // namespace

FeatureMaps ComputeFeatureMaps(const TerrainGrid& grid, int window) {
  if (window < 3 || window % 2 == 0) {
    throw InvalidWindow("feature window must be odd and >= 3");
  }
  const std::size_t rows = grid.rows();
  const std::size_t cols = grid.cols();
  if (static_cast<std::size_t>(window) > std::min(rows, cols)) {
    throw WindowTooLarge("feature window exceeds grid size");
  }
  FeatureMaps maps;
  maps.origin = grid.origin();
  maps.cell_size = grid.cell_size();
  maps.rows = rows;
  maps.cols = cols;
  maps.slope.resize(rows * cols);
  maps.flatness.resize(rows * cols);
  maps.step_height.resize(rows * cols);

  const long half = window / 2;
  const double count = static_cast<double>(window) * window;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const long ri = static_cast<long>(r);
      const long ci = static_cast<long>(c);
      // One-sided differences at the border fall out of index clamping.
      const std::size_t cl = Clamp(ci - 1, cols), cr = Clamp(ci + 1, cols);
      const std::size_t rd = Clamp(ri - 1, rows), ru = Clamp(ri + 1, rows);
      const double dx = (grid.height(r, cr) - grid.height(r, cl)) /
                        (static_cast<double>(cr - cl) * grid.cell_size());
      const double dy = (grid.height(ru, c) - grid.height(rd, c)) /
                        (static_cast<double>(ru - rd) * grid.cell_size());

      double sum = 0.0;
      double lo = grid.height(r, c);
      double hi = lo;
      for (long wr = -half; wr <= half; ++wr) {
        for (long wc = -half; wc <= half; ++wc) {
          const double h = grid.height(Clamp(ri + wr, rows), Clamp(ci + wc, cols));
          sum += h;
          lo = std::min(lo, h);
          hi = std::max(hi, h);
        }
      }
      const double mean = sum / count;
      double var = 0.0;
      for (long wr = -half; wr <= half; ++wr) {
        for (long wc = -half; wc <= half; ++wc) {
          const double d =
              grid.height(Clamp(ri + wr, rows), Clamp(ci + wc, cols)) - mean;
          var += d * d;
        }
      }
      const std::size_t k = r * cols + c;
      maps.slope[k] = std::hypot(dx, dy);
      maps.flatness[k] = std::sqrt(var / count);
      maps.step_height[k] = hi - lo;
    }
  }
  return maps;
}

TraversabilityMap::TraversabilityMap(Point2 origin, double cell_size,
                                     std::size_t rows, std::size_t cols,
                                     std::vector<double> tau,
                                     TraversabilityWeights weights,
                                     TraversabilityThresholds thresholds)
    : origin_(origin),
      cell_size_(cell_size),
      rows_(rows),
      cols_(cols),
      tau_(std::move(tau)),
      weights_(weights),
      thresholds_(thresholds) {
  if (rows_ < 2 || cols_ < 2 || tau_.size() != rows_ * cols_ ||
      !(cell_size_ > 0.0)) {
    throw InvalidParams("traversability map shape is inconsistent");
  }
}

Bounds TraversabilityMap::footprint() const {
  return {origin_,
          {origin_.x + cell_size_ * static_cast<double>(cols_ - 1),
           origin_.y + cell_size_ * static_cast<double>(rows_ - 1)}};
}

double TraversabilityMap::Sample(Point2 p) const {
  if (!IsFinite(p) || !footprint().Contains(p)) {
    throw OutOfGrid("point outside the traversability map");
  }
  return BilinearSample(tau_, rows_, cols_, origin_, cell_size_, p);
}

TraversabilityMap ComputeTraversability(const FeatureMaps& features,
                                        const TraversabilityWeights& weights,
                                        const TraversabilityThresholds& thresholds,
                                        bool allow_degenerate_weights) {
  const double ws[] = {weights.slope, weights.flatness, weights.step};
  for (double w : ws) {
    const bool ok = allow_degenerate_weights ? w >= 0.0 : w > 0.0;
    if (!ok || !std::isfinite(w)) {
      throw InvalidWeights("traversability weights must be positive");
    }
  }
  if (std::abs(ws[0] + ws[1] + ws[2] - 1.0) > kWeightSumTolerance) {
    throw InvalidWeights("traversability weights must sum to 1");
  }
  if (!(thresholds.slope > 0.0) || !(thresholds.flatness > 0.0) ||
      !(thresholds.step > 0.0)) {
    throw InvalidParams("critical thresholds must be positive");
  }
  std::vector<double> tau(features.rows * features.cols);
  for (std::size_t k = 0; k < tau.size(); ++k) {
    const double raw = weights.slope * features.slope[k] / thresholds.slope +
                       weights.flatness * features.flatness[k] / thresholds.flatness +
                       weights.step * features.step_height[k] / thresholds.step;
    // Scores within the weight-sum tolerance of 1 saturate.
    tau[k] = raw >= 1.0 - kWeightSumTolerance ? 1.0 : std::max(raw, 0.0);
  }
  return TraversabilityMap(features.origin, features.cell_size, features.rows,
                           features.cols, std::move(tau), weights, thresholds);
}

bool IsTraversable(const TraversabilityMap& map, Point2 p, double tau_max) {
  return map.Sample(p) <= tau_max;
}

void WriteTauCsv(const TraversabilityMap& map, std::ostream& out) {
  char buf[32];
  for (std::size_t r = 0; r < map.rows(); ++r) {
    for (std::size_t c = 0; c < map.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", map.at(r, c));
      if (c > 0) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

void WriteTauPgm(const TraversabilityMap& map, std::ostream& out) {
  out << "P5\n" << map.cols() << ' ' << map.rows() << "\n255\n";
  for (std::size_t i = 0; i < map.rows(); ++i) {
    const std::size_t r = map.rows() - 1 - i;
    for (std::size_t c = 0; c < map.cols(); ++c) {
      const double v = 255.0 * (1.0 - map.at(r, c));
      out.put(static_cast<char>(static_cast<unsigned char>(std::lround(v))));
    }
  }
}

}  // namespace exdeploy
