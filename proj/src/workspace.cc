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

#include "exdeploy/workspace.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace exdeploy {

namespace {

bool Overlap(const Polygon& a, const Polygon& b) {
  if (a.max_x() < b.min_x() || b.max_x() < a.min_x() ||
      a.max_y() < b.min_y() || b.max_y() < a.min_y()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b.SegmentHitsInterior(a.vertex(i), a.next(i))) return true;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (a.SegmentHitsInterior(b.vertex(i), b.next(i))) return true;
  }
  // Identical or nested outlines share no crossing edges.
  return a.ContainsStrictly(b.InteriorPoint()) ||
         b.ContainsStrictly(a.InteriorPoint());
}

}  // namespace

Workspace2D::Workspace2D(Bounds bounds, std::vector<Polygon> obstacles)
    : bounds_(bounds), obstacles_(std::move(obstacles)) {
  if (!IsFinite(bounds_.min) || !IsFinite(bounds_.max) ||
      !(bounds_.min.x < bounds_.max.x) || !(bounds_.min.y < bounds_.max.y)) {
    throw std::invalid_argument("bounds must be a non-empty rectangle");
  }
  for (std::size_t k = 0; k < obstacles_.size(); ++k) {
    for (const Point2& v : obstacles_[k].vertices()) {
      if (!bounds_.Contains(v)) {
        throw std::invalid_argument("obstacle " + std::to_string(k) +
                                    " has a vertex outside the bounds");
      }
    }
  }
  for (std::size_t i = 0; i < obstacles_.size(); ++i) {
    for (std::size_t j = i + 1; j < obstacles_.size(); ++j) {
      if (Overlap(obstacles_[i], obstacles_[j])) {
        throw std::invalid_argument("obstacles " + std::to_string(i) + " and " +
                                    std::to_string(j) + " overlap");
      }
    }
  }
}

bool SegmentIntersectsObstacles(Point2 a, Point2 b, const Workspace2D& w) {
  return std::any_of(
      w.obstacles().begin(), w.obstacles().end(),
      [&](const Polygon& poly) { return poly.SegmentHitsInterior(a, b); });
}

bool PointInFreeSpace(Point2 p, const Workspace2D& w) {
  if (!IsFinite(p) || !w.bounds().Contains(p)) return false;
  return std::none_of(
      w.obstacles().begin(), w.obstacles().end(),
      [&](const Polygon& poly) { return poly.ContainsStrictly(p); });
}

TerrainGrid::TerrainGrid(Point2 origin, double cell_size, std::size_t rows,
                         std::size_t cols, std::vector<double> heights)
    : origin_(origin),
      cell_size_(cell_size),
      rows_(rows),
      cols_(cols),
      heights_(std::move(heights)) {
  if (rows_ < 2 || cols_ < 2) {
    throw std::invalid_argument("terrain grid needs at least 2x2 samples");
  }
  if (!(cell_size_ > 0.0) || !std::isfinite(cell_size_)) {
    throw std::invalid_argument("cell_size must be positive");
  }
  if (!IsFinite(origin_)) throw std::invalid_argument("origin must be finite");
  if (heights_.size() != rows_ * cols_) {
    throw std::invalid_argument("heights size does not match rows x cols");
  }
  for (double h : heights_) {
    if (!std::isfinite(h)) throw std::invalid_argument("non-finite height");
  }
}

double BilinearSample(const std::vector<double>& values, std::size_t rows,
                      std::size_t cols, Point2 origin, double cell_size,
                      Point2 p) {
  const double gx = std::clamp((p.x - origin.x) / cell_size, 0.0,
                               static_cast<double>(cols - 1));
  const double gy = std::clamp((p.y - origin.y) / cell_size, 0.0,
                               static_cast<double>(rows - 1));
  const std::size_t c0 = std::min(static_cast<std::size_t>(gx), cols - 2);
  const std::size_t r0 = std::min(static_cast<std::size_t>(gy), rows - 2);
  const double tx = gx - static_cast<double>(c0);
  const double ty = gy - static_cast<double>(r0);
  const double v00 = values[r0 * cols + c0];
  const double v01 = values[r0 * cols + c0 + 1];
  const double v10 = values[(r0 + 1) * cols + c0];
  const double v11 = values[(r0 + 1) * cols + c0 + 1];
  const double bottom = v00 + tx * (v01 - v00);
  const double top = v10 + tx * (v11 - v10);
  return bottom + ty * (top - bottom);
}

}  // namespace exdeploy
