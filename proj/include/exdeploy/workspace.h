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

#ifndef EXDEPLOY_WORKSPACE_H_
#define EXDEPLOY_WORKSPACE_H_

#include <cstddef>
#include <vector>

#include "exdeploy/geometry.h"

namespace exdeploy {

// Axis-aligned rectangle, closed.
struct Bounds {
  Point2 min;
  Point2 max;

  bool Contains(Point2 p) const {
    return p.x >= min.x - kGeomEps && p.x <= max.x + kGeomEps &&
           p.y >= min.y - kGeomEps && p.y <= max.y + kGeomEps;
  }
  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  double diagonal() const { return std::hypot(width(), height()); }
};

// Planar workspace with polygonal obstacles. Throws std::invalid_argument
// when an obstacle leaves the bounds or two obstacle interiors overlap.
class Workspace2D {
 public:
  Workspace2D(Bounds bounds, std::vector<Polygon> obstacles);

  const Bounds& bounds() const { return bounds_; }
  const std::vector<Polygon>& obstacles() const { return obstacles_; }

 private:
  Bounds bounds_;
  std::vector<Polygon> obstacles_;
};

// Open segment (a, b) meets an obstacle interior or crosses an obstacle edge
// transversally. Running along an obstacle edge does not count.
bool SegmentIntersectsObstacles(Point2 a, Point2 b, const Workspace2D& w);

// Inside the bounds and not strictly inside any obstacle.
bool PointInFreeSpace(Point2 p, const Workspace2D& w);

// Row-major elevation grid. Sample (r, c) sits at
// origin + (c * cell_size, r * cell_size); rows advance along +y.
class TerrainGrid {
 public:
  TerrainGrid(Point2 origin, double cell_size, std::size_t rows,
              std::size_t cols, std::vector<double> heights);

  Point2 origin() const { return origin_; }
  double cell_size() const { return cell_size_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<double>& heights() const { return heights_; }
  double height(std::size_t r, std::size_t c) const {
    return heights_[r * cols_ + c];
  }

  // Rectangle covered by the sample lattice.
  Bounds footprint() const {
    return {origin_,
            {origin_.x + cell_size_ * static_cast<double>(cols_ - 1),
             origin_.y + cell_size_ * static_cast<double>(rows_ - 1)}};
  }

 private:
  Point2 origin_;
  double cell_size_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> heights_;
};

// Bilinear interpolation of a row-major lattice laid out like TerrainGrid.
// Caller guarantees p lies inside the footprint.
double BilinearSample(const std::vector<double>& values, std::size_t rows,
                      std::size_t cols, Point2 origin, double cell_size,
                      Point2 p);

}  // namespace exdeploy

#endif  // EXDEPLOY_WORKSPACE_H_
