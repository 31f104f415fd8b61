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

#ifndef EXDEPLOY_GEOMETRY_H_
#define EXDEPLOY_GEOMETRY_H_

#include <cmath>
#include <span>
#include <vector>

namespace exdeploy {

// Tolerance on cross-product signs and on-boundary tests, in workspace
// units. Scenario coordinates are decimal inputs on 100-unit scales.
inline constexpr double kGeomEps = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
};

inline double Dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double Cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double Norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double Distance(Point2 a, Point2 b) { return Norm(b - a); }
inline bool IsFinite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Sign of the turn a -> b -> c: +1 left (counter-clockwise), -1 right, 0 when
// the cross product is within kGeomEps of zero.
int Orientation(Point2 a, Point2 b, Point2 c);

// Distance from p to the closed segment [a, b].
double DistanceToSegment(Point2 p, Point2 a, Point2 b);

// True when p lies on the closed segment [a, b] (within kGeomEps).
bool OnSegment(Point2 p, Point2 a, Point2 b);

// True when the open segments (a, b) and (c, d) cross at a single point
// interior to both, with the endpoints of each strictly on opposite sides of
// the other.
bool ProperlyCross(Point2 a, Point2 b, Point2 c, Point2 d);

// Signed area, positive for counter-clockwise vertex order.
double SignedArea(std::span<const Point2> ring);

// Simple polygon with counter-clockwise vertices. Construction validates and
// canonicalises: clockwise input is reversed; fewer than three vertices,
// repeated consecutive vertices, collinear consecutive triples, zero area and
// self-intersection are rejected with std::invalid_argument.
class Polygon {
 public:
  explicit Polygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& vertex(std::size_t i) const { return vertices_[i]; }
  const Point2& next(std::size_t i) const {
    return vertices_[(i + 1) % vertices_.size()];
  }
  const Point2& prev(std::size_t i) const {
    return vertices_[(i + vertices_.size() - 1) % vertices_.size()];
  }

  // Interior angle at vertex i is strictly less than pi.
  bool IsConvexVertex(std::size_t i) const;

  bool OnBoundary(Point2 p) const;
  // Strictly interior: inside by even-odd rule and not on the boundary.
  bool ContainsStrictly(Point2 p) const;
  // A point guaranteed to be strictly inside the polygon.
  Point2 InteriorPoint() const;

  // True when the open segment (a, b) meets the polygon interior, either by
  // crossing an edge transversally or by running through the interior
  // between boundary contacts. Sliding along an edge is not a hit.
  bool SegmentHitsInterior(Point2 a, Point2 b) const;

  double min_x() const { return min_.x; }
  double min_y() const { return min_.y; }
  double max_x() const { return max_.x; }
  double max_y() const { return max_.y; }

 private:
  std::vector<Point2> vertices_;
  Point2 min_;
  Point2 max_;
};

}  // namespace exdeploy

#endif  // EXDEPLOY_GEOMETRY_H_
