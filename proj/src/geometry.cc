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

#include "exdeploy/geometry.h"

#include <algorithm>
#include <stdexcept>

namespace exdeploy {

int Orientation(Point2 a, Point2 b, Point2 c) {
  const double cross = Cross(b - a, c - a);
  if (cross > kGeomEps) return 1;
  if (cross < -kGeomEps) return -1;
  return 0;
}

double DistanceToSegment(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = Dot(ab, ab);
  if (len2 == 0.0) return Distance(p, a);
  const double t = std::clamp(Dot(p - a, ab) / len2, 0.0, 1.0);
  return Distance(p, a + t * ab);
}

bool OnSegment(Point2 p, Point2 a, Point2 b) {
  return DistanceToSegment(p, a, b) <= kGeomEps;
}

bool ProperlyCross(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = Orientation(a, b, c);
  const int o2 = Orientation(a, b, d);
  const int o3 = Orientation(c, d, a);
  const int o4 = Orientation(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

double SignedArea(std::span<const Point2> ring) {
  double twice = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    twice += Cross(ring[i], ring[(i + 1) % ring.size()]);
  }
  return 0.5 * twice;
}

namespace {

// Closed-segment intersection, used only for the simplicity check.
bool SegmentsTouch(Point2 a, Point2 b, Point2 c, Point2 d) {
  return ProperlyCross(a, b, c, d) || OnSegment(c, a, b) ||
         OnSegment(d, a, b) || OnSegment(a, c, d) || OnSegment(b, c, d);
}

}  // namespace

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (const Point2& p : vertices_) {
    if (!IsFinite(p)) throw std::invalid_argument("non-finite polygon vertex");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i] == vertices_[(i + 1) % n]) {
      throw std::invalid_argument("repeated consecutive polygon vertex");
    }
  }
  const double area = SignedArea(vertices_);
  if (std::abs(area) <= kGeomEps) {
    throw std::invalid_argument("polygon has zero area");
  }
  if (area < 0.0) std::reverse(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (Orientation(prev(i), vertex(i), next(i)) == 0) {
      throw std::invalid_argument("collinear consecutive polygon vertices");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (SegmentsTouch(vertex(i), next(i), vertex(j), next(j))) {
        throw std::invalid_argument("polygon is self-intersecting");
      }
    }
  }
  min_ = max_ = vertices_.front();
  for (const Point2& p : vertices_) {
    min_ = {std::min(min_.x, p.x), std::min(min_.y, p.y)};
    max_ = {std::max(max_.x, p.x), std::max(max_.y, p.y)};
  }
}

bool Polygon::IsConvexVertex(std::size_t i) const {
  return Orientation(prev(i), vertex(i), next(i)) > 0;
}

bool Polygon::OnBoundary(Point2 p) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (OnSegment(p, vertex(i), next(i))) return true;
  }
  return false;
}

bool Polygon::ContainsStrictly(Point2 p) const {
  if (p.x < min_.x || p.x > max_.x || p.y < min_.y || p.y > max_.y) {
    return false;
  }
  if (OnBoundary(p)) return false;
  bool inside = false;
  for (std::size_t i = 0; i < size(); ++i) {
    const Point2& a = vertex(i);
    const Point2& b = next(i);
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

Point2 Polygon::InteriorPoint() const {
  // Scan line halfway between the two lowest distinct vertex heights: it
  // passes through no vertex and crosses the interior.
  std::vector<double> ys;
  ys.reserve(size());
  for (const Point2& p : vertices_) ys.push_back(p.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  const double y = 0.5 * (ys[0] + ys[1]);
  std::vector<double> xs;
  for (std::size_t i = 0; i < size(); ++i) {
    const Point2& a = vertex(i);
    const Point2& b = next(i);
    if ((a.y > y) != (b.y > y)) {
      xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
    }
  }
  std::sort(xs.begin(), xs.end());
  return {0.5 * (xs[0] + xs[1]), y};
}

bool Polygon::SegmentHitsInterior(Point2 a, Point2 b) const {
  if (std::max(a.x, b.x) < min_.x || std::min(a.x, b.x) > max_.x ||
      std::max(a.y, b.y) < min_.y || std::min(a.y, b.y) > max_.y) {
    return false;
  }
  const Point2 ab = b - a;
  const double len2 = Dot(ab, ab);
  if (len2 == 0.0) return ContainsStrictly(a);

  for (std::size_t i = 0; i < size(); ++i) {
    if (ProperlyCross(a, b, vertex(i), next(i))) return true;
  }
  // No transversal crossing: between consecutive boundary contacts the
  // segment is entirely inside or entirely outside, so one probe per piece
  // decides it. Contacts are the endpoints and any vertex on the segment.
  std::vector<double> ts = {0.0, 1.0};
  for (const Point2& v : vertices_) {
    if (OnSegment(v, a, b)) ts.push_back(std::clamp(Dot(v - a, ab) / len2, 0.0, 1.0));
  }
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (ts[i + 1] - ts[i] <= 0.0) continue;
    if (ContainsStrictly(a + (0.5 * (ts[i] + ts[i + 1])) * ab)) return true;
  }
  return false;
}

}  // namespace exdeploy
