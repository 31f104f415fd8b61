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

#ifndef EXDEPLOY_VISGRAPH_H_
#define EXDEPLOY_VISGRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "exdeploy/distance_matrix.h"
#include "exdeploy/geometry.h"
#include "exdeploy/workspace.h"

namespace exdeploy {

// Roadmap over the convex obstacle vertices. Two nodes are joined when the
// segment between them stays in free space; obstacle edges between convex
// vertices qualify since sliding along an edge is free. Euclidean shortest
// paths among polygons only bend at convex vertices, so Dijkstra on this
// graph is exact.
class VisibilityGraph {
 public:
  struct Edge {
    int to;
    double weight;
  };

  explicit VisibilityGraph(const Workspace2D& workspace);

  const Workspace2D& workspace() const { return workspace_; }
  const std::vector<Point2>& nodes() const { return nodes_; }
  const std::vector<Edge>& neighbors(std::size_t node) const {
    return adjacency_[node];
  }
  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool HasEdge(std::size_t u, std::size_t v) const;

 private:
  Workspace2D workspace_;
  std::vector<Point2> nodes_;
  std::vector<std::vector<Edge>> adjacency_;
  std::size_t num_edges_ = 0;
};

VisibilityGraph BuildVisibilityGraph(const Workspace2D& workspace);

// Exact obstacle-avoiding distance, or nullopt when b cannot be reached.
// Throws InvalidQuery when either point is outside free space.
std::optional<double> QueryDistance(const VisibilityGraph& graph, Point2 a,
                                    Point2 b);

// Shortest polyline from a to b; interior vertices are graph nodes. Its
// summed segment length equals QueryDistance(graph, a, b) bit for bit.
std::optional<std::vector<Point2>> QueryPath(const VisibilityGraph& graph,
                                             Point2 a, Point2 b);

// D[i][j] = QueryDistance(sites[i], targets[j]); unreachable pairs hold
// UnreachableCap(bounds). Rows are computed independently on `threads`
// workers.
DistanceMatrix SiteTargetMatrix(const VisibilityGraph& graph,
                                std::span<const Point2> sites,
                                std::span<const Point2> targets,
                                int threads = 1);

}  // namespace exdeploy

#endif  // EXDEPLOY_VISGRAPH_H_
