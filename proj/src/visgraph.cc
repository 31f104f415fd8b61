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

#include "exdeploy/visgraph.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <utility>

#include "exdeploy/errors.h"
#include "exdeploy/parallel.h"

namespace exdeploy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Link {
  int node;
  double length;
};

std::vector<Link> VisibleNodes(const VisibilityGraph& graph, Point2 p) {
  std::vector<Link> links;
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    const Point2& v = graph.nodes()[i];
    if (!SegmentIntersectsObstacles(p, v, graph.workspace())) {
      links.push_back({static_cast<int>(i), Distance(p, v)});
    }
  }
  return links;
}

// Dijkstra over the roadmap seeded from a free query point. pred[v] == -1
// marks nodes entered straight from the query point.
struct SourceTree {
  std::vector<double> dist;
  std::vector<int> pred;
};

SourceTree ShortestFrom(const VisibilityGraph& graph,
                        const std::vector<Link>& seeds) {
  SourceTree tree{std::vector<double>(graph.num_nodes(), kInf),
                  std::vector<int>(graph.num_nodes(), -1)};
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  for (const Link& s : seeds) {
    if (s.length < tree.dist[s.node]) {
      tree.dist[s.node] = s.length;
      open.push({s.length, s.node});
    }
  }
  while (!open.empty()) {
    const auto [d, u] = open.top();
    open.pop();
    if (d > tree.dist[u]) continue;
    for (const VisibilityGraph::Edge& e : graph.neighbors(u)) {
      const double nd = d + e.weight;
      if (nd < tree.dist[e.to]) {
        tree.dist[e.to] = nd;
        tree.pred[e.to] = u;
        open.push({nd, e.to});
      }
    }
  }
  return tree;
}

// Best last hop into the target; -1 when none reaches it.
std::pair<double, int> Finish(const SourceTree& tree,
                              const std::vector<Link>& target_links) {
  double best = kInf;
  int via = -1;
  for (const Link& l : target_links) {
    const double d = tree.dist[l.node] + l.length;
    if (d < best) {
      best = d;
      via = l.node;
    }
  }
  return {best, via};
}

void RequireFree(const VisibilityGraph& graph, Point2 p, const char* which) {
  if (!PointInFreeSpace(p, graph.workspace())) {
    throw InvalidQuery(std::string(which) + " point is not in free space");
  }
}

}  // namespace

VisibilityGraph::VisibilityGraph(const Workspace2D& workspace)
    : workspace_(workspace) {
  for (const Polygon& poly : workspace_.obstacles()) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly.IsConvexVertex(i)) nodes_.push_back(poly.vertex(i));
    }
  }
  adjacency_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
      if (nodes_[i] == nodes_[j]) continue;
      if (SegmentIntersectsObstacles(nodes_[i], nodes_[j], workspace_)) continue;
      const double w = Distance(nodes_[i], nodes_[j]);
      adjacency_[i].push_back({static_cast<int>(j), w});
      adjacency_[j].push_back({static_cast<int>(i), w});
      ++num_edges_;
    }
  }
}

bool VisibilityGraph::HasEdge(std::size_t u, std::size_t v) const {
  return std::any_of(adjacency_[u].begin(), adjacency_[u].end(),
                     [&](const Edge& e) { return e.to == static_cast<int>(v); });
}

VisibilityGraph BuildVisibilityGraph(const Workspace2D& workspace) {
  return VisibilityGraph(workspace);
}

std::optional<double> QueryDistance(const VisibilityGraph& graph, Point2 a,
                                    Point2 b) {
  RequireFree(graph, a, "start");
  RequireFree(graph, b, "goal");
  if (!SegmentIntersectsObstacles(a, b, graph.workspace())) return Distance(a, b);
  const SourceTree tree = ShortestFrom(graph, VisibleNodes(graph, a));
  const auto [d, via] = Finish(tree, VisibleNodes(graph, b));
  if (via < 0) return std::nullopt;
  return d;
}

std::optional<std::vector<Point2>> QueryPath(const VisibilityGraph& graph,
                                             Point2 a, Point2 b) {
  RequireFree(graph, a, "start");
  RequireFree(graph, b, "goal");
  if (!SegmentIntersectsObstacles(a, b, graph.workspace())) {
    return std::vector<Point2>{a, b};
  }
  const SourceTree tree = ShortestFrom(graph, VisibleNodes(graph, a));
  const auto [d, via] = Finish(tree, VisibleNodes(graph, b));
  if (via < 0) return std::nullopt;
  std::vector<Point2> path = {b};
  for (int v = via; v >= 0; v = tree.pred[v]) path.push_back(graph.nodes()[v]);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

DistanceMatrix SiteTargetMatrix(const VisibilityGraph& graph,
                                std::span<const Point2> sites,
                                std::span<const Point2> targets, int threads) {
  for (const Point2& s : sites) RequireFree(graph, s, "site");
  for (const Point2& t : targets) RequireFree(graph, t, "target");
  const double cap = UnreachableCap(graph.workspace().bounds());

  std::vector<std::vector<Link>> target_links(targets.size());
  ParallelFor(targets.size(), threads, [&](std::size_t j) {
    target_links[j] = VisibleNodes(graph, targets[j]);
  });

  std::vector<double> values(sites.size() * targets.size());
  ParallelFor(sites.size(), threads, [&](std::size_t i) {
    const SourceTree tree = ShortestFrom(graph, VisibleNodes(graph, sites[i]));
    for (std::size_t j = 0; j < targets.size(); ++j) {
      double d;
      if (!SegmentIntersectsObstacles(sites[i], targets[j], graph.workspace())) {
        d = Distance(sites[i], targets[j]);
      } else {
        const auto [best, via] = Finish(tree, target_links[j]);
        d = via < 0 ? cap : best;
      }
      values[i * targets.size() + j] = std::min(d, cap);
    }
  });
  return DistanceMatrix(sites.size(), targets.size(), std::move(values), cap,
                        "visgraph");
}

}  // namespace exdeploy
