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

#include "exdeploy/rrtstar.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "exdeploy/errors.h"
#include "exdeploy/parallel.h"

namespace exdeploy {

namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// xoshiro256** seeded through splitmix64; doubles from the top 53 bits so
// the sample stream does not depend on the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    for (auto& s : state_) s = seed = SplitMix64(seed);
  }
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t Rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t Next() {
    const std::uint64_t result = Rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = Rotl(state_[3], 45);
    return result;
  }
  std::uint64_t state_[4];
};

// Uniform bucket grid over the map footprint for nearest / radius queries.
class NodeIndex {
 public:
  NodeIndex(const Bounds& area, double cell) : area_(area), cell_(cell) {
    nx_ = static_cast<long>(std::floor(area.width() / cell)) + 1;
    ny_ = static_cast<long>(std::floor(area.height() / cell)) + 1;
    buckets_.resize(static_cast<std::size_t>(nx_ * ny_));
  }

  void Insert(int id, Point2 p) { buckets_[Bucket(CellX(p), CellY(p))].push_back(id); }

  int Nearest(Point2 q, const std::vector<Point2>& pts) const {
    const long cx = CellX(q), cy = CellY(q);
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    const long max_ring = std::max(nx_, ny_);
    for (long ring = 0; ring <= max_ring; ++ring) {
      for (long x = cx - ring; x <= cx + ring; ++x) {
        for (long y = cy - ring; y <= cy + ring; ++y) {
          if (std::max(std::labs(x - cx), std::labs(y - cy)) != ring) continue;
          if (x < 0 || y < 0 || x >= nx_ || y >= ny_) continue;
          for (int id : buckets_[Bucket(x, y)]) {
            const double d = Distance(q, pts[id]);
            if (d < best_d || (d == best_d && id < best)) {
              best_d = d;
              best = id;
            }
          }
        }
      }
      // Anything in ring + 1 is at least ring * cell away.
      if (best >= 0 && best_d <= static_cast<double>(ring) * cell_) break;
    }
    return best;
  }

  std::vector<int> Within(Point2 q, double radius,
                          const std::vector<Point2>& pts) const {
    std::vector<int> out;
    const long x0 = std::max(0L, CellX({q.x - radius, q.y}));
    const long x1 = std::min(nx_ - 1, CellX({q.x + radius, q.y}));
    const long y0 = std::max(0L, CellY({q.x, q.y - radius}));
    const long y1 = std::min(ny_ - 1, CellY({q.x, q.y + radius}));
    for (long x = x0; x <= x1; ++x) {
      for (long y = y0; y <= y1; ++y) {
        for (int id : buckets_[Bucket(x, y)]) {
          if (Distance(q, pts[id]) <= radius) out.push_back(id);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  long CellX(Point2 p) const {
    return std::clamp(static_cast<long>(std::floor((p.x - area_.min.x) / cell_)),
                      0L, nx_ - 1);
  }
  long CellY(Point2 p) const {
    return std::clamp(static_cast<long>(std::floor((p.y - area_.min.y) / cell_)),
                      0L, ny_ - 1);
  }
  std::size_t Bucket(long x, long y) const {
    return static_cast<std::size_t>(y * nx_ + x);
  }

  Bounds area_;
  double cell_;
  long nx_ = 1;
  long ny_ = 1;
  std::vector<std::vector<int>> buckets_;
};

class Planner {
 public:
  Planner(const TraversabilityMap& map, const RrtParams& params)
      : map_(map),
        params_(params),
        resolution_(params.edge_check_resolution > 0.0
                        ? params.edge_check_resolution
                        : 0.5 * map.cell_size()) {}

  bool PointOk(Point2 p) const { return map_.Sample(p) <= params_.tau_max; }

  // Interior points spaced at most `resolution_` apart; endpoints are
  // checked when they become nodes.
  bool EdgeOk(Point2 a, Point2 b) const {
    const double len = Distance(a, b);
    const int pieces = static_cast<int>(std::ceil(len / resolution_));
    for (int k = 1; k < pieces; ++k) {
      const double t = static_cast<double>(k) / pieces;
      if (!PointOk(a + t * (b - a))) return false;
    }
    return true;
  }

  double EdgeCost(Point2 a, Point2 b) const {
    const double len = Distance(a, b);
    if (!params_.traversability_weighted_cost) return len;
    const int pieces = std::max(1, static_cast<int>(std::ceil(len / resolution_)));
    double sum = 0.0;
    for (int k = 0; k <= pieces; ++k) {
      sum += map_.Sample(a + (static_cast<double>(k) / pieces) * (b - a));
    }
    return len * (1.0 + sum / (pieces + 1));
  }

  RrtOutcome Run(Point2 start, Point2 goal) {
    RrtOutcome out;
    RrtTree& tree = out.tree;
    tree.nodes.push_back(start);
    tree.parent.push_back(-1);
    tree.cost.push_back(0.0);
    if (start == goal) {
      out.plan = RrtPlan{0.0, {start}};
      return out;
    }
    const Bounds area = map_.footprint();
    NodeIndex index(area, params_.step);
    index.Insert(0, start);
    std::vector<std::vector<int>> children(1);
    std::vector<int> goal_parents;
    if (Distance(start, goal) <= params_.step && EdgeOk(start, goal)) {
      goal_parents.push_back(0);
    }

    Rng rng(params_.seed);
    for (int it = 0; it < params_.samples; ++it) {
      const Point2 q{area.min.x + rng.Uniform() * area.width(),
                     area.min.y + rng.Uniform() * area.height()};
      const int nearest = index.Nearest(q, tree.nodes);
      const Point2 from = tree.nodes[nearest];
      const double d = Distance(from, q);
      if (d == 0.0) continue;
      const Point2 x_new =
          d <= params_.step ? q : from + (params_.step / d) * (q - from);
      if (!PointOk(x_new) || !EdgeOk(from, x_new)) continue;

      const double n = static_cast<double>(tree.nodes.size() + 1);
      const double radius = std::min(
          params_.radius_const * std::sqrt(std::log(n) / n), 4.0 * params_.step);
      const std::vector<int> near = index.Within(x_new, radius, tree.nodes);

      int parent = nearest;
      double cost = tree.cost[nearest] + EdgeCost(from, x_new);
      for (int j : near) {
        if (j == nearest) continue;
        const double c = tree.cost[j] + EdgeCost(tree.nodes[j], x_new);
        if (c < cost && EdgeOk(tree.nodes[j], x_new)) {
          cost = c;
          parent = j;
        }
      }
      const int id = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(x_new);
      tree.parent.push_back(parent);
      tree.cost.push_back(cost);
      children.emplace_back();
      children[parent].push_back(id);
      index.Insert(id, x_new);

      for (int j : near) {
        if (j == parent) continue;
        const double c = cost + EdgeCost(x_new, tree.nodes[j]);
        if (c < tree.cost[j] && EdgeOk(x_new, tree.nodes[j])) {
          Reparent(tree, children, j, id, c);
        }
      }
      if (Distance(x_new, goal) <= params_.step && EdgeOk(x_new, goal)) {
        goal_parents.push_back(id);
      }
    }

    if (goal_parents.empty()) return out;
    int best = -1;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int j : goal_parents) {
      const double c = tree.cost[j] + EdgeCost(tree.nodes[j], goal);
      if (c < best_cost) {
        best_cost = c;
        best = j;
      }
    }
    RrtPlan plan;
    plan.length = best_cost;
    plan.polyline.push_back(goal);
    for (int v = best; v >= 0; v = tree.parent[v]) {
      plan.polyline.push_back(tree.nodes[v]);
    }
    std::reverse(plan.polyline.begin(), plan.polyline.end());
    out.plan = std::move(plan);
    return out;
  }

 private:
  void Reparent(RrtTree& tree, std::vector<std::vector<int>>& children,
                int node, int new_parent, double new_cost) const {
    auto& siblings = children[tree.parent[node]];
    siblings.erase(std::find(siblings.begin(), siblings.end(), node));
    children[new_parent].push_back(node);
    tree.parent[node] = new_parent;
    tree.cost[node] = new_cost;
    // Recompute descendants from their parents so each stored cost stays
    // parent cost plus edge cost.
    std::vector<int> stack(children[node].begin(), children[node].end());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const int p = tree.parent[v];
      tree.cost[v] = tree.cost[p] + EdgeCost(tree.nodes[p], tree.nodes[v]);
      stack.insert(stack.end(), children[v].begin(), children[v].end());
    }
  }

  const TraversabilityMap& map_;
  const RrtParams& params_;
  double resolution_;
};

}  // namespace

void RrtParams::Validate() const {
  if (samples < 1) throw InvalidParams("rrt samples must be >= 1");
  if (!(step > 0.0)) throw InvalidParams("rrt step must be positive");
  if (!(radius_const > 0.0)) throw InvalidParams("rrt radius_const must be positive");
  if (!(tau_max > 0.0) || tau_max > 1.0) {
    throw InvalidParams("tau_max must lie in (0, 1]");
  }
  if (!(edge_check_resolution >= 0.0)) {
    throw InvalidParams("edge_check_resolution must be nonnegative");
  }
}

double MinimumRewireConstant(double free_area) {
  return 2.0 * std::sqrt(1.5) * std::sqrt(free_area / std::numbers::pi);
}

RrtOutcome PlanWithTree(Point2 start, Point2 goal, const TraversabilityMap& map,
                        const RrtParams& params) {
  params.Validate();
  const Bounds fp = map.footprint();
  for (const Point2& p : {start, goal}) {
    if (!IsFinite(p) || !fp.Contains(p) || map.Sample(p) > params.tau_max) {
      throw InvalidEndpoint("endpoint is not traversable");
    }
  }
  Planner planner(map, params);
  return planner.Run(start, goal);
}

std::optional<RrtPlan> Plan(Point2 start, Point2 goal,
                            const TraversabilityMap& map,
                            const RrtParams& params) {
  return PlanWithTree(start, goal, map, params).plan;
}

std::uint64_t PairSeed(std::uint64_t seed, std::size_t site, std::size_t target) {
  return seed ^ SplitMix64((static_cast<std::uint64_t>(site) << 32) ^
                           static_cast<std::uint64_t>(target));
}

DistanceMatrix PairwiseMatrix(std::span<const Point2> sites,
                              std::span<const Point2> targets,
                              const TraversabilityMap& map,
                              const RrtParams& params, int threads,
                              std::vector<std::string>* warnings,
                              std::string metric_tag) {
  params.Validate();
  const double cap = UnreachableCap(map.footprint());
  const Bounds fp = map.footprint();
  auto ok = [&](Point2 p) {
    return IsFinite(p) && fp.Contains(p) && map.Sample(p) <= params.tau_max;
  };
  std::vector<char> site_ok(sites.size()), target_ok(targets.size());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    site_ok[i] = ok(sites[i]);
    if (!site_ok[i] && warnings) {
      warnings->push_back("site " + std::to_string(i) + " is not traversable");
    }
  }
  for (std::size_t j = 0; j < targets.size(); ++j) {
    target_ok[j] = ok(targets[j]);
    if (!target_ok[j] && warnings) {
      warnings->push_back("target " + std::to_string(j) + " is not traversable");
    }
  }

  const std::size_t cols = targets.size();
  std::vector<double> values(sites.size() * cols, cap);
  ParallelFor(values.size(), threads, [&](std::size_t k) {
    const std::size_t i = k / cols, j = k % cols;
    if (!site_ok[i] || !target_ok[j]) return;
    RrtParams pair_params = params;
    pair_params.seed = PairSeed(params.seed, i, j);
    const auto plan = Plan(sites[i], targets[j], map, pair_params);
    if (plan) values[k] = std::min(plan->length, cap);
  });
  return DistanceMatrix(sites.size(), cols, std::move(values), cap,
                        std::move(metric_tag));
}

}  // namespace exdeploy
