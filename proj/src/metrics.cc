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

#include "exdeploy/metrics.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "exdeploy/errors.h"
#include "exdeploy/visgraph.h"
#include "json.hpp"

namespace exdeploy {

using nlohmann::json;

namespace {

void ValidateHotspot(double ell, double cap) {
  if (!(ell > 0.0) || !std::isfinite(ell)) {
    throw InvalidParams("hotspot threshold ell must be positive");
  }
  if (!(cap >= std::log1p(ell)) || !std::isfinite(cap)) {
    throw InvalidParams("hotspot cap L must be at least log(1 + ell)");
  }
}

json CacheMeta(const Scenario& scenario, Metric metric, const RrtParams* rrt) {
  json meta = {{"scenario_hash", scenario.hash}, {"metric", MetricName(metric)},
               {"sites", scenario.candidates.size()},
               {"targets", scenario.targets.size()},
               {"params", json::object()}};
  if (rrt != nullptr) {
    meta["params"] = {{"samples", rrt->samples},
                      {"step", rrt->step},
                      {"radius_const", rrt->radius_const},
                      {"seed", rrt->seed},
                      {"tau_max", rrt->tau_max},
                      {"edge_check_resolution", rrt->edge_check_resolution},
                      {"traversability_weighted_cost", rrt->traversability_weighted_cost}};
  }
  return meta;
}

std::optional<DistanceMatrix> LoadCached(const MatrixCacheEntry& entry,
                                         const json& expected,
                                         std::vector<std::string>* warnings) {
  std::ifstream meta_in(entry.meta);
  std::ifstream csv_in(entry.csv);
  if (!meta_in || !csv_in) return std::nullopt;
  json meta;
  try {
    meta = json::parse(meta_in);
  } catch (const json::exception&) {
    return std::nullopt;
  }
  json key = meta;
  key.erase("d_max");
  key.erase("metric_tag");
  key.erase("warnings");
  if (key != expected || !meta.contains("d_max") || !meta.contains("metric_tag")) {
    return std::nullopt;
  }
  const std::size_t sites = expected["sites"].get<std::size_t>();
  const std::size_t targets = expected["targets"].get<std::size_t>();
  try {
    DistanceMatrix m(sites, targets, ReadMatrixCsv(csv_in, sites, targets),
                     meta["d_max"].get<double>(), meta["metric_tag"].get<std::string>());
    std::vector<std::string> stored =
        meta.value("warnings", std::vector<std::string>{});
    if (warnings != nullptr) warnings->insert(warnings->end(), stored.begin(), stored.end());
    return m;
  } catch (const Error&) {
    return std::nullopt;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void StoreCached(const MatrixCacheEntry& entry, json meta, const DistanceMatrix& m,
                 const std::vector<std::string>& warnings) {
  std::error_code ec;
  std::filesystem::create_directories(entry.csv.parent_path(), ec);
  std::ofstream csv_out(entry.csv);
  if (!csv_out) throw IoError("cannot write matrix cache " + entry.csv.string());
  WriteMatrixCsv(m, csv_out);
  meta["d_max"] = m.d_max();
  meta["metric_tag"] = m.metric_tag();
  meta["warnings"] = warnings;
  std::ofstream meta_out(entry.meta);
  if (!meta_out) throw IoError("cannot write matrix cache " + entry.meta.string());
  meta_out << meta.dump(2) << '\n';
}

}  // namespace

double HotspotTransform(double d, double ell, double cap) {
  ValidateHotspot(ell, cap);
  if (!(d >= 0.0)) throw InvalidParams("distance must be nonnegative");
  return d <= ell ? std::log1p(d) : cap;
}

DistanceMatrix ApplyHotspot(const DistanceMatrix& m, double ell, double cap) {
  ValidateHotspot(ell, cap);
  std::vector<double> values(m.values().size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = HotspotTransform(m.values()[k], ell, cap);
  }
  char tag[96];
  std::snprintf(tag, sizeof(tag), "+hotspot(ln,ell=%.6g,L=%.6g)", ell, cap);
  return DistanceMatrix(m.sites(), m.targets(), std::move(values), cap,
                        m.metric_tag() + tag, m.site_ids(), m.target_ids());
}

AugmentedMatrix::AugmentedMatrix(DistanceMatrix base, double d0)
    : base_(std::move(base)), d0_(d0) {
  if (!std::isfinite(d0_) || d0_ < base_.MaxEntry()) {
    throw InvalidD0("phantom distance must be finite and >= every matrix entry");
  }
}

AugmentedMatrix AugmentWithPhantom(const DistanceMatrix& m, std::optional<double> d0) {
  return AugmentedMatrix(m, d0.value_or(m.MaxEntry()));
}

Metric ParseMetric(std::string_view name) {
  if (name == "euclidean") return Metric::kEuclidean;
  if (name == "visgraph") return Metric::kVisgraph;
  if (name == "rrtstar") return Metric::kRrtstar;
  if (name == "rrtstar-unweighted" || name == "rrtstar_unweighted") {
    return Metric::kRrtstarUnweighted;
  }
  throw ValidationError("metric", "unknown metric '" + std::string(name) + "'");
}

std::string MetricName(Metric metric) {
  switch (metric) {
    case Metric::kEuclidean: return "euclidean";
    case Metric::kVisgraph: return "visgraph";
    case Metric::kRrtstar: return "rrtstar";
    case Metric::kRrtstarUnweighted: return "rrtstar-unweighted";
  }
  return "unknown";
}

DistanceMatrix EuclideanMatrix(std::span<const Point2> sites,
                               std::span<const Point2> targets, double d_max) {
  std::vector<double> values;
  values.reserve(sites.size() * targets.size());
  for (const Point2& s : sites) {
    for (const Point2& t : targets) values.push_back(std::min(Distance(s, t), d_max));
  }
  return DistanceMatrix(sites.size(), targets.size(), std::move(values), d_max,
                        "euclidean");
}

TraversabilityMap ScenarioTraversability(const Scenario& scenario) {
  const TerrainGrid* grid = scenario.terrain();
  if (grid == nullptr) {
    throw MetricGeometryMismatch("scenario has no terrain grid");
  }
  const TerrainParams& tp = scenario.terrain_params;
  return ComputeTraversability(ComputeFeatureMaps(*grid, tp.window), tp.weights,
                               tp.thresholds);
}

MatrixCacheEntry CachePaths(const std::filesystem::path& dir,
                            const std::string& scenario_hash, Metric metric) {
  const std::string stem = scenario_hash + "." + MetricName(metric);
  return {dir / (stem + ".csv"), dir / (stem + ".meta.json")};
}

void WriteMatrixCsv(const DistanceMatrix& m, std::ostream& out) {
  out << "site_index,target_index,distance\n";
  char buf[64];
  for (std::size_t i = 0; i < m.sites(); ++i) {
    for (std::size_t j = 0; j < m.targets(); ++j) {
      std::snprintf(buf, sizeof(buf), "%d,%d,%.17g\n", m.site_ids()[i],
                    m.target_ids()[j], m.at(i, j));
      out << buf;
    }
  }
}

std::vector<double> ReadMatrixCsv(std::istream& in, std::size_t sites,
                                  std::size_t targets) {
  std::string line;
  if (!std::getline(in, line) || line != "site_index,target_index,distance") {
    throw ParseError("matrix CSV: missing header");
  }
  std::vector<double> values(sites * targets);
  std::vector<char> seen(values.size(), 0);
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    long i = -1, j = -1;
    double d = 0.0;
    int used = 0;
    if (std::sscanf(line.c_str(), "%ld,%ld,%lf%n", &i, &j, &d, &used) != 3 ||
        static_cast<std::size_t>(used) != line.size()) {
      throw ParseError("matrix CSV: bad row '" + line + "'");
    }
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= sites ||
        static_cast<std::size_t>(j) >= targets) {
      throw ParseError("matrix CSV: index out of range");
    }
    const std::size_t k = static_cast<std::size_t>(i) * targets + static_cast<std::size_t>(j);
    if (seen[k]) throw ParseError("matrix CSV: duplicate entry");
    seen[k] = 1;
    values[k] = d;
    ++count;
  }
  if (count != values.size()) throw ParseError("matrix CSV: missing entries");
  return values;
}

DistanceMatrix BuildMatrix(const Scenario& scenario, Metric metric,
                           const MatrixOptions& options) {
  const bool rrt = metric == Metric::kRrtstar || metric == Metric::kRrtstarUnweighted;
  if (metric == Metric::kVisgraph && scenario.workspace() == nullptr) {
    throw MetricGeometryMismatch("visgraph metric needs an obstacle workspace");
  }
  if (rrt && scenario.terrain() == nullptr) {
    throw MetricGeometryMismatch(MetricName(metric) + " metric needs a terrain grid");
  }
  RrtParams rrt_params = scenario.rrt;
  if (metric == Metric::kRrtstarUnweighted) rrt_params.tau_max = 1.0;

  const json meta = CacheMeta(scenario, metric, rrt ? &rrt_params : nullptr);
  std::optional<MatrixCacheEntry> entry;
  if (options.use_cache) {
    entry = CachePaths(options.cache_dir, scenario.hash, metric);
    if (auto cached = LoadCached(*entry, meta, options.warnings)) {
      if (options.cache_hit) *options.cache_hit = true;
      return *std::move(cached);
    }
  }
  if (options.cache_hit) *options.cache_hit = false;

  const double cap = UnreachableCap(scenario.bounds());
  std::vector<std::string> warnings;
  std::optional<DistanceMatrix> m;
  switch (metric) {
    case Metric::kEuclidean:
      m = EuclideanMatrix(scenario.candidates, scenario.targets, cap);
      break;
    case Metric::kVisgraph:
      m = SiteTargetMatrix(BuildVisibilityGraph(*scenario.workspace()),
                           scenario.candidates, scenario.targets, options.threads);
      break;
    case Metric::kRrtstar:
    case Metric::kRrtstarUnweighted:
      m = PairwiseMatrix(scenario.candidates, scenario.targets,
                         ScenarioTraversability(scenario), rrt_params,
                         options.threads, &warnings, MetricName(metric));
      break;
  }
  if (entry) StoreCached(*entry, meta, *m, warnings);
  if (options.warnings != nullptr) {
    options.warnings->insert(options.warnings->end(), warnings.begin(), warnings.end());
  }
  return *std::move(m);
}

}  // namespace exdeploy
