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

#include "exdeploy/scenario.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "exdeploy/errors.h"
#include "json.hpp"

namespace exdeploy {

using nlohmann::json;

namespace {

Point2 ParsePoint(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(field + ": expected [x, y]");
  }
  const Point2 p{j[0].get<double>(), j[1].get<double>()};
  if (!IsFinite(p)) throw ValidationError(field, "coordinates must be finite");
  return p;
}

std::vector<Point2> ParsePoints(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected a list of points");
  std::vector<Point2> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(ParsePoint(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

double Number(const json& obj, const char* key, double fallback,
              const std::string& field) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ParseError(field + "." + key + ": expected a number");
  return v.get<double>();
}

HeightTable ParseInlineHeights(const json& j) {
  HeightTable table;
  if (!j.is_array() || j.empty()) {
    throw ParseError("terrain.heights: expected a 2D array or a CSV path");
  }
  table.rows = j.size();
  for (const json& row : j) {
    if (!row.is_array()) throw ParseError("terrain.heights: rows must be arrays");
    if (table.cols == 0) table.cols = row.size();
    if (row.size() != table.cols) {
      throw ValidationError("terrain.heights", "rows have different lengths");
    }
    for (const json& h : row) {
      if (!h.is_number()) throw ParseError("terrain.heights: expected numbers");
      table.values.push_back(h.get<double>());
    }
  }
  return table;
}

TerrainGrid ParseTerrain(json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ParseError("terrain: expected an object");
  const Point2 origin =
      j.contains("origin") ? ParsePoint(j["origin"], "terrain.origin") : Point2{};
  const double cell = Number(j, "cell_size", 1.0, "terrain");
  if (!j.contains("heights")) throw ParseError("terrain.heights: missing");
  HeightTable table;
  if (j["heights"].is_string()) {
    std::filesystem::path p = j["heights"].get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    table = ReadHeightCsv(p);
    // Inline the data so the scenario hash tracks the heights themselves.
    json rows = json::array();
    for (std::size_t r = 0; r < table.rows; ++r) {
      rows.push_back(std::vector<double>(
          table.values.begin() + static_cast<long>(r * table.cols),
          table.values.begin() + static_cast<long>((r + 1) * table.cols)));
    }
    j["heights"] = std::move(rows);
  } else {
    table = ParseInlineHeights(j["heights"]);
  }
  try {
    return TerrainGrid(origin, cell, table.rows, table.cols, std::move(table.values));
  } catch (const std::invalid_argument& e) {
    throw ValidationError("terrain", e.what());
  }
}

Workspace2D ParseWorkspace(const json& doc) {
  if (!doc.contains("bounds")) throw ValidationError("bounds", "missing");
  const json& b = doc["bounds"];
  if (!b.is_array() || b.size() != 4) {
    throw ParseError("bounds: expected [xmin, ymin, xmax, ymax]");
  }
  for (const json& v : b) {
    if (!v.is_number()) throw ParseError("bounds: expected numbers");
  }
  const Bounds bounds{{b[0].get<double>(), b[1].get<double>()},
                      {b[2].get<double>(), b[3].get<double>()}};
  std::vector<Polygon> obstacles;
  if (doc.contains("obstacles")) {
    const json& obs = doc["obstacles"];
    if (!obs.is_array()) throw ParseError("obstacles: expected a list");
    for (std::size_t i = 0; i < obs.size(); ++i) {
      const std::string field = "obstacles[" + std::to_string(i) + "]";
      try {
        obstacles.emplace_back(ParsePoints(obs[i], field));
      } catch (const std::invalid_argument& e) {
        throw ValidationError(field, e.what());
      }
    }
  }
  try {
    return Workspace2D(bounds, std::move(obstacles));
  } catch (const std::invalid_argument& e) {
    throw ValidationError("obstacles", e.what());
  }
}

PartitionConstraint ParsePartition(const json& j, std::size_t candidates, int k) {
  if (!j.is_array()) throw ParseError("partition: expected a list of blocks");
  PartitionConstraint pc;
  for (std::size_t b = 0; b < j.size(); ++b) {
    const json& block = j[b];
    if (!block.is_object() || !block.contains("indices") || !block.contains("quota") ||
        !block["indices"].is_array() || !block["quota"].is_number_integer()) {
      throw ParseError("partition[" + std::to_string(b) +
                       "]: expected {indices: [...], quota: n}");
    }
    std::vector<int> idx;
    for (const json& v : block["indices"]) {
      if (!v.is_number_integer()) throw ParseError("partition: indices must be integers");
      idx.push_back(v.get<int>());
    }
    pc.blocks.push_back(std::move(idx));
    pc.quotas.push_back(block["quota"].get<int>());
  }
  try {
    pc.Validate(candidates);
  } catch (const InvalidConstraint& e) {
    throw ValidationError("partition", e.what());
  }
  if (pc.TotalQuota() != k) {
    throw ValidationError("partition", "quotas must sum to K");
  }
  return pc;
}

TerrainParams ParseTerrainParams(const json& doc) {
  TerrainParams tp;
  if (!doc.contains("terrain_params")) return tp;
  const json& j = doc["terrain_params"];
  if (!j.is_object()) throw ParseError("terrain_params: expected an object");
  const std::string f = "terrain_params";
  tp.weights = {Number(j, "w1", tp.weights.slope, f),
                Number(j, "w2", tp.weights.flatness, f),
                Number(j, "w3", tp.weights.step, f)};
  tp.thresholds = {Number(j, "s_crit", tp.thresholds.slope, f),
                   Number(j, "f_crit", tp.thresholds.flatness, f),
                   Number(j, "zeta_crit", tp.thresholds.step, f)};
  tp.tau_max = Number(j, "tau_max", tp.tau_max, f);
  tp.window = static_cast<int>(Number(j, "window", tp.window, f));
  const TraversabilityWeights& w = tp.weights;
  if (!(w.slope > 0) || !(w.flatness > 0) || !(w.step > 0) ||
      std::abs(w.slope + w.flatness + w.step - 1.0) > 1e-9) {
    throw ValidationError(f, "weights must be positive and sum to 1");
  }
  if (!(tp.thresholds.slope > 0) || !(tp.thresholds.flatness > 0) ||
      !(tp.thresholds.step > 0)) {
    throw ValidationError(f, "critical thresholds must be positive");
  }
  if (!(tp.tau_max > 0) || tp.tau_max > 1) {
    throw ValidationError(f, "tau_max must lie in (0, 1]");
  }
  if (tp.window < 3 || tp.window % 2 == 0) {
    throw ValidationError(f, "window must be odd and >= 3");
  }
  return tp;
}

RrtParams ParseRrt(const json& doc, const Bounds& area, double tau_max) {
  RrtParams p;
  p.radius_const = MinimumRewireConstant(area.width() * area.height());
  p.tau_max = tau_max;
  if (doc.contains("rrt")) {
    const json& j = doc["rrt"];
    if (!j.is_object()) throw ParseError("rrt: expected an object");
    p.samples = static_cast<int>(Number(j, "samples", p.samples, "rrt"));
    p.step = Number(j, "step", p.step, "rrt");
    p.radius_const = Number(j, "radius_const", p.radius_const, "rrt");
    if (j.contains("seed")) {
      if (!j["seed"].is_number_unsigned()) throw ParseError("rrt.seed: expected a nonnegative integer");
      p.seed = j["seed"].get<std::uint64_t>();
    }
  }
  try {
    p.Validate();
  } catch (const InvalidParams& e) {
    throw ValidationError("rrt", e.what());
  }
  return p;
}

}  // namespace

Task ParseTask(std::string_view name) {
  if (name == "fair-access") return Task::kFairAccess;
  if (name == "hotspot") return Task::kHotspot;
  throw ValidationError("task", "expected fair-access or hotspot, got '" +
                                    std::string(name) + "'");
}

std::string TaskName(Task task) {
  return task == Task::kFairAccess ? "fair-access" : "hotspot";
}

Bounds Scenario::bounds() const {
  if (const Workspace2D* w = workspace()) return w->bounds();
  return terrain()->footprint();
}

std::string Fnv1aHex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

HeightTable ReadHeightCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open heightmap CSV " + path.string());
  HeightTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t cols = 0;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        table.values.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) {
          throw std::invalid_argument(cell);
        }
      } catch (const std::exception&) {
        throw ParseError("heightmap CSV: bad number '" + cell + "' in " + path.string());
      }
      ++cols;
    }
    if (table.cols == 0) table.cols = cols;
    if (cols != table.cols) throw ParseError("heightmap CSV: ragged rows in " + path.string());
    ++table.rows;
  }
  if (table.rows == 0) throw ParseError("heightmap CSV is empty: " + path.string());
  return table;
}

Scenario ParseScenario(std::string_view json_text,
                       const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("scenario: expected a JSON object");

  try {
    const bool has_terrain = doc.contains("terrain") && !doc["terrain"].is_null();
    const bool has_obstacles = doc.contains("obstacles") && doc["obstacles"].is_array() &&
                               !doc["obstacles"].empty();
    if (has_terrain && has_obstacles) {
      throw ValidationError("terrain", "exactly one of obstacles/terrain may be given");
    }
    Scenario sc{.name = doc.value("name", std::string("scenario")),
                .geometry = has_terrain
                                ? std::variant<Workspace2D, TerrainGrid>(
                                      ParseTerrain(doc["terrain"], base_dir))
                                : std::variant<Workspace2D, TerrainGrid>(
                                      ParseWorkspace(doc))};
    if (!doc.contains("targets")) throw ValidationError("targets", "missing");
    if (!doc.contains("candidates")) throw ValidationError("candidates", "missing");
    sc.targets = ParsePoints(doc["targets"], "targets");
    sc.candidates = ParsePoints(doc["candidates"], "candidates");
    if (sc.targets.empty()) throw ValidationError("targets", "at least one target required");
    if (sc.candidates.empty()) {
      throw ValidationError("candidates", "at least one candidate required");
    }
    if (!doc.contains("K") || !doc["K"].is_number_integer()) {
      throw ParseError("K: expected an integer");
    }
    sc.k = doc["K"].get<int>();
    if (sc.k < 1) throw ValidationError("K", "K must be >= 1");
    if (sc.candidates.size() <= static_cast<std::size_t>(sc.k)) {
      throw ValidationError("K", "|X| > K required");
    }
    if (doc.contains("task")) {
      if (!doc["task"].is_string()) throw ParseError("task: expected a string");
      sc.task = ParseTask(doc["task"].get<std::string>());
    }
    if (doc.contains("partition") && !doc["partition"].is_null()) {
      sc.partition = ParsePartition(doc["partition"], sc.candidates.size(), sc.k);
    }
    if (doc.contains("hotspot") && !doc["hotspot"].is_null()) {
      const json& h = doc["hotspot"];
      if (!h.is_object()) throw ParseError("hotspot: expected {ell, L}");
      HotspotParams hp{Number(h, "ell", 0.0, "hotspot"), Number(h, "L", 0.0, "hotspot")};
      if (!(hp.ell > 0.0) || !(hp.cap >= std::log1p(hp.ell))) {
        throw ValidationError("hotspot", "need ell > 0 and L >= log(1 + ell)");
      }
      sc.hotspot = hp;
    }
    sc.terrain_params = ParseTerrainParams(doc);
    sc.rrt = ParseRrt(doc, sc.bounds(), sc.terrain_params.tau_max);

    auto check_points = [&](const std::vector<Point2>& pts, const std::string& field) {
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string f = field + "[" + std::to_string(i) + "]";
        if (const Workspace2D* w = sc.workspace()) {
          if (!PointInFreeSpace(pts[i], *w)) {
            throw ValidationError(f, "point must be inside bounds and outside obstacles");
          }
        } else if (!sc.bounds().Contains(pts[i])) {
          throw ValidationError(f, "point must lie on the terrain grid");
        }
      }
    };
    check_points(sc.targets, "targets");
    check_points(sc.candidates, "candidates");

    sc.hash = Fnv1aHex(doc.dump());
    return sc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
}

Scenario LoadScenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseScenario(buf.str(), path.parent_path());
}

HotspotParams ResolveHotspot(const Scenario& scenario) {
  if (scenario.hotspot) return *scenario.hotspot;
  const double diag = scenario.bounds().diagonal();
  return {0.25 * diag, std::log1p(diag)};
}

}  // namespace exdeploy
