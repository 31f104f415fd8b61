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

#ifndef EXDEPLOY_SCENARIO_H_
#define EXDEPLOY_SCENARIO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "exdeploy/geometry.h"
#include "exdeploy/rrtstar.h"
#include "exdeploy/submodular.h"
#include "exdeploy/terrain.h"
#include "exdeploy/workspace.h"

namespace exdeploy {

enum class Task { kFairAccess, kHotspot };

// Throws ValidationError for anything but "fair-access" / "hotspot".
Task ParseTask(std::string_view name);
std::string TaskName(Task task);

// Truncated-log distance transform parameters.
struct HotspotParams {
  double ell = 0.0;  // distances above ell saturate
  double cap = 0.0;  // saturation value L
};

struct TerrainParams {
  TraversabilityWeights weights;
  TraversabilityThresholds thresholds;
  double tau_max = 0.5;
  int window = kDefaultFeatureWindow;
};

struct Scenario {
  std::string name;
  std::variant<Workspace2D, TerrainGrid> geometry;
  std::vector<Point2> targets{};
  std::vector<Point2> candidates{};
  std::optional<PartitionConstraint> partition{};
  int k = 1;
  Task task = Task::kFairAccess;
  std::optional<HotspotParams> hotspot{};
  TerrainParams terrain_params{};
  RrtParams rrt{};  // rrt.tau_max mirrors terrain_params.tau_max
  // FNV-1a of the canonical document (keys sorted, heights inlined).
  std::string hash{};

  const Workspace2D* workspace() const { return std::get_if<Workspace2D>(&geometry); }
  const TerrainGrid* terrain() const { return std::get_if<TerrainGrid>(&geometry); }
  // Workspace bounds or terrain footprint.
  Bounds bounds() const;
};

// ParseError for malformed documents, ValidationError (naming the field) for
// broken invariants. Relative heightmap CSV paths resolve against the
// scenario file's directory.
Scenario LoadScenario(const std::filesystem::path& path);
Scenario ParseScenario(std::string_view json_text,
                       const std::filesystem::path& base_dir = ".");

// Explicit parameters, or ell = 0.25 * diagonal and L = log(1 + diagonal).
HotspotParams ResolveHotspot(const Scenario& scenario);

struct HeightTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major
};

// Comma-separated heights, one grid row per line. Throws ParseError.
HeightTable ReadHeightCsv(const std::filesystem::path& path);

// 64-bit FNV-1a as 16 lowercase hex digits.
std::string Fnv1aHex(std::string_view bytes);

}  // namespace exdeploy

#endif  // EXDEPLOY_SCENARIO_H_
