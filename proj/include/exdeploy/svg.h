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

#ifndef EXDEPLOY_SVG_H_
#define EXDEPLOY_SVG_H_

#include <filesystem>
#include <string>
#include <vector>

#include "exdeploy/geometry.h"
#include "exdeploy/scenario.h"
#include "exdeploy/terrain.h"
#include "exdeploy/visgraph.h"

namespace exdeploy {

// Everything drawn in one figure. Only `scenario` is required.
struct SvgScene {
  const Scenario* scenario = nullptr;
  std::vector<int> selected;                // candidate indices
  std::vector<int> assignments;             // per-target site, drawn as spokes
  std::vector<std::vector<Point2>> paths;   // red polylines
  const TraversabilityMap* tau = nullptr;   // grayscale, white = easy
  const VisibilityGraph* graph = nullptr;   // roadmap edges
  std::string title;
};

// Deterministic SVG text: fixed layer order and fixed number formatting.
std::string RenderSvg(const SvgScene& scene);

// Throws IoError.
void WriteSvg(const SvgScene& scene, const std::filesystem::path& path);

}  // namespace exdeploy

#endif  // EXDEPLOY_SVG_H_
