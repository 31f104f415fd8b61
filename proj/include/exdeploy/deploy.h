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

#ifndef EXDEPLOY_DEPLOY_H_
#define EXDEPLOY_DEPLOY_H_

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "exdeploy/coverage.h"
#include "exdeploy/metrics.h"
#include "exdeploy/scenario.h"
#include "exdeploy/submodular.h"

namespace exdeploy {

inline constexpr int kReportSchemaVersion = 1;

// Environment variable consulted when no cache directory is given.
inline constexpr const char* kCacheDirEnv = "EXDEPLOY_CACHE_DIR";
inline constexpr const char* kDefaultCacheDir = ".exdeploy-cache";

// Explicit directory, else $EXDEPLOY_CACHE_DIR, else kDefaultCacheDir.
std::filesystem::path ResolveCacheDir(const std::optional<std::filesystem::path>& dir);

// visgraph for obstacle workspaces, rrtstar for terrain.
Metric DefaultMetric(const Scenario& scenario);

struct DeployOptions {
  std::filesystem::path scenario_path;
  std::optional<Metric> metric;
  std::optional<Task> task;
  std::optional<std::uint64_t> seed;  // overrides rrt.seed
  bool use_cache = true;
  std::filesystem::path cache_dir = kDefaultCacheDir;
  std::filesystem::path out_dir = ".";
  int threads = 0;
  bool lazy = false;
};

struct PhaseTimings {
  double load_ms = 0.0;
  double matrix_ms = 0.0;
  double solve_ms = 0.0;
  double render_ms = 0.0;
};

struct RunReport {
  std::string scenario_name;
  std::string scenario_hash;
  Metric metric = Metric::kEuclidean;
  Task task = Task::kFairAccess;
  GreedyResult greedy;
  std::vector<Point2> selected_points;
  double max_target_distance = 0.0;  // on the untransformed matrix
  std::vector<int> assignments;      // nearest selected site per target
  std::vector<std::string> warnings;
  bool cache_hit = false;            // not serialized
  PhaseTimings timings;
};

// load -> matrix (cached) -> problem -> greedy -> report.json and
// deployment.svg in options.out_dir.
RunReport RunDeploy(const DeployOptions& options);

// Versioned JSON document; everything except "timings" is deterministic.
std::string ReportJson(const RunReport& report);

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitMetricMismatch = 4,
  kExitRuntime = 5,
  kExitVerifyFailed = 6,
};

// Exit code for an exception escaping a command.
int ExitCodeFor(const std::exception& error);

}  // namespace exdeploy

#endif  // EXDEPLOY_DEPLOY_H_
