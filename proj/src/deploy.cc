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

#include "exdeploy/deploy.h"

#include <chrono>
#include <cstdlib>
#include <fstream>

#include "exdeploy/errors.h"
#include "exdeploy/svg.h"
#include "json.hpp"

namespace exdeploy {

namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::filesystem::path ResolveCacheDir(const std::optional<std::filesystem::path>& dir) {
  if (dir) return *dir;
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') {
    return env;
  }
  return kDefaultCacheDir;
}

Metric DefaultMetric(const Scenario& scenario) {
  return scenario.terrain() != nullptr ? Metric::kRrtstar : Metric::kVisgraph;
}

RunReport RunDeploy(const DeployOptions& options) {
  RunReport report;
  auto t0 = Clock::now();
  Scenario scenario = LoadScenario(options.scenario_path);
  if (options.seed) scenario.rrt.seed = *options.seed;
  if (options.task) scenario.task = *options.task;
  report.timings.load_ms = MillisSince(t0);

  report.scenario_name = scenario.name;
  report.scenario_hash = scenario.hash;
  report.metric = options.metric.value_or(DefaultMetric(scenario));
  report.task = scenario.task;

  t0 = Clock::now();
  MatrixOptions mo;
  mo.use_cache = options.use_cache;
  mo.cache_dir = options.cache_dir;
  mo.threads = options.threads;
  mo.warnings = &report.warnings;
  mo.cache_hit = &report.cache_hit;
  const DistanceMatrix matrix = BuildMatrix(scenario, report.metric, mo);
  report.timings.matrix_ms = MillisSince(t0);

  t0 = Clock::now();
  const DeploymentProblem problem = BuildProblem(scenario, matrix);
  report.greedy = Solve(problem, {.lazy = options.lazy});
  for (int s : report.greedy.selected) report.selected_points.push_back(scenario.candidates[s]);
  report.max_target_distance = MaxTargetDistance(report.greedy.selected, matrix);
  report.assignments = NearestAssignment(report.greedy.selected, matrix);
  report.timings.solve_ms = MillisSince(t0);

  t0 = Clock::now();
  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  std::optional<TraversabilityMap> tau;
  if (scenario.terrain() != nullptr) tau = ScenarioTraversability(scenario);
  SvgScene scene;
  scene.scenario = &scenario;
  scene.selected = report.greedy.selected;
  scene.assignments = report.assignments;
  scene.tau = tau ? &*tau : nullptr;
  scene.title = scenario.name + " | " + MetricName(report.metric) + " | " +
                TaskName(report.task);
  WriteSvg(scene, options.out_dir / "deployment.svg");
  report.timings.render_ms = MillisSince(t0);

  std::ofstream out(options.out_dir / "report.json");
  if (!out) throw IoError("cannot write " + (options.out_dir / "report.json").string());
  out << ReportJson(report);
  return report;
}

std::string ReportJson(const RunReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["scenario"] = report.scenario_name;
  j["scenario_hash"] = report.scenario_hash;
  j["metric"] = MetricName(report.metric);
  j["task"] = TaskName(report.task);
  j["selected"] = report.greedy.selected;
  auto points = nlohmann::ordered_json::array();
  for (const Point2& p : report.selected_points) points.push_back({p.x, p.y});
  j["selected_points"] = points;
  j["gains"] = report.greedy.gains;
  j["value"] = report.greedy.value;
  j["guarantee"] = GuaranteeLabel(report.greedy.guarantee);
  j["evaluations"] = report.greedy.evaluations;
  j["max_target_distance"] = report.max_target_distance;
  j["assignments"] = report.assignments;
  j["warnings"] = report.warnings;
  j["timings"] = {{"load_ms", report.timings.load_ms},
                  {"matrix_ms", report.timings.matrix_ms},
                  {"solve_ms", report.timings.solve_ms},
                  {"render_ms", report.timings.render_ms}};
  return j.dump(2) + "\n";
}

int ExitCodeFor(const std::exception& error) {
  if (dynamic_cast<const ParseError*>(&error)) return kExitParse;
  if (dynamic_cast<const ValidationError*>(&error)) return kExitValidation;
  if (dynamic_cast<const MetricGeometryMismatch*>(&error)) return kExitMetricMismatch;
  return kExitRuntime;
}

}  // namespace exdeploy
