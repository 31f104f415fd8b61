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

// exdeploy: agent deployment over obstacle-aware and terrain-aware distances.
//
//   exdeploy deploy  SCENARIO [--metric M] [--task T] [--seed N] [--out DIR]
//   exdeploy matrix  SCENARIO [--metric M] [--out FILE]
//   exdeploy terrain SCENARIO [--out DIR]
//   exdeploy verify  SCENARIO [--metric M] [--task T] [--trials N]
//   exdeploy path    SCENARIO --from X,Y --to X,Y [--metric M] [--out FILE]

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "exdeploy/coverage.h"
#include "exdeploy/deploy.h"
#include "exdeploy/errors.h"
#include "exdeploy/metrics.h"
#include "exdeploy/rrtstar.h"
#include "exdeploy/scenario.h"
#include "exdeploy/svg.h"
#include "exdeploy/terrain.h"
#include "exdeploy/visgraph.h"
#include "json.hpp"

namespace {

using namespace exdeploy;
using nlohmann::ordered_json;

struct CommonFlags {
  std::string scenario;
  std::string metric;
  std::string task;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  std::string out;
  int threads = 0;
};

void AddCommon(CLI::App* cmd, CommonFlags& f, bool with_task) {
  cmd->add_option("scenario", f.scenario, "Scenario JSON file")->required();
  cmd->add_option("--metric", f.metric,
                  "euclidean | visgraph | rrtstar | rrtstar-unweighted");
  if (with_task) cmd->add_option("--task", f.task, "fair-access | hotspot");
  cmd->add_option("--seed", f.seed, "Master RRT* seed (overrides the scenario)");
  cmd->add_option("--cache-dir", f.cache_dir,
                  std::string("Matrix cache directory (default $") + kCacheDirEnv +
                      " or " + kDefaultCacheDir + ")");
  cmd->add_flag("--no-cache", f.no_cache, "Always recompute distance matrices");
  cmd->add_option("--threads", f.threads, "Worker threads, 0 = auto");
}

Scenario LoadWithOverrides(const CommonFlags& f) {
  Scenario sc = LoadScenario(f.scenario);
  if (f.seed) sc.rrt.seed = *f.seed;
  if (!f.task.empty()) sc.task = ParseTask(f.task);
  return sc;
}

Metric MetricFor(const CommonFlags& f, const Scenario& sc) {
  return f.metric.empty() ? DefaultMetric(sc) : ParseMetric(f.metric);
}

MatrixOptions MatrixOptionsFor(const CommonFlags& f, std::vector<std::string>* warnings) {
  MatrixOptions mo;
  mo.use_cache = !f.no_cache;
  mo.cache_dir = ResolveCacheDir(f.cache_dir);
  mo.threads = f.threads;
  mo.warnings = warnings;
  return mo;
}

Point2 ParseXY(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ValidationError(flag, "expected X,Y");
  }
}

void PrintWarnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
}

int RunDeployCommand(const CommonFlags& f, bool lazy) {
  DeployOptions opts;
  opts.scenario_path = f.scenario;
  if (!f.metric.empty()) opts.metric = ParseMetric(f.metric);
  if (!f.task.empty()) opts.task = ParseTask(f.task);
  opts.seed = f.seed;
  opts.use_cache = !f.no_cache;
  opts.cache_dir = ResolveCacheDir(f.cache_dir);
  opts.out_dir = f.out.empty() ? "." : f.out;
  opts.threads = f.threads;
  opts.lazy = lazy;
  const RunReport report = RunDeploy(opts);
  PrintWarnings(report.warnings);
  std::cerr << "matrix " << (report.cache_hit ? "loaded from cache" : "computed")
            << "; wrote " << (opts.out_dir / "report.json").string() << " and "
            << (opts.out_dir / "deployment.svg").string() << '\n';
  std::cout << ReportJson(report);
  return kExitOk;
}

int RunMatrixCommand(const CommonFlags& f) {
  const Scenario sc = LoadWithOverrides(f);
  std::vector<std::string> warnings;
  bool hit = false;
  MatrixOptions mo = MatrixOptionsFor(f, &warnings);
  mo.cache_hit = &hit;
  const DistanceMatrix m = BuildMatrix(sc, MetricFor(f, sc), mo);
  PrintWarnings(warnings);
  std::cerr << m.sites() << "x" << m.targets() << " " << m.metric_tag() << " matrix "
            << (hit ? "loaded from cache" : "computed") << ", D_max=" << m.d_max() << '\n';
  if (f.out.empty()) {
    WriteMatrixCsv(m, std::cout);
  } else {
    std::ofstream out(f.out);
    if (!out) throw IoError("cannot write " + f.out);
    WriteMatrixCsv(m, out);
  }
  return kExitOk;
}

int RunTerrainCommand(const CommonFlags& f) {
  const Scenario sc = LoadWithOverrides(f);
  const TraversabilityMap tau = ScenarioTraversability(sc);
  const std::filesystem::path dir = f.out.empty() ? "." : f.out;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream csv(dir / "tau.csv");
  std::ofstream pgm(dir / "tau.pgm", std::ios::binary);
  if (!csv || !pgm) throw IoError("cannot write into " + dir.string());
  WriteTauCsv(tau, csv);
  WriteTauPgm(tau, pgm);
  SvgScene scene;
  scene.scenario = &sc;
  scene.tau = &tau;
  scene.title = sc.name + " | traversability";
  WriteSvg(scene, dir / "tau.svg");
  std::size_t blocked = 0;
  for (double t : tau.tau()) blocked += t > sc.terrain_params.tau_max;
  std::cout << ordered_json{{"rows", tau.rows()},
                            {"cols", tau.cols()},
                            {"tau_max", sc.terrain_params.tau_max},
                            {"blocked_fraction",
                             static_cast<double>(blocked) / tau.tau().size()}}
                   .dump(2)
            << '\n';
  return kExitOk;
}

int RunVerifyCommand(const CommonFlags& f, int trials) {
  const Scenario sc = LoadWithOverrides(f);
  std::vector<std::string> warnings;
  const DistanceMatrix m = BuildMatrix(sc, MetricFor(f, sc), MatrixOptionsFor(f, &warnings));
  PrintWarnings(warnings);
  const DeploymentProblem problem = BuildProblem(sc, m);
  const PropertyReport props = CheckProperties(*problem.utility, trials, sc.rrt.seed);
  const GreedyResult greedy = Solve(problem);

  ordered_json out;
  out["exhaustive"] = props.exhaustive;
  out["checks"] = props.checks;
  out["monotone_violations"] = props.monotone_violations;
  out["submodular_violations"] = props.submodular_violations;
  out["greedy_value"] = greedy.value;
  out["guarantee"] = GuaranteeLabel(greedy.guarantee);
  bool ok = props.monotone_violations == 0 && props.submodular_violations == 0;
  try {
    const BruteForceResult opt =
        sc.partition ? BruteForce(*problem.utility, *sc.partition)
                     : BruteForce(*problem.utility, sc.k);
    const bool bound = greedy.value >= GuaranteeFactor(greedy.guarantee) * opt.value - 1e-9;
    out["optimum_value"] = opt.value;
    out["optimum"] = opt.selected;
    out["ratio"] = opt.value > 0 ? greedy.value / opt.value : 1.0;
    out["guarantee_holds"] = bound;
    ok = ok && bound;
  } catch (const InstanceTooLarge&) {
    out["optimum_value"] = nullptr;
    out["note"] = "instance too large for exhaustive search";
  }
  out["passed"] = ok;
  std::cout << out.dump(2) << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

int RunPathCommand(const CommonFlags& f, const std::string& from_text,
                   const std::string& to_text) {
  const Scenario sc = LoadWithOverrides(f);
  const Point2 from = ParseXY(from_text, "--from");
  const Point2 to = ParseXY(to_text, "--to");
  const Metric metric = MetricFor(f, sc);
  std::optional<std::vector<Point2>> path;
  std::optional<double> length;
  std::optional<VisibilityGraph> graph;
  std::optional<TraversabilityMap> tau;
  switch (metric) {
    case Metric::kEuclidean:
      path = std::vector<Point2>{from, to};
      length = Distance(from, to);
      break;
    case Metric::kVisgraph:
      if (sc.workspace() == nullptr) {
        throw MetricGeometryMismatch("visgraph metric needs an obstacle workspace");
      }
      graph.emplace(*sc.workspace());
      length = QueryDistance(*graph, from, to);
      path = QueryPath(*graph, from, to);
      break;
    case Metric::kRrtstar:
    case Metric::kRrtstarUnweighted: {
      tau = ScenarioTraversability(sc);
      RrtParams params = sc.rrt;
      if (metric == Metric::kRrtstarUnweighted) params.tau_max = 1.0;
      if (auto plan = Plan(from, to, *tau, params)) {
        length = plan->length;
        path = plan->polyline;
      }
      break;
    }
  }
  ordered_json out;
  out["metric"] = MetricName(metric);
  out["reachable"] = length.has_value();
  out["length"] = length ? ordered_json(*length) : ordered_json(nullptr);
  auto pts = ordered_json::array();
  if (path) {
    for (const Point2& p : *path) pts.push_back({p.x, p.y});
  }
  out["polyline"] = pts;
  std::cout << out.dump(2) << '\n';

  SvgScene scene;
  scene.scenario = &sc;
  scene.graph = graph ? &*graph : nullptr;
  scene.tau = tau ? &*tau : nullptr;
  if (path) scene.paths.push_back(*path);
  scene.title = sc.name + " | shortest path (" + MetricName(metric) + ")";
  WriteSvg(scene, f.out.empty() ? "path.svg" : f.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-agent deployment over candidate sites in obstacle and terrain "
               "workspaces"};
  app.require_subcommand(1);

  CommonFlags deploy_flags, matrix_flags, terrain_flags, verify_flags, path_flags;
  bool lazy = false;
  int trials = 1000;
  std::string from, to;

  auto* deploy = app.add_subcommand("deploy", "Select K sites and write report.json + deployment.svg");
  AddCommon(deploy, deploy_flags, true);
  deploy->add_option("--out", deploy_flags.out, "Output directory");
  deploy->add_flag("--lazy", lazy, "Lazy greedy (same picks for submodular utilities)");

  auto* matrix = app.add_subcommand("matrix", "Build (and cache) the site-target distance matrix");
  AddCommon(matrix, matrix_flags, false);
  matrix->add_option("--out", matrix_flags.out, "CSV output file (default stdout)");

  auto* terrain = app.add_subcommand("terrain", "Write the traversability map as CSV, PGM and SVG");
  AddCommon(terrain, terrain_flags, false);
  terrain->add_option("--out", terrain_flags.out, "Output directory");

  auto* verify = app.add_subcommand("verify", "Check utility properties and greedy against brute force");
  AddCommon(verify, verify_flags, true);
  verify->add_option("--trials", trials, "Random triples when the ground set is large");

  auto* path = app.add_subcommand("path", "Query one shortest path and draw it");
  AddCommon(path, path_flags, false);
  path->add_option("--from", from, "Start X,Y")->required();
  path->add_option("--to", to, "Goal X,Y")->required();
  path->add_option("--out", path_flags.out, "SVG output file (default path.svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*deploy) return RunDeployCommand(deploy_flags, lazy);
    if (*matrix) return RunMatrixCommand(matrix_flags);
    if (*terrain) return RunTerrainCommand(terrain_flags);
    if (*verify) return RunVerifyCommand(verify_flags, trials);
    if (*path) return RunPathCommand(path_flags, from, to);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  }
  return kExitUsage;
}
