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

#include "exdeploy/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "exdeploy/errors.h"

namespace exdeploy {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;

class Frame {
 public:
  explicit Frame(const Bounds& b) : b_(b) {
    scale_ = kCanvas / std::max(b.width(), b.height());
  }
  double width() const { return 2 * kMargin + b_.width() * scale_; }
  double height() const { return 2 * kMargin + b_.height() * scale_; }
  double scale() const { return scale_; }
  double X(double x) const { return kMargin + (x - b_.min.x) * scale_; }
  double Y(double y) const { return kMargin + (b_.max.y - y) * scale_; }

 private:
  Bounds b_;
  double scale_;
};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  // Avoid "-0.00" so output does not depend on the sign of tiny values.
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

std::string PointList(const Frame& f, const std::vector<Point2>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) out += ' ';
    out += Num(f.X(pts[i].x)) + "," + Num(f.Y(pts[i].y));
  }
  return out;
}

std::string EscapeXml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string RenderSvg(const SvgScene& scene) {
  if (scene.scenario == nullptr) throw InvalidParams("SVG scene needs a scenario");
  const Scenario& sc = *scene.scenario;
  const Frame f(sc.bounds());
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Num(f.width())
      << "\" height=\"" << Num(f.height()) << "\" viewBox=\"0 0 " << Num(f.width())
      << ' ' << Num(f.height()) << "\">\n";
  if (!scene.title.empty()) out << "<title>" << EscapeXml(scene.title) << "</title>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << Num(f.width()) << "\" height=\""
      << Num(f.height()) << "\" fill=\"white\"/>\n";

  if (scene.tau != nullptr) {
    const TraversabilityMap& tau = *scene.tau;
    const double cell = tau.cell_size() * f.scale();
    out << "<g id=\"traversability\" stroke=\"none\">\n";
    for (std::size_t r = 0; r < tau.rows(); ++r) {
      for (std::size_t c = 0; c < tau.cols(); ++c) {
        const int g = static_cast<int>(std::lround(255.0 * (1.0 - tau.at(r, c))));
        const double cx = tau.origin().x + tau.cell_size() * static_cast<double>(c);
        const double cy = tau.origin().y + tau.cell_size() * static_cast<double>(r);
        out << "<rect x=\"" << Num(f.X(cx) - cell / 2) << "\" y=\""
            << Num(f.Y(cy) - cell / 2) << "\" width=\"" << Num(cell) << "\" height=\""
            << Num(cell) << "\" fill=\"rgb(" << g << ',' << g << ',' << g << ")\"/>\n";
      }
    }
    out << "</g>\n";
  }

  const Bounds b = sc.bounds();
  out << "<rect x=\"" << Num(f.X(b.min.x)) << "\" y=\"" << Num(f.Y(b.max.y))
      << "\" width=\"" << Num(b.width() * f.scale()) << "\" height=\""
      << Num(b.height() * f.scale()) << "\" fill=\"none\" stroke=\"black\"/>\n";

  if (const Workspace2D* w = sc.workspace()) {
    out << "<g id=\"obstacles\" fill=\"#7f7f7f\" stroke=\"#404040\">\n";
    for (const Polygon& poly : w->obstacles()) {
      out << "<polygon points=\"" << PointList(f, poly.vertices()) << "\"/>\n";
    }
    out << "</g>\n";
  }

  if (scene.graph != nullptr) {
    const VisibilityGraph& g = *scene.graph;
    out << "<g id=\"roadmap\" stroke=\"#9ecae1\" stroke-width=\"0.8\">\n";
    for (std::size_t u = 0; u < g.num_nodes(); ++u) {
      for (const VisibilityGraph::Edge& e : g.neighbors(u)) {
        if (static_cast<std::size_t>(e.to) < u) continue;
        const Point2 a = g.nodes()[u], c = g.nodes()[e.to];
        out << "<line x1=\"" << Num(f.X(a.x)) << "\" y1=\"" << Num(f.Y(a.y))
            << "\" x2=\"" << Num(f.X(c.x)) << "\" y2=\"" << Num(f.Y(c.y)) << "\"/>\n";
      }
    }
    out << "</g>\n";
  }

  if (!scene.assignments.empty()) {
    out << "<g id=\"assignments\" stroke=\"#74c476\" stroke-width=\"0.7\">\n";
    for (std::size_t t = 0; t < scene.assignments.size() && t < sc.targets.size(); ++t) {
      const int s = scene.assignments[t];
      if (s < 0 || static_cast<std::size_t>(s) >= sc.candidates.size()) continue;
      const Point2 a = sc.targets[t], c = sc.candidates[s];
      out << "<line x1=\"" << Num(f.X(a.x)) << "\" y1=\"" << Num(f.Y(a.y))
          << "\" x2=\"" << Num(f.X(c.x)) << "\" y2=\"" << Num(f.Y(c.y)) << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<g id=\"candidates\" fill=\"none\" stroke=\"#3182bd\" stroke-width=\"1\">\n";
  for (const Point2& p : sc.candidates) {
    out << "<circle cx=\"" << Num(f.X(p.x)) << "\" cy=\"" << Num(f.Y(p.y))
        << "\" r=\"4.00\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"targets\" fill=\"#d62728\">\n";
  for (const Point2& p : sc.targets) {
    out << "<circle cx=\"" << Num(f.X(p.x)) << "\" cy=\"" << Num(f.Y(p.y))
        << "\" r=\"2.50\"/>\n";
  }
  out << "</g>\n";

  if (!scene.paths.empty()) {
    out << "<g id=\"paths\" fill=\"none\" stroke=\"red\" stroke-width=\"2\">\n";
    for (const auto& path : scene.paths) {
      out << "<polyline points=\"" << PointList(f, path) << "\"/>\n";
    }
    out << "</g>\n";
  }

  if (!scene.selected.empty()) {
    out << "<g id=\"selected\" fill=\"#08519c\" stroke=\"black\" stroke-width=\"1.5\">\n";
    for (int s : scene.selected) {
      if (s < 0 || static_cast<std::size_t>(s) >= sc.candidates.size()) continue;
      const Point2 p = sc.candidates[s];
      out << "<circle cx=\"" << Num(f.X(p.x)) << "\" cy=\"" << Num(f.Y(p.y))
          << "\" r=\"7.00\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void WriteSvg(const SvgScene& scene, const std::filesystem::path& path) {
  const std::string text = RenderSvg(scene);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace exdeploy
