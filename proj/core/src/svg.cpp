#include "kcolor/svg.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace kcolor::svg {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
constexpr int kPaletteSize = 10;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render(const Scenario& sc, const Plan* plan, const SvgOptions& opts) {
  const auto box = sc.workspace.bounding_box();
  const double margin = opts.margin;
  const double scale = opts.scale;
  const double width = (box.hi.x - box.lo.x + 2 * margin) * scale;
  const double height = (box.hi.y - box.lo.y + 2 * margin) * scale;
  // SVG y grows downward; flip while mapping into pixels.
  auto sx = [&](double x) { return (x - box.lo.x + margin) * scale; };
  auto sy = [&](double y) { return (box.hi.y - y + margin) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
      << fmt(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#d9d9d9\"/>\n";

  auto polygon = [&](const geom::Polygon& poly, const char* style) {
    out << "<polygon points=\"";
    for (const auto& p : poly.vertices()) out << fmt(sx(p.x)) << "," << fmt(sy(p.y)) << " ";
    out << "\" " << style << "/>\n";
  };
  polygon(sc.workspace.boundary, "fill=\"#fcfcfc\" stroke=\"#333333\" stroke-width=\"2\"");
  for (const auto& obs : sc.workspace.obstacles) {
    polygon(obs, "fill=\"#6b6b6b\" stroke=\"#333333\" stroke-width=\"1\"");
  }

  for (int i = 0; i < sc.color_count(); ++i) {
    const char* color = kPalette[i % kPaletteSize];
    const double r = sc.groups[i].radius * scale;
    for (const auto& p : sc.groups[i].targets) {
      out << "<circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y)) << "\" r=\""
          << fmt(r) << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (const auto& p : sc.groups[i].starts) {
      out << "<circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y)) << "\" r=\""
          << fmt(r) << "\" fill=\"" << color << "\" opacity=\"0.25\"/>\n";
    }
  }

  // Per-robot positions at every step boundary.
  std::vector<std::vector<geom::Point>> pos(sc.color_count());
  for (int i = 0; i < sc.color_count(); ++i) pos[i] = sc.groups[i].starts;
  std::vector<std::vector<std::vector<geom::Point>>> timeline;  // time -> color -> robot
  timeline.push_back(pos);
  if (plan) {
    for (const auto& step : plan->steps) {
      for (const auto& m : step.motions) {
        if (m.robot.color >= 0 && m.robot.color < sc.color_count() && m.robot.index >= 0 &&
            m.robot.index < static_cast<int>(pos[m.robot.color].size())) {
          pos[m.robot.color][m.robot.index] = m.motion.to;
        }
      }
      timeline.push_back(pos);
    }
  }
  const std::size_t frames = timeline.size();
  const double dur = opts.seconds_per_step * static_cast<double>(frames - 1);

  for (int i = 0; i < sc.color_count(); ++i) {
    const char* color = kPalette[i % kPaletteSize];
    const double r = sc.groups[i].radius * scale;
    for (std::size_t j = 0; j < sc.groups[i].starts.size(); ++j) {
      const geom::Point p0 = timeline.front()[i][j];
      out << "<circle cx=\"" << fmt(sx(p0.x)) << "\" cy=\"" << fmt(sy(p0.y)) << "\" r=\""
          << fmt(r) << "\" fill=\"" << color << "\" stroke=\"#222222\" stroke-width=\"1\">";
      if (frames > 1 && dur > 0.0) {
        std::ostringstream xs;
        std::ostringstream ys;
        std::ostringstream ts;
        for (std::size_t f = 0; f < frames; ++f) {
          if (f) {
            xs << ";";
            ys << ";";
            ts << ";";
          }
          xs << fmt(sx(timeline[f][i][j].x));
          ys << fmt(sy(timeline[f][i][j].y));
          ts << fmt(static_cast<double>(f) / static_cast<double>(frames - 1));
        }
        out << "\n  <animate attributeName=\"cx\" dur=\"" << fmt(dur)
            << "s\" repeatCount=\"indefinite\" calcMode=\"linear\" keyTimes=\""
            << ts.str() << "\" values=\"" << xs.str() << "\"/>";
        out << "\n  <animate attributeName=\"cy\" dur=\"" << fmt(dur)
            << "s\" repeatCount=\"indefinite\" calcMode=\"linear\" keyTimes=\""
            << ts.str() << "\" values=\"" << ys.str() << "\"/>\n";
      }
      out << "</circle>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace kcolor::svg
