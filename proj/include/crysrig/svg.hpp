#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>

#include "crysrig/lift.hpp"

namespace crysrig {

// One lattice unit is drawn as 10 SVG units; y points up.
inline constexpr double kSvgScale = 10.0;

inline std::string fiber_color(int vertex) {
  static constexpr std::array<const char*, 10> palette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                       "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return palette[static_cast<std::size_t>(vertex) % palette.size()];
}

inline std::string render_svg(const LiftFragment& lift) {
  double xmin = std::numeric_limits<double>::max(), ymin = xmin;
  double xmax = std::numeric_limits<double>::lowest(), ymax = xmax;
  for (const auto& v : lift.vertices) {
    xmin = std::min(xmin, v.position.x.value());
    xmax = std::max(xmax, v.position.x.value());
    ymin = std::min(ymin, v.position.y.value());
    ymax = std::max(ymax, v.position.y.value());
  }
  if (lift.vertices.empty()) xmin = xmax = ymin = ymax = 0;
  const double pad = 1.0;
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };
  auto sx = [&](double x) { return num((x - xmin + pad) * kSvgScale); };
  auto sy = [&](double y) { return num((ymax - y + pad) * kSvgScale); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num((xmax - xmin + 2 * pad) * kSvgScale)
     << "\" height=\"" << num((ymax - ymin + 2 * pad) * kSvgScale) << "\">\n";
  os << "<g stroke=\"#444\" stroke-width=\"0.3\">\n";
  for (const auto& [a, b] : lift.edges) {
    const auto& p = lift.vertices[a].position;
    const auto& q = lift.vertices[b].position;
    os << "<line x1=\"" << sx(p.x.value()) << "\" y1=\"" << sy(p.y.value()) << "\" x2=\"" << sx(q.x.value())
       << "\" y2=\"" << sy(q.y.value()) << "\"/>\n";
  }
  os << "</g>\n<g stroke=\"none\">\n";
  for (const auto& v : lift.vertices) {
    os << "<circle class=\"vertex\" cx=\"" << sx(v.position.x.value()) << "\" cy=\"" << sy(v.position.y.value())
       << "\" r=\"1\" fill=\"" << fiber_color(v.vertex) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace crysrig
