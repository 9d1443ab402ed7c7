#pragma once

// Machine-readable outputs shared by the CLI subcommands: JSON run reports,
// CSV point dumps, and SVG renderings of configurations with their Voronoi
// cells.

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "triquant/structure.hpp"
#include "triquant/voronoi.hpp"

namespace triquant {

inline constexpr const char* kVersion = "0.1.0";

/// Shortest decimal form that round-trips to the same double.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline nlohmann::json point_json(const Point& p) {
  return {{"x", p.x}, {"y", p.y}};
}

inline nlohmann::json config_json(const Configuration& cfg) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Point& p : cfg.points) arr.push_back(point_json(p));
  return arr;
}

inline std::string points_csv(const Configuration& cfg) {
  std::ostringstream out;
  out << "x,y\n";
  for (const Point& p : cfg.points)
    out << format_double(p.x) << "," << format_double(p.y) << "\n";
  return out.str();
}

/// SVG drawing of the domain, Voronoi cells and points, rotated so the
/// detected symmetry axis (if any) is vertical.
inline std::string render_svg(const Domain& domain, const Configuration& cfg,
                              int size_px = 480) {
  const Partition part = partition(domain, cfg);

  // Rotate so the symmetry axis points straight up.
  double angle = 0.0;
  if (auto axis = detect_symmetry_axis(cfg)) {
    angle = std::atan2(axis->direction.y, axis->direction.x) -
            std::acos(-1.0) / 2.0;
  }
  const Point pivot = domain_mean(domain);
  auto xf = [&](const Point& p) {
    const double ca = std::cos(-angle), sa = std::sin(-angle);
    const Point d = p - pivot;
    return Point{pivot.x + ca * d.x - sa * d.y, pivot.y + sa * d.x + ca * d.y};
  };

  const double margin = 0.08;
  const double scale = size_px / (1.0 + 2 * margin);
  auto sx = [&](const Point& p) { return (xf(p).x - pivot.x + 0.5 + margin) * scale; };
  auto sy = [&](const Point& p) {
    return size_px - (xf(p).y - pivot.y + 0.5 + margin) * scale;
  };
  auto path = [&](const ConvexPolygon& poly) {
    std::ostringstream d;
    for (std::size_t i = 0; i < poly.size(); ++i)
      d << (i ? " L " : "M ") << sx(poly[i]) << " " << sy(poly[i]);
    d << " Z";
    return d.str();
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px
      << "\" height=\"" << size_px << "\" viewBox=\"0 0 " << size_px << " "
      << size_px << "\">\n";
  for (const ConvexPolygon& cell : part.cells) {
    if (cell.is_empty()) continue;
    svg << "  <path d=\"" << path(cell)
        << "\" fill=\"#eef4fb\" stroke=\"#7a9cc6\" stroke-width=\"1\"/>\n";
  }
  svg << "  <path d=\"" << path(domain.boundary)
      << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
  for (const Point& p : cfg.points)
    svg << "  <circle cx=\"" << sx(p) << "\" cy=\"" << sy(p)
        << "\" r=\"3.5\" fill=\"#c0392b\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace triquant
