#pragma once

// Voronoi partition of a domain induced by a point configuration, built by
// clipping the domain against bisector half planes.

#include <limits>
#include <numeric>
#include <vector>

#include "triquant/moments.hpp"

namespace triquant {

struct Configuration {
  std::vector<Point> points;

  Configuration() = default;
  explicit Configuration(std::vector<Point> pts) : points(std::move(pts)) {}

  std::size_t n() const { return points.size(); }

  bool points_distinct(double tol = kEpsGeom) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if (dist_sq(points[i], points[j]) <= tol * tol) return false;
    return true;
  }
};

struct Partition {
  std::vector<ConvexPolygon> cells;   // index-aligned with the configuration
  std::vector<double> cell_errors;
  double total_error = 0.0;

  bool has_empty_cell() const {
    for (const auto& c : cells)
      if (c.is_empty()) return true;
    return false;
  }
};

/// Voronoi cells of config clipped to the domain, with per-cell errors.
/// Points outside the domain are allowed; their cells may come out empty.
inline Partition partition(const Domain& domain, const Configuration& config) {
  if (config.n() == 0)
    throw std::invalid_argument("partition: empty configuration");
  if (!config.points_distinct())
    throw std::invalid_argument("partition: duplicate points");
  Partition part;
  part.cells.reserve(config.n());
  part.cell_errors.reserve(config.n());
  for (std::size_t i = 0; i < config.n(); ++i) {
    ConvexPolygon cell = domain.boundary;
    for (std::size_t j = 0; j < config.n() && !cell.is_empty(); ++j) {
      if (j == i) continue;
      cell = clip(cell, HalfPlane::bisector(config.points[i], config.points[j]));
    }
    const double err = cell_error(domain, cell, config.points[i]);
    part.cells.push_back(std::move(cell));
    part.cell_errors.push_back(err);
    part.total_error += err;
  }
  return part;
}

/// Max distance from any point to the centroid of its cell; +inf when a cell
/// is empty.  Zero characterizes a centroidal (stationary) configuration.
inline double optimality_residual(const Domain& domain, const Configuration& config) {
  const Partition part = partition(domain, config);
  double worst = 0.0;
  for (std::size_t i = 0; i < config.n(); ++i) {
    if (part.cells[i].is_empty())
      return std::numeric_limits<double>::infinity();
    worst = std::max(worst, dist(config.points[i], centroid(part.cells[i])));
  }
  return worst;
}

}  // namespace triquant
