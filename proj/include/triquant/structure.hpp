#pragma once

// Structural analysis of point configurations on the unit triangle:
// symmetry-axis detection against the three medians, row clustering, and the
// predicted row decomposition for arbitrary n.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "triquant/voronoi.hpp"

namespace triquant {

struct SymmetryAxis {
  Point anchor;     // a point on the axis
  Point direction;  // unit direction
};

struct RowDecomposition {
  std::vector<std::pair<double, int>> rows;  // (level, count), sorted by level
  int N = 0;
  int J = 0;
  bool matches_conjecture = false;
  std::string diagnostic;
};

/// Predicted row structure for an optimal n-point configuration:
/// N = floor(sqrt(2n)) rows; rows j <= J carry j points with
/// J = N - |n - N(N+1)/2|; the remaining rows carry one extra point when
/// n exceeds the triangular number, one fewer when it falls short.
inline RowDecomposition conjecture2_prediction(long n) {
  if (n < 1) throw std::invalid_argument("conjecture2_prediction: n < 1");
  RowDecomposition out;
  long N = static_cast<long>(std::floor(std::sqrt(2.0 * static_cast<double>(n))));
  // Guard the floor against floating-point edges around perfect values.
  while ((N + 1) * (N + 1) <= 2 * n) ++N;
  while (N * N > 2 * n) --N;
  const long tri = N * (N + 1) / 2;
  const long J = N - std::abs(n - tri);
  out.N = static_cast<int>(N);
  out.J = static_cast<int>(J);
  for (long j = 1; j <= N; ++j) {
    int count = static_cast<int>(j);
    if (j > J) count += (n > tri) ? 1 : (n < tri ? -1 : 0);
    out.rows.emplace_back(static_cast<double>(j), count);
  }
  out.matches_conjecture = true;
  return out;
}

namespace detail {

inline Point reflect_across(const Point& p, const SymmetryAxis& axis) {
  const Point d = p - axis.anchor;
  const double along = dot(d, axis.direction);
  const Point proj = axis.anchor + along * axis.direction;
  return proj + (proj - p);
}

inline double hausdorff(const std::vector<Point>& a, const std::vector<Point>& b) {
  auto one_sided = [](const std::vector<Point>& u, const std::vector<Point>& v) {
    double worst = 0.0;
    for (const Point& p : u) {
      double best = std::numeric_limits<double>::infinity();
      for (const Point& q : v) best = std::min(best, dist_sq(p, q));
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

/// The three medians of the unit triangle, each through a vertex and the
/// domain centroid.
inline std::vector<SymmetryAxis> median_axes() {
  const double s3 = std::sqrt(3.0);
  const Point c{0.5, s3 / 6.0};
  const Point vertices[3] = {{0.0, 0.0}, {1.0, 0.0}, {0.5, s3 / 2.0}};
  std::vector<SymmetryAxis> axes;
  for (const Point& v : vertices) {
    Point dir = v - c;
    const double len = std::sqrt(dot(dir, dir));
    axes.push_back({c, {dir.x / len, dir.y / len}});
  }
  return axes;
}

}  // namespace detail

/// All median axes under which the configuration is reflection-invariant
/// within tol (Hausdorff distance of the reflected point set).
inline std::vector<SymmetryAxis> all_symmetry_axes(const Configuration& config,
                                                   double tol = 0.01) {
  std::vector<SymmetryAxis> found;
  for (const SymmetryAxis& axis : detail::median_axes()) {
    std::vector<Point> reflected;
    reflected.reserve(config.n());
    for (const Point& p : config.points)
      reflected.push_back(detail::reflect_across(p, axis));
    if (detail::hausdorff(config.points, reflected) < tol) found.push_back(axis);
  }
  return found;
}

/// First median axis of reflection symmetry, if any.
inline std::optional<SymmetryAxis> detect_symmetry_axis(const Configuration& config,
                                                        double tol = 0.01) {
  auto axes = all_symmetry_axes(config, tol);
  if (axes.empty()) return std::nullopt;
  return axes.front();
}

/// Cluster the configuration into rows perpendicular to its symmetry axis
/// (falling back to the vertical median when no axis is detected) and compare
/// the counts, top row first, with the conjectured decomposition.
inline RowDecomposition row_decomposition(const Configuration& config,
                                          double tol = 0.02) {
  RowDecomposition out;
  auto axis = detect_symmetry_axis(config, 0.01);
  Point dir{0.0, 1.0};
  if (axis) dir = axis->direction;
  // Orient the axis away from the nearest vertex so "level" increases toward
  // the apex of the canonical (axis-vertical, apex-up) orientation.
  std::vector<double> levels;
  levels.reserve(config.n());
  for (const Point& p : config.points) levels.push_back(dot(p, dir));
  std::sort(levels.begin(), levels.end());

  std::vector<std::pair<double, int>> rows;
  double row_sum = levels[0];
  int row_count = 1;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i] - levels[i - 1] > tol) {
      rows.emplace_back(row_sum / row_count, row_count);
      row_sum = 0.0;
      row_count = 0;
    }
    row_sum += levels[i];
    ++row_count;
  }
  rows.emplace_back(row_sum / row_count, row_count);

  // Row 1 is the row nearest the apex: the highest level along the axis.
  std::reverse(rows.begin(), rows.end());
  out.rows = rows;

  const RowDecomposition predicted = conjecture2_prediction(config.n());
  out.N = predicted.N;
  out.J = predicted.J;
  bool match = rows.size() == predicted.rows.size();
  if (match)
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].second != predicted.rows[i].second) match = false;
  if (!match && rows.size() != predicted.rows.size())
    out.diagnostic = "row count differs from prediction";
  else if (!match)
    out.diagnostic = "row occupancies differ from prediction";
  out.matches_conjecture = match;
  return out;
}

}  // namespace triquant
