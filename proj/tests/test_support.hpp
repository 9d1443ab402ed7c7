#pragma once

// Shared test helpers: seeded random generators and independent brute-force
// oracles.  Nothing in here calls the closed-form moment path it is used to
// check.

#include <algorithm>
#include <random>
#include <vector>

#include "triquant/geometry.hpp"

namespace tq_test {

using triquant::Point;

/// Convex hull (Andrew monotone chain) of a point cloud, CCW.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  auto half = [&](auto begin, auto end) {
    std::vector<Point> h;
    for (auto it = begin; it != end; ++it) {
      while (h.size() >= 2 &&
             triquant::cross(h[h.size() - 1] - h[h.size() - 2],
                             *it - h[h.size() - 2]) <= 0)
        h.pop_back();
      h.push_back(*it);
    }
    return h;
  };
  std::vector<Point> lower = half(pts.begin(), pts.end());
  std::vector<Point> upper = half(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

/// Random convex polygon: hull of a seeded point cloud in [0,1]^2.
inline triquant::ConvexPolygon random_convex_polygon(std::mt19937_64& rng,
                                                     int cloud = 12) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (;;) {
    std::vector<Point> cloud_pts;
    for (int i = 0; i < cloud; ++i) cloud_pts.push_back({uni(rng), uni(rng)});
    auto hull = convex_hull(cloud_pts);
    triquant::ConvexPolygon poly(hull);
    if (poly.size() >= 3 && triquant::area(poly) > 1e-3) return poly;
  }
}

inline Point random_point(std::mt19937_64& rng, double lo = -2.0, double hi = 3.0) {
  std::uniform_real_distribution<double> uni(lo, hi);
  return {uni(rng), uni(rng)};
}

/// Exact monomial integrals over a triangle, used as an oracle independent of
/// the library's shifted-moment kernel.
struct TriangleMonomials {
  double area, ix, iy, ixx, iyy;  // integrals of 1, x, y, x^2, y^2
};

inline TriangleMonomials triangle_monomials(const Point& a, const Point& b,
                                            const Point& c) {
  const double A = 0.5 * std::abs(triquant::cross(b - a, c - a));
  TriangleMonomials m;
  m.area = A;
  m.ix = A / 3.0 * (a.x + b.x + c.x);
  m.iy = A / 3.0 * (a.y + b.y + c.y);
  m.ixx = A / 6.0 * (a.x * a.x + b.x * b.x + c.x * c.x + a.x * b.x +
                     b.x * c.x + c.x * a.x);
  m.iyy = A / 6.0 * (a.y * a.y + b.y * b.y + c.y * c.y + a.y * b.y +
                     b.y * c.y + c.y * a.y);
  return m;
}

inline TriangleMonomials polygon_monomials(const triquant::ConvexPolygon& poly) {
  TriangleMonomials total{0, 0, 0, 0, 0};
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    const auto m = triangle_monomials(poly[0], poly[i], poly[i + 1]);
    total.area += m.area;
    total.ix += m.ix;
    total.iy += m.iy;
    total.ixx += m.ixx;
    total.iyy += m.iyy;
  }
  return total;
}

/// Brute-force area integral of |x-p|^2 assembled from monomial integrals.
inline double oracle_second_moment(const triquant::ConvexPolygon& poly,
                                   const Point& p) {
  const auto m = polygon_monomials(poly);
  return m.ixx + m.iyy - 2.0 * p.x * m.ix - 2.0 * p.y * m.iy +
         (p.x * p.x + p.y * p.y) * m.area;
}

}  // namespace tq_test
