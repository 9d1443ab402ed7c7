#pragma once

// Closed-form second moments of convex regions and their normalization by a
// uniform density.  The triangle kernel is exact for degree-2 integrands, so
// no quadrature error enters anywhere in the library.

#include "triquant/geometry.hpp"

namespace triquant {

// A convex region carrying the uniform probability density on it.
struct Domain {
  ConvexPolygon boundary;
  double total_area;
  double density;  // 1/total_area; 4/sqrt(3) for the unit triangle

  explicit Domain(ConvexPolygon b)
      : boundary(std::move(b)), total_area(area(boundary)) {
    if (total_area <= kEpsArea)
      throw std::invalid_argument("Domain: boundary has no area");
    density = 1.0 / total_area;
  }

  /// The unit equilateral triangle (0,0), (1,0), (1/2, sqrt(3)/2).
  static Domain unit_triangle() {
    const double h = std::sqrt(3.0) / 2.0;
    return Domain(ConvexPolygon({{0.0, 0.0}, {1.0, 0.0}, {0.5, h}}));
  }

  double diameter() const {
    double d2 = 0.0;
    for (std::size_t i = 0; i < boundary.size(); ++i)
      for (std::size_t j = i + 1; j < boundary.size(); ++j)
        d2 = std::max(d2, dist_sq(boundary[i], boundary[j]));
    return std::sqrt(d2);
  }
};

/// Integral of |x-p|^2 dA over one triangle, exact.
inline double triangle_second_moment(const Point& v0, const Point& v1,
                                     const Point& v2, const Point& p) {
  const Point a = v0 - p, b = v1 - p, c = v2 - p;
  const double A = 0.5 * std::abs(cross(b - a, c - a));
  // For degree-2 integrands over a triangle:
  //   integral = A/6 * (a.a + b.b + c.c + a.b + b.c + c.a)
  return A / 6.0 *
         (dot(a, a) + dot(b, b) + dot(c, c) + dot(a, b) + dot(b, c) + dot(c, a));
}

/// Unnormalized area integral of |x-p|^2 over a convex region (0 if empty).
inline double second_moment_about(const ConvexPolygon& region, const Point& p) {
  if (region.size() < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 1; i + 1 < region.size(); ++i)
    s += triangle_second_moment(region[0], region[i], region[i + 1], p);
  return s;
}

/// One summand of the quantization error: density-weighted second moment of a
/// sub-region of the domain about p.
inline double cell_error(const Domain& domain, const ConvexPolygon& region,
                         const Point& p) {
  return domain.density * second_moment_about(region, p);
}

inline Point domain_mean(const Domain& domain) { return centroid(domain.boundary); }

/// The 1-point quantization error (variance of the uniform distribution).
inline double domain_variance(const Domain& domain) {
  return cell_error(domain, domain.boundary, domain_mean(domain));
}

}  // namespace triquant
