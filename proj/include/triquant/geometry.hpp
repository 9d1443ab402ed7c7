#pragma once

// 2-D primitives: points, convex polygons, half-plane clipping,
// fan triangulation, areas and centroids.  All coordinates are doubles;
// polygons are stored counter-clockwise.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace triquant {

inline constexpr double kEpsGeom = 1e-12;  // orientation / normalization tests
inline constexpr double kEpsArea = 1e-14;  // emptiness threshold

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double px, double py) : x(px), y(py) {
    if (!std::isfinite(px) || !std::isfinite(py))
      throw std::invalid_argument("Point: non-finite coordinate");
  }

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
};

inline Point operator*(double s, const Point& p) { return p * s; }

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

/// Squared Euclidean distance between two points.
inline double dist_sq(const Point& p, const Point& q) {
  const double dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

inline double dist(const Point& p, const Point& q) { return std::sqrt(dist_sq(p, q)); }

// The half plane {(x,y) : a*x + b*y <= c}, with (a,b) a unit normal.
struct HalfPlane {
  double a, b, c;

  HalfPlane(double na, double nb, double nc) {
    const double len = std::hypot(na, nb);
    if (len < kEpsGeom)
      throw std::invalid_argument("HalfPlane: degenerate normal");
    a = na / len;
    b = nb / len;
    c = nc / len;
  }

  /// Perpendicular bisector half plane containing p: {x : |x-p| <= |x-q|}.
  static HalfPlane bisector(const Point& p, const Point& q) {
    const Point d = q - p;
    const Point mid = (p + q) * 0.5;
    return HalfPlane(d.x, d.y, dot(d, mid));
  }

  double signed_eval(const Point& p) const { return a * p.x + b * p.y - c; }
  bool contains(const Point& p, double tol = kEpsGeom) const {
    return signed_eval(p) <= tol;
  }
  HalfPlane complement() const {
    HalfPlane h(*this);
    h.a = -a; h.b = -b; h.c = -c;
    return h;
  }

 private:
  HalfPlane() = default;
};

// Ordered CCW vertex loop.  The empty state (no vertices) is a legal value
// representing a fully clipped region.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  explicit ConvexPolygon(std::vector<Point> verts) {
    vertices_ = normalize(std::move(verts));
  }

  static ConvexPolygon empty() { return ConvexPolygon(); }

  bool is_empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(const Point& p, double tol = kEpsGeom) const {
    const std::size_t n = vertices_.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = vertices_[i];
      const Point& b = vertices_[(i + 1) % n];
      if (cross(b - a, p - a) < -tol) return false;
    }
    return true;
  }

 private:
  std::vector<Point> vertices_;

  // Dedupe near-coincident consecutive vertices, drop degenerate loops,
  // re-orient CW input to CCW.
  static std::vector<Point> normalize(std::vector<Point> v) {
    std::vector<Point> out;
    out.reserve(v.size());
    for (const Point& p : v) {
      if (out.empty() || dist_sq(out.back(), p) > kEpsGeom * kEpsGeom)
        out.push_back(p);
    }
    while (out.size() > 1 &&
           dist_sq(out.front(), out.back()) <= kEpsGeom * kEpsGeom)
      out.pop_back();
    if (out.size() < 3) return {};
    double signed_area = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i)
      signed_area += cross(out[i], out[(i + 1) % out.size()]);
    if (signed_area < 0.0) {
      std::vector<Point> rev(out.rbegin(), out.rend());
      out = std::move(rev);
    }
    return out;
  }
};

/// Shoelace area; empty or degenerate polygons give 0.
inline double area(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += cross(poly[i], poly[(i + 1) % n]);
  return 0.5 * std::abs(s);
}

/// Polygon centroid.  Throws on regions with area <= kEpsArea.
inline Point centroid(const ConvexPolygon& poly) {
  const double A = area(poly);
  if (A <= kEpsArea)
    throw std::domain_error("centroid: degenerate region");
  const std::size_t n = poly.size();
  double cx = 0.0, cy = 0.0, s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % n];
    const double w = cross(p, q);
    s += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  return {cx / (3.0 * s), cy / (3.0 * s)};
}

/// Intersection of a convex polygon with one half plane (single-pass
/// Sutherland-Hodgman against one edge).  Returns the empty polygon when
/// the intersection has area <= kEpsArea.
inline ConvexPolygon clip(const ConvexPolygon& poly, const HalfPlane& hp) {
  const std::size_t n = poly.size();
  if (n < 3) return ConvexPolygon::empty();
  std::vector<Point> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % n];
    const double fp = hp.signed_eval(p);
    const double fq = hp.signed_eval(q);
    // Tolerant classification keeps clipping idempotent: vertices produced by
    // an earlier clip sit on the line to rounding error and must stay put.
    if (fp <= kEpsGeom) out.push_back(p);
    if ((fp > kEpsGeom) != (fq > kEpsGeom)) {
      const double t = std::clamp(fp / (fp - fq), 0.0, 1.0);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  ConvexPolygon result(std::move(out));
  if (area(result) <= kEpsArea) return ConvexPolygon::empty();
  return result;
}

/// Fan triangulation from vertex 0: k-2 vertex triples.
inline std::vector<std::array<Point, 3>> triangulate(const ConvexPolygon& poly) {
  if (poly.size() < 3)
    throw std::domain_error("triangulate: degenerate region");
  std::vector<std::array<Point, 3>> tris;
  tris.reserve(poly.size() - 2);
  for (std::size_t i = 1; i + 1 < poly.size(); ++i)
    tris.push_back({poly[0], poly[i], poly[i + 1]});
  return tris;
}

/// Nearest point of the polygon (boundary or interior) to p.
inline Point closest_point(const ConvexPolygon& poly, const Point& p) {
  if (poly.contains(p)) return p;
  const std::size_t n = poly.size();
  double best = std::numeric_limits<double>::infinity();
  Point best_pt = p;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    const Point ab = b - a;
    double t = dot(p - a, ab) / dot(ab, ab);
    t = std::clamp(t, 0.0, 1.0);
    const Point q = a + t * ab;
    const double d = dist_sq(p, q);
    if (d < best) {
      best = d;
      best_pt = q;
    }
  }
  return best_pt;
}

}  // namespace triquant
