#include <doctest.h>

#include "test_support.hpp"
#include "triquant/geometry.hpp"

using namespace triquant;

namespace {

ConvexPolygon unit_triangle_poly() {
  return ConvexPolygon({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
}

ConvexPolygon unit_square() {
  return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

bool vertex_sets_equal(const ConvexPolygon& a, const ConvexPolygon& b,
                       double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (const Point& p : a.vertices()) {
    bool found = false;
    for (const Point& q : b.vertices())
      if (dist_sq(p, q) < tol * tol) found = true;
    if (!found) return false;
  }
  return true;
}

bool is_ccw_convex(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point e1 = poly[(i + 1) % n] - poly[i];
    const Point e2 = poly[(i + 2) % n] - poly[(i + 1) % n];
    if (cross(e1, e2) < -kEpsGeom) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("area of reference shapes") {
  CHECK(area(unit_triangle_poly()) == doctest::Approx(std::sqrt(3.0) / 4).epsilon(1e-14));
  CHECK(area(unit_square()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(area(ConvexPolygon({{0, 0}, {1, 0}})) == 0.0);
  CHECK(area(ConvexPolygon::empty()) == 0.0);
}

TEST_CASE("centroid of reference shapes") {
  const Point c = centroid(unit_triangle_poly());
  CHECK(c.x == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(c.y == doctest::Approx(std::sqrt(3.0) / 6).epsilon(1e-14));
  const Point s = centroid(unit_square());
  CHECK(s.x == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s.y == doctest::Approx(0.5).epsilon(1e-14));
  const Point t = centroid(ConvexPolygon({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(t.x == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(t.y == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK_THROWS_AS(centroid(ConvexPolygon::empty()), std::domain_error);
}

TEST_CASE("dist_sq") {
  CHECK(dist_sq({0, 0}, {1, 0}) == 1.0);
  CHECK(dist_sq({0.5, std::sqrt(3.0) / 6}, {0, 0}) ==
        doctest::Approx(1.0 / 3).epsilon(1e-14));
  const Point p{0.3, -0.7};
  CHECK(dist_sq(p, p) == 0.0);
}

TEST_CASE("point rejects non-finite coordinates") {
  CHECK_THROWS_AS(Point(std::nan(""), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Point(0.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("clip basics") {
  // x <= 1/2 through the unit triangle: left half, a triangle.
  const auto left = clip(unit_triangle_poly(), HalfPlane(1, 0, 0.5));
  CHECK(area(left) == doctest::Approx(std::sqrt(3.0) / 8).epsilon(1e-12));

  CHECK(vertex_sets_equal(clip(unit_square(), HalfPlane(1, 0, 2.0)), unit_square()));
  CHECK(clip(unit_square(), HalfPlane(1, 0, -1.0)).is_empty());
}

TEST_CASE("clip is idempotent") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto poly = tq_test::random_convex_polygon(rng);
    const Point a = tq_test::random_point(rng, 0.0, 1.0);
    const Point b = tq_test::random_point(rng, 0.0, 1.0);
    if (dist_sq(a, b) < 1e-6) continue;
    const HalfPlane hp = HalfPlane::bisector(a, b);
    const auto once = clip(poly, hp);
    const auto twice = clip(once, hp);
    CHECK(vertex_sets_equal(once, twice, 1e-9));
  }
}

TEST_CASE("complementary half planes partition the area") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto poly = tq_test::random_convex_polygon(rng);
    const Point a = tq_test::random_point(rng);
    const Point b = tq_test::random_point(rng);
    if (dist_sq(a, b) < 1e-6) continue;
    const HalfPlane hp = HalfPlane::bisector(a, b);
    const double sum = area(clip(poly, hp)) + area(clip(poly, hp.complement()));
    CHECK(sum == doctest::Approx(area(poly)).epsilon(1e-10));
  }
}

TEST_CASE("centroid is the area-weighted mean of triangulation centroids") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto poly = tq_test::random_convex_polygon(rng);
    double ax = 0, ay = 0, at = 0;
    for (const auto& tri : triangulate(poly)) {
      const double A =
          0.5 * std::abs(cross(tri[1] - tri[0], tri[2] - tri[0]));
      ax += A * (tri[0].x + tri[1].x + tri[2].x) / 3.0;
      ay += A * (tri[0].y + tri[1].y + tri[2].y) / 3.0;
      at += A;
    }
    const Point c = centroid(poly);
    CHECK(c.x == doctest::Approx(ax / at).epsilon(1e-12));
    CHECK(c.y == doctest::Approx(ay / at).epsilon(1e-12));
    CHECK(at == doctest::Approx(area(poly)).epsilon(1e-12));
  }
}

TEST_CASE("triangulate counts and areas") {
  CHECK(triangulate(unit_triangle_poly()).size() == 1);
  const auto square_tris = triangulate(unit_square());
  CHECK(square_tris.size() == 2);
  // Regular hexagon of unit side: 4 fan triangles summing to 3*sqrt(3)/2.
  std::vector<Point> hex;
  for (int k = 0; k < 6; ++k) {
    const double ang = k * std::acos(-1.0) / 3.0;
    hex.push_back({std::cos(ang), std::sin(ang)});
  }
  const ConvexPolygon hexagon(hex);
  const auto tris = triangulate(hexagon);
  CHECK(tris.size() == 4);
  double total = 0;
  for (const auto& t : tris)
    total += 0.5 * std::abs(cross(t[1] - t[0], t[2] - t[0]));
  CHECK(total == doctest::Approx(3 * std::sqrt(3.0) / 2).epsilon(1e-12));
  CHECK(total == doctest::Approx(area(hexagon)).epsilon(1e-12));
  CHECK_THROWS_AS(triangulate(ConvexPolygon::empty()), std::domain_error);
}

TEST_CASE("CW input is re-oriented, CCW preserved after clipping") {
  const ConvexPolygon cw(std::vector<Point>{{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  CHECK(is_ccw_convex(cw));
  CHECK(area(cw) == doctest::Approx(1.0).epsilon(1e-14));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10'000; ++trial) {
    auto poly = tq_test::random_convex_polygon(rng, 8);
    const Point a = tq_test::random_point(rng, 0.0, 1.0);
    const Point b = tq_test::random_point(rng, 0.0, 1.0);
    if (dist_sq(a, b) < 1e-6) continue;
    poly = clip(poly, HalfPlane::bisector(a, b));
    CHECK(area(poly) >= 0.0);
    if (!poly.is_empty()) CHECK(is_ccw_convex(poly));
  }
}

TEST_CASE("closest_point projects exterior points onto the boundary") {
  const auto tri = unit_triangle_poly();
  CHECK(dist_sq(closest_point(tri, {0.5, 0.2}), {0.5, 0.2}) == 0.0);
  const Point p = closest_point(tri, {0.5, -1.0});
  CHECK(p.x == doctest::Approx(0.5));
  CHECK(p.y == doctest::Approx(0.0));
}
