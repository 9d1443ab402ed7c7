#include <doctest.h>

#include "triquant/analytic.hpp"
#include "triquant/lattice.hpp"
#include "triquant/structure.hpp"

using namespace triquant;

TEST_CASE("conjecture2_prediction known cases") {
  const auto r10 = conjecture2_prediction(10);
  CHECK(r10.N == 4);
  CHECK(r10.J == 4);
  REQUIRE(r10.rows.size() == 4);
  for (int j = 0; j < 4; ++j) CHECK(r10.rows[j].second == j + 1);

  const auto r5 = conjecture2_prediction(5);
  CHECK(r5.N == 3);
  CHECK(r5.J == 2);
  CHECK(r5.rows[0].second == 1);
  CHECK(r5.rows[1].second == 2);
  CHECK(r5.rows[2].second == 2);

  const auto r8 = conjecture2_prediction(8);
  CHECK(r8.N == 4);
  CHECK(r8.J == 2);
  CHECK(r8.rows[0].second == 1);
  CHECK(r8.rows[1].second == 2);
  CHECK(r8.rows[2].second == 2);
  CHECK(r8.rows[3].second == 3);
}

TEST_CASE("prediction totals equal n") {
  for (long n = 1; n <= 10'000; ++n) {
    const auto pred = conjecture2_prediction(n);
    long total = 0;
    for (const auto& [lvl, count] : pred.rows) total += count;
    CHECK(total == n);
  }
}

TEST_CASE("triangular n predicts rows 1..N") {
  for (int N = 1; N <= 50; ++N) {
    const auto pred = conjecture2_prediction(N * (N + 1) / 2);
    REQUIRE(static_cast<int>(pred.rows.size()) == N);
    for (int j = 0; j < N; ++j) CHECK(pred.rows[j].second == j + 1);
  }
}

TEST_CASE("symmetry axes of the analytic optima") {
  const Domain tri = Domain::unit_triangle();
  // The 3-means set is invariant under all three medians.
  CHECK(all_symmetry_axes(optimal_3(tri).first).size() == 3);
  // The canonical 2-means set has exactly one axis (through the origin vertex).
  const auto axes2 = all_symmetry_axes(optimal_2(tri)[0].first);
  REQUIRE(axes2.size() == 1);
  // That axis passes through (0, 0): anchor + t*direction hits the origin.
  const auto& axis = axes2[0];
  const double t = -dot(axis.anchor, axis.direction);
  const Point on_axis = axis.anchor + t * axis.direction;
  CHECK(dist(on_axis, {0, 0}) < 1e-9);
}

TEST_CASE("reflection is involution-consistent") {
  const Domain tri = Domain::unit_triangle();
  const Configuration cfg = optimal_4(tri, false).first;
  const auto axis = detect_symmetry_axis(cfg);
  REQUIRE(axis.has_value());
  Configuration reflected = cfg;
  for (Point& p : reflected.points) {
    const Point d = p - axis->anchor;
    const double along = dot(d, axis->direction);
    const Point proj = axis->anchor + along * axis->direction;
    p = proj + (proj - p);
  }
  const auto axis2 = detect_symmetry_axis(reflected);
  REQUIRE(axis2.has_value());
  CHECK(std::abs(dot(axis->direction, axis2->direction)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rows of the analytic 3-means set") {
  const Domain tri = Domain::unit_triangle();
  const auto rows = row_decomposition(optimal_3(tri).first);
  REQUIRE(rows.rows.size() == 2);
  CHECK(rows.rows[0].second == 1);  // apex row
  CHECK(rows.rows[1].second == 2);
  CHECK(rows.matches_conjecture);
}

TEST_CASE("rows of the N=4 lattice configuration") {
  const Configuration cfg =
      build_lattice_config(LatticeParams::with_optimal_margin(4));
  const auto rows = row_decomposition(cfg);
  REQUIRE(rows.rows.size() == 4);
  for (int j = 0; j < 4; ++j) CHECK(rows.rows[j].second == j + 1);
  CHECK(rows.matches_conjecture);
}

TEST_CASE("asymmetric configurations yield no axis") {
  const Configuration skew({{0.1, 0.05}, {0.62, 0.31}, {0.43, 0.6}});
  CHECK(!detect_symmetry_axis(skew).has_value());
  // Row clustering still produces a verdict with a diagnostic on mismatch.
  const auto rows = row_decomposition(skew, 0.02);
  if (!rows.matches_conjecture) CHECK(!rows.diagnostic.empty());
}
