#include <doctest.h>

#include "test_support.hpp"
#include "triquant/analytic.hpp"
#include "triquant/oracle.hpp"

using namespace triquant;

TEST_CASE("mc oracle at the known small-n optima") {
  const Domain tri = Domain::unit_triangle();

  const auto one = mc_quantization_error(tri, optimal_1(tri).first, 1'000'000, 1);
  CHECK(std::abs(one.value - 1.0 / 12) <= 4 * one.std_error);

  const auto two = mc_quantization_error(tri, optimal_2(tri)[0].first, 1'000'000, 2);
  CHECK(std::abs(two.value - 0.0532767) <= 4 * two.std_error);

  const auto three = mc_quantization_error(tri, optimal_3(tri).first, 1'000'000, 3);
  CHECK(std::abs(three.value - 11.0 / 432) <= 4 * three.std_error);

  CHECK_THROWS_AS(mc_quantization_error(tri, optimal_1(tri).first, 10, 1),
                  std::invalid_argument);
}

TEST_CASE("mc std_error is consistent across seeds") {
  const Domain tri = Domain::unit_triangle();
  const Configuration cfg = optimal_3(tri).first;
  std::vector<double> values;
  double reported = 0;
  for (int seed = 0; seed < 30; ++seed) {
    const auto est = mc_quantization_error(tri, cfg, 20'000, 100 + seed);
    values.push_back(est.value);
    reported = est.std_error;
  }
  double mean = 0;
  for (double v : values) mean += v;
  mean /= values.size();
  double var = 0;
  for (double v : values) var += (v - mean) * (v - mean);
  const double empirical = std::sqrt(var / (values.size() - 1));
  CHECK(empirical < 2 * reported);
  CHECK(empirical > reported / 2);
}

TEST_CASE("grid oracle converges on the one-point error") {
  const Domain tri = Domain::unit_triangle();
  const Configuration cfg = optimal_1(tri).first;
  CHECK(std::abs(grid_quantization_error(tri, cfg, 2000) - 1.0 / 12) < 1e-5);
  CHECK_THROWS_AS(grid_quantization_error(tri, cfg, 5), std::invalid_argument);
}

TEST_CASE("grid refinement improves the estimate") {
  const Domain tri = Domain::unit_triangle();
  const Configuration cfg = optimal_2(tri)[0].first;
  const double exact = partition(tri, cfg).total_error;
  double prev = std::abs(grid_quantization_error(tri, cfg, 100) - exact);
  for (int res : {200, 400, 800}) {
    const double err = std::abs(grid_quantization_error(tri, cfg, res) - exact);
    CHECK(err < prev * 1.05);
    prev = err;
  }
  CHECK(prev < 1e-5);
}

TEST_CASE("both oracles agree with the closed form on random configs") {
  const Domain tri = Domain::unit_triangle();
  std::mt19937_64 rng(61);
  int mc_hits = 0;
  const int trials = 40;
  for (int trial = 0; trial < trials; ++trial) {
    Configuration cfg;
    const int n = 2 + trial % 9;
    while (static_cast<int>(cfg.points.size()) < n) {
      cfg.points.push_back(tq_test::random_point(rng, 0.1, 0.7));
      if (!cfg.points_distinct(1e-6)) cfg.points.pop_back();
    }
    const double exact = partition(tri, cfg).total_error;
    const auto mc = mc_quantization_error(tri, cfg, 200'000, 500 + trial);
    if (std::abs(mc.value - exact) <= 4 * mc.std_error) ++mc_hits;
    CHECK(std::abs(grid_quantization_error(tri, cfg, 2000) - exact) < 1e-4);
  }
  CHECK(mc_hits >= trials - 1);  // 4 sigma misses are rare
}
