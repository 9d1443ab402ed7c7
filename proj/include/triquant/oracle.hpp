#pragma once

// Independent brute-force evaluators of the quantization error: a seeded
// Monte Carlo estimator and a deterministic midpoint-rule grid.  These are
// reference implementations kept deliberately separate from the closed-form
// moment path.

#include <cmath>
#include <cstdint>
#include <random>

#include "triquant/voronoi.hpp"

namespace triquant {

struct OracleEstimate {
  double value = 0.0;
  double std_error = 0.0;
  long samples = 0;
};

namespace detail {

inline double min_dist_sq(const Point& x, const Configuration& config) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point& p : config.points) best = std::min(best, dist_sq(x, p));
  return best;
}

}  // namespace detail

/// Monte Carlo estimate of the quantization error by exact uniform sampling
/// of the domain (square-root method per fan triangle, area-weighted).
inline OracleEstimate mc_quantization_error(const Domain& domain,
                                            const Configuration& config,
                                            long samples, std::uint64_t seed) {
  if (samples < 1000)
    throw std::invalid_argument("mc_quantization_error: samples < 1000");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  const ConvexPolygon& poly = domain.boundary;
  std::vector<double> cum;
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    total += 0.5 * std::abs(cross(poly[i] - poly[0], poly[i + 1] - poly[0]));
    cum.push_back(total);
  }

  double sum = 0.0, sum_sq = 0.0;
  for (long s = 0; s < samples; ++s) {
    const double pick = uni(rng) * total;
    std::size_t k = 0;
    while (k + 1 < cum.size() && cum[k] < pick) ++k;
    const double su = std::sqrt(uni(rng));
    const double v = uni(rng);
    const Point x = (1.0 - su) * poly[0] + su * (1.0 - v) * poly[k + 1] +
                    su * v * poly[k + 2];
    const double val = detail::min_dist_sq(x, config);
    sum += val;
    sum_sq += val * val;
  }
  OracleEstimate est;
  est.samples = samples;
  est.value = sum / samples;
  const double var = (sum_sq / samples - est.value * est.value) *
                     (static_cast<double>(samples) / (samples - 1));
  est.std_error = std::sqrt(std::max(0.0, var) / samples);
  return est;
}

/// Deterministic midpoint-rule estimate: each fan triangle of the domain is
/// subdivided into resolution^2 congruent sub-triangles and the integrand is
/// evaluated at their centroids.
inline double grid_quantization_error(const Domain& domain,
                                      const Configuration& config,
                                      int resolution) {
  if (resolution < 10)
    throw std::invalid_argument("grid_quantization_error: resolution < 10");
  const ConvexPolygon& poly = domain.boundary;
  double total = 0.0;
  for (std::size_t t = 1; t + 1 < poly.size(); ++t) {
    const Point v0 = poly[0];
    const Point e1 = poly[t] - v0;
    const Point e2 = poly[t + 1] - v0;
    const double tri_area = 0.5 * std::abs(cross(e1, e2));
    const double sub_area = tri_area / (resolution * static_cast<double>(resolution));
    double acc = 0.0;
    for (int i = 0; i < resolution; ++i) {
      for (int j = 0; j < resolution - i; ++j) {
        // upward sub-triangle
        double u = (i + 1.0 / 3.0) / resolution;
        double w = (j + 1.0 / 3.0) / resolution;
        acc += detail::min_dist_sq(v0 + u * e1 + w * e2, config);
        // downward sub-triangle
        if (j < resolution - i - 1) {
          u = (i + 2.0 / 3.0) / resolution;
          w = (j + 2.0 / 3.0) / resolution;
          acc += detail::min_dist_sq(v0 + u * e1 + w * e2, config);
        }
      }
    }
    total += acc * sub_area;
  }
  return total * domain.density;
}

}  // namespace triquant
