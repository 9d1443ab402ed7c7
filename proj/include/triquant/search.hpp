#pragma once

// Numerical optimizers: Lloyd iteration and random-shift annealing with
// multistart.  All runs are deterministic for a given seed.

#include <cstdint>
#include <functional>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "triquant/lattice.hpp"
#include "triquant/voronoi.hpp"

namespace triquant {

struct SearchSchedule {
  double initial_amplitude = 0.25;  // fraction of the domain diameter
  double decay = 0.9;
  int stall_threshold = 200;        // non-improving proposals before decay
  double min_amplitude = 1e-7;
  long max_proposals = 2'000'000;
  std::uint64_t rng_seed = 1;

  void validate() const {
    if (initial_amplitude <= 0 || decay <= 0 || decay >= 1 ||
        stall_threshold <= 0 || min_amplitude <= 0 || max_proposals <= 0)
      throw std::invalid_argument("SearchSchedule: invalid parameters");
  }
};

struct SearchResult {
  Configuration config;
  double error = 0.0;
  double residual = 0.0;
  long proposals_used = 0;
  std::vector<std::pair<long, double>> trace;  // accepted (proposal, error)
};

/// One Lloyd step: move every point to the centroid of its Voronoi cell.
/// Throws if any cell is empty.
inline Configuration lloyd_step(const Domain& domain, const Configuration& config) {
  const Partition part = partition(domain, config);
  Configuration next;
  next.points.reserve(config.n());
  for (std::size_t i = 0; i < config.n(); ++i) {
    if (part.cells[i].is_empty())
      throw std::runtime_error("lloyd_step: empty Voronoi cell");
    next.points.push_back(centroid(part.cells[i]));
  }
  return next;
}

/// Iterate lloyd_step until the centroidal residual drops below tol or the
/// iteration cap is reached.
inline SearchResult lloyd_run(const Domain& domain, Configuration config,
                              double tol = 1e-10, int max_iter = 10000) {
  for (int it = 0; it < max_iter; ++it) {
    if (optimality_residual(domain, config) < tol) break;
    config = lloyd_step(domain, config);
  }
  SearchResult res;
  res.error = partition(domain, config).total_error;
  res.residual = optimality_residual(domain, config);
  res.config = std::move(config);
  return res;
}

namespace detail {

inline Point sample_in_polygon(const ConvexPolygon& poly, std::mt19937_64& rng) {
  // Fan triangulation, area-weighted triangle choice, then exact uniform
  // sampling inside the triangle.
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> cum;
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    total += 0.5 * std::abs(cross(poly[i] - poly[0], poly[i + 1] - poly[0]));
    cum.push_back(total);
  }
  const double pick = uni(rng) * total;
  std::size_t k = 0;
  while (k + 1 < cum.size() && cum[k] < pick) ++k;
  const Point& v0 = poly[0];
  const Point& v1 = poly[k + 1];
  const Point& v2 = poly[k + 2];
  const double su = std::sqrt(uni(rng));
  const double v = uni(rng);
  return (1.0 - su) * v0 + su * (1.0 - v) * v1 + su * v * v2;
}

inline Configuration random_config(const Domain& domain, int n,
                                   std::mt19937_64& rng) {
  Configuration cfg;
  cfg.points.reserve(n);
  while (static_cast<int>(cfg.points.size()) < n) {
    Point p = sample_in_polygon(domain.boundary, rng);
    bool distinct = true;
    for (const Point& q : cfg.points)
      if (dist_sq(p, q) <= kEpsGeom * kEpsGeom) distinct = false;
    if (distinct) cfg.points.push_back(p);
  }
  return cfg;
}

inline double safe_error(const Domain& domain, const Configuration& cfg) {
  if (!cfg.points_distinct()) return std::numeric_limits<double>::infinity();
  const Partition part = partition(domain, cfg);
  if (part.has_empty_cell()) return std::numeric_limits<double>::infinity();
  return part.total_error;
}

}  // namespace detail

/// Random-shift annealing: shift one uniformly chosen point by a uniform
/// vector in a disc of the current amplitude (clamped into the domain),
/// accept strict improvements only, decay the amplitude after a stall, and
/// polish the best configuration with Lloyd iteration.
inline SearchResult random_shift_search(const Domain& domain, int n,
                                        const SearchSchedule& schedule,
                                        bool keep_trace = false) {
  if (n < 1) throw std::invalid_argument("random_shift_search: n < 1");
  schedule.validate();
  std::mt19937_64 rng(schedule.rng_seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  Configuration best = detail::random_config(domain, n, rng);
  double best_error = detail::safe_error(domain, best);

  SearchResult res;
  double amplitude = schedule.initial_amplitude * domain.diameter();
  int stall = 0;
  long proposals = 0;
  const double two_pi = 2.0 * std::acos(-1.0);
  while (proposals < schedule.max_proposals &&
         amplitude >= schedule.min_amplitude) {
    ++proposals;
    const std::size_t idx =
        std::min<std::size_t>(static_cast<std::size_t>(uni(rng) * n), n - 1);
    const double radius = amplitude * std::sqrt(uni(rng));
    const double angle = two_pi * uni(rng);
    Configuration trial = best;
    Point moved = trial.points[idx] +
                  Point{radius * std::cos(angle), radius * std::sin(angle)};
    trial.points[idx] = closest_point(domain.boundary, moved);
    const double err = detail::safe_error(domain, trial);
    if (err < best_error) {
      best = std::move(trial);
      best_error = err;
      stall = 0;
      if (keep_trace) res.trace.emplace_back(proposals, err);
    } else if (++stall >= schedule.stall_threshold) {
      amplitude *= schedule.decay;
      stall = 0;
    }
  }
  SearchResult polished = lloyd_run(domain, std::move(best));
  polished.proposals_used = proposals;
  polished.trace = std::move(res.trace);
  return polished;
}

/// Best of `starts` independent runs (seeds rng_seed + k).  When n is a
/// triangular number, one extra run is seeded from the lattice construction.
inline SearchResult multistart(const Domain& domain, int n,
                               const SearchSchedule& schedule, int starts,
                               int max_threads = 0) {
  if (starts < 1) throw std::invalid_argument("multistart: starts < 1");
  schedule.validate();

  std::vector<std::function<SearchResult()>> jobs;
  for (int k = 0; k < starts; ++k) {
    SearchSchedule s = schedule;
    s.rng_seed = schedule.rng_seed + static_cast<std::uint64_t>(k);
    jobs.push_back([&domain, n, s] { return random_shift_search(domain, n, s); });
  }
  // Lattice-seeded run for triangular n (n = N(N+1)/2, N >= 2).
  const int N = static_cast<int>(std::floor(std::sqrt(2.0 * n)));
  if (N >= 2 && N * (N + 1) / 2 == n && is_unit_triangle(domain)) {
    jobs.push_back([&domain, N] {
      const LatticeParams params = LatticeParams::with_optimal_margin(N);
      return lloyd_run(domain, build_lattice_config(params));
    });
  }

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (max_threads > 0) hw = std::min<unsigned>(hw, max_threads);

  std::vector<SearchResult> results(jobs.size());
  std::size_t next = 0;
  std::mutex mtx;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mtx);
        if (next >= jobs.size()) return;
        i = next++;
      }
      results[i] = jobs[i]();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(hw, jobs.size()); ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Deterministic aggregation: min error, ties to the earliest job (lowest
  // seed, lattice run last).
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (results[i].error < results[best].error) best = i;
  return results[best];
}

}  // namespace triquant
