#pragma once

// Exact small-n optima on the unit equilateral triangle: closed forms for
// n = 1, 2, 3 and the four-parameter residual system for n = 4 together with
// its damped-Newton solver.

#include <array>
#include <cmath>
#include <utility>

#include "triquant/voronoi.hpp"

namespace triquant {

inline bool is_unit_triangle(const Domain& domain, double tol = 1e-9) {
  if (domain.boundary.size() != 3) return false;
  const double h = std::sqrt(3.0) / 2.0;
  const Point ref[3] = {{0.0, 0.0}, {1.0, 0.0}, {0.5, h}};
  // Vertex loop may start anywhere; orientation is canonical CCW.
  for (int shift = 0; shift < 3; ++shift) {
    bool ok = true;
    for (int i = 0; i < 3; ++i)
      if (dist_sq(domain.boundary[(i + shift) % 3], ref[i]) > tol * tol) ok = false;
    if (ok) return true;
  }
  return false;
}

/// Rotate p about c by angle (radians).
inline Point rotate_about(const Point& p, const Point& c, double angle) {
  const double ca = std::cos(angle), sa = std::sin(angle);
  const Point d = p - c;
  return {c.x + ca * d.x - sa * d.y, c.y + sa * d.x + ca * d.y};
}

/// The 1-mean: the domain centroid, with error equal to the variance.
inline std::pair<Configuration, double> optimal_1(const Domain& domain) {
  return {Configuration({domain_mean(domain)}), domain_variance(domain)};
}

/// The two polynomial residuals of the 2-means stationarity system in the
/// scalars (alpha, beta) with c = alpha*a, d = beta*b.
inline std::pair<double, double> two_means_residuals(double a, double b) {
  const double r1 = 4 * a * a * a * b + a * a * b * b - 6 * a * a * b -
                    5 * a * a - 2 * a * b * b * b + 3 * a * b * b - 2 * a * b +
                    9 * a + b * b - 3;
  const double r2 = 4 * a * b * b * b + a * a * b * b - 6 * a * b * b -
                    5 * b * b - 2 * a * a * a * b + 3 * a * a * b - 2 * a * b +
                    9 * b + a * a - 3;
  return {r1, r2};
}

/// The three optimal 2-means configurations (one per median).  The first is
/// the canonical one on the median through the origin vertex; the others are
/// its +-120 degree rotations about the domain centroid.
inline std::vector<std::pair<Configuration, double>> optimal_2(const Domain& domain) {
  if (!is_unit_triangle(domain))
    throw std::invalid_argument("optimal_2: unsupported domain");
  const double gi = (std::sqrt(5.0) - 1.0) / 2.0;  // 1/golden ratio
  const Point a{1.0, 0.0};
  const Point b{0.5, std::sqrt(3.0) / 2.0};
  const Point p = (gi * a + gi * b) * (1.0 / 3.0);
  const double ab2 = gi * gi;  // alpha*beta
  const Point q = (a + b - ab2 * (gi * a + gi * b)) * (1.0 / (3.0 * (1.0 - ab2)));
  const Point c = domain_mean(domain);
  const double third = 2.0 * std::acos(-1.0) / 3.0;
  std::vector<std::pair<Configuration, double>> out;
  for (int k = 0; k < 3; ++k) {
    const double ang = k == 0 ? 0.0 : (k == 1 ? third : -third);
    Configuration cfg({rotate_about(p, c, ang), rotate_about(q, c, ang)});
    out.emplace_back(std::move(cfg), 0.0);
    out.back().second = partition(domain, out.back().first).total_error;
  }
  return out;
}

/// The two polynomial residuals of the 3-means system (BC = BG = alpha,
/// BM = sqrt(3)/2 * beta).
inline std::pair<double, double> three_means_residuals(double a, double b) {
  const double a2 = a * a, a3 = a2 * a, a4 = a3 * a, b2 = b * b, b3 = b2 * b;
  const double r1 = 5 * a4 * b2 + 6 * a3 * b + a2 * (6 * b2 - 28 * b - 15) -
                    6 * a * (b3 - 2 * b2 + 2 * b - 7) + 3 * b2 - 13;
  const double r2 = -a4 * b2 - 6 * a3 * b + a2 * (6 * b2 + 14 * b + 3) +
                    12 * a * b * (b2 - 2 * b - 1) - 15 * b2 + 36 * b - 13;
  return {r1, r2};
}

/// The unique optimal 3-means set and its error 11/432.
inline std::pair<Configuration, double> optimal_3(const Domain& domain) {
  if (!is_unit_triangle(domain))
    throw std::invalid_argument("optimal_3: unsupported domain");
  const double s3 = std::sqrt(3.0);
  Configuration cfg({{7.0 / 24.0, 7.0 / (24.0 * s3)},
                     {17.0 / 24.0, 7.0 / (24.0 * s3)},
                     {0.5, 11.0 / (12.0 * s3)}});
  return {cfg, 11.0 / 432.0};
}

// The four constants of the 4-means construction: BC = BG = alpha,
// BM = sqrt(3)/2 * beta, x1(D) = gamma, ON1 = AN2 = delta.
struct FourMeansParams {
  double alpha, beta, gamma, delta;
};

namespace detail {

struct FourMeansGeometry {
  Point p, q, r, s;             // candidate quantizers
  Point c, d, f, g, n1, n2, m;  // construction points
  double ar1, ar2, ar4, ar5, ar6, ar7;
};

// Areas and centroids of the 4-means construction, assembled from the
// explicit area formulas (Ar3 = Ar1, Ar8 = Ar5, Ar9 = Ar4 by symmetry).
inline FourMeansGeometry four_means_geometry(const FourMeansParams& prm) {
  const double s3 = std::sqrt(3.0);
  const double al = prm.alpha, be = prm.beta, ga = prm.gamma, de = prm.delta;
  const Point a{1.0, 0.0};
  const Point b{0.5, s3 / 2.0};
  const Point n{0.5, 0.0};

  FourMeansGeometry geo;
  geo.c = (1.0 - al) * b;
  geo.d = {ga, s3 / 2.0 * (1.0 - be)};
  geo.g = al * a + (1.0 - al) * b;
  geo.m = (1.0 - be) * b + be * n;
  geo.n1 = {de, 0.0};
  geo.n2 = {1.0 - de, 0.0};
  geo.f = {1.0 - ga, s3 / 2.0 * (1.0 - be)};

  geo.ar1 = s3 * (al + 2 * ga - 1) * (be + 2 * ga - 1) / 8.0 -
            s3 * be * ga / 4.0 - s3 * be * ga / (2.0 * (1 - 2 * ga)) +
            s3 * be / (4.0 * (1 - 2 * ga)) - s3 * be / 8.0 -
            s3 * ga * ga / 2.0 + s3 * ga / 2.0 - s3 / 8.0;
  geo.ar2 = s3 * be * (1 - 2 * ga) / 4.0;
  geo.ar4 = s3 * (al - 1) * (al - 1) * (be + 2 * ga - 1) / (16.0 * ga) -
            s3 * (al - 1) * (al + 2 * ga - 1) * (be + 2 * ga - 1) / (16.0 * ga);
  geo.ar5 = s3 * (1 - be) * de / 4.0;
  geo.ar6 = s3 * (1 - be) * (1 - 2 * de) / 4.0;
  geo.ar7 = s3 * (1 - be) * (1 - 2 * ga) / 4.0;
  if (!(geo.ar1 > 0) || !(geo.ar2 > 0) || !(geo.ar4 > 0) || !(geo.ar5 > 0) ||
      !(geo.ar6 > 0) || !(geo.ar7 > 0))
    throw std::domain_error("four_means: inadmissible parameters");

  const double ar3 = geo.ar1, ar8 = geo.ar5, ar9 = geo.ar4;
  const Point& c = geo.c;
  const Point& d = geo.d;
  const Point& f = geo.f;
  const Point& g = geo.g;
  const Point& n1 = geo.n1;
  const Point& n2 = geo.n2;
  geo.p = (geo.ar1 * (b + c + d) + geo.ar2 * (b + d + f) + ar3 * (b + f + g)) *
          (1.0 / (3.0 * (geo.ar1 + geo.ar2 + ar3)));
  geo.q = (geo.ar7 * (d + f + n2) + geo.ar6 * (d + n1 + n2)) *
          (1.0 / (3.0 * (geo.ar6 + geo.ar7)));
  // Triangle OCD has a vertex at the origin, hence the two-term centroid sum.
  geo.r = (geo.ar4 * (c + d) + geo.ar5 * (d + n1)) *
          (1.0 / (3.0 * (geo.ar4 + geo.ar5)));
  geo.s = (ar9 * (a + f + g) + ar8 * (a + f + n2)) *
          (1.0 / (3.0 * (ar8 + ar9)));
  return geo;
}

}  // namespace detail

/// The four equal-distance residuals Q1..Q4 whose common zero determines the
/// optimal 4-means parameters.  Throws when an area goes non-positive.
inline std::array<double, 4> four_means_residuals(const FourMeansParams& prm) {
  const auto geo = detail::four_means_geometry(prm);
  return {dist_sq(geo.p, geo.c) - dist_sq(geo.c, geo.r),
          dist_sq(geo.p, geo.d) - dist_sq(geo.d, geo.r),
          dist_sq(geo.q, geo.d) - dist_sq(geo.d, geo.r),
          dist_sq(geo.q, geo.n1) - dist_sq(geo.n1, geo.r)};
}

/// Quantizer points for given parameters, with the median symmetry enforced
/// exactly (p and q at x = 1/2, s the mirror image of r).
inline Configuration four_means_points(const FourMeansParams& prm) {
  const auto geo = detail::four_means_geometry(prm);
  const Point p{0.5, geo.p.y};
  const Point q{0.5, geo.q.y};
  const Point r = geo.r;
  const Point s{1.0 - r.x, r.y};
  return Configuration({p, q, r, s});
}

namespace detail {

inline double four_means_merit(const FourMeansParams& prm) {
  try {
    const auto res = four_means_residuals(prm);
    return res[0] * res[0] + res[1] * res[1] + res[2] * res[2] + res[3] * res[3];
  } catch (const std::domain_error&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace detail

/// Coarse 21^4 scan over (0,1)^4 for the smallest residual norm; the basin
/// found here seeds the Newton iteration so the solver does not depend on
/// knowing the answer in advance.
inline FourMeansParams four_means_grid_scan(int per_axis = 21) {
  FourMeansParams best{0.5, 0.5, 0.25, 0.25};
  double best_merit = std::numeric_limits<double>::infinity();
  for (int ia = 1; ia <= per_axis; ++ia)
    for (int ib = 1; ib <= per_axis; ++ib)
      for (int ic = 1; ic <= per_axis; ++ic)
        for (int id = 1; id <= per_axis; ++id) {
          const double step = 1.0 / (per_axis + 1);
          const FourMeansParams prm{ia * step, ib * step, ic * step, id * step};
          const double m = detail::four_means_merit(prm);
          if (m < best_merit) {
            best_merit = m;
            best = prm;
          }
        }
  return best;
}

/// Damped Newton on Q1..Q4 with a finite-difference Jacobian.
/// Residual tolerance 1e-12, step tolerance 1e-14, at most 200 iterations.
inline FourMeansParams solve_four_means(const FourMeansParams& start,
                                        double res_tol = 1e-12,
                                        double step_tol = 1e-14,
                                        int max_iter = 200) {
  std::array<double, 4> x{start.alpha, start.beta, start.gamma, start.delta};
  auto residual = [](const std::array<double, 4>& v) {
    return four_means_residuals({v[0], v[1], v[2], v[3]});
  };
  auto norm_inf = [](const std::array<double, 4>& v) {
    double m = 0.0;
    for (double t : v) m = std::max(m, std::abs(t));
    return m;
  };
  std::array<double, 4> r = residual(x);
  for (int iter = 0; iter < max_iter; ++iter) {
    if (norm_inf(r) < res_tol) return {x[0], x[1], x[2], x[3]};
    // Finite-difference Jacobian, column by column.
    double jac[4][4];
    for (int j = 0; j < 4; ++j) {
      const double h = 1e-7 * std::max(1.0, std::abs(x[j]));
      auto xp = x;
      xp[j] += h;
      const auto rp = residual(xp);
      for (int i = 0; i < 4; ++i) jac[i][j] = (rp[i] - r[i]) / h;
    }
    // Solve jac * dx = -r by Gaussian elimination with partial pivoting.
    std::array<double, 4> rhs{-r[0], -r[1], -r[2], -r[3]};
    int perm[4] = {0, 1, 2, 3};
    for (int k = 0; k < 4; ++k) {
      int piv = k;
      for (int i = k + 1; i < 4; ++i)
        if (std::abs(jac[perm[i]][k]) > std::abs(jac[perm[piv]][k])) piv = i;
      std::swap(perm[k], perm[piv]);
      const double diag = jac[perm[k]][k];
      if (std::abs(diag) < 1e-300)
        throw std::runtime_error("solve_four_means: singular Jacobian");
      for (int i = k + 1; i < 4; ++i) {
        const double fac = jac[perm[i]][k] / diag;
        for (int j = k; j < 4; ++j) jac[perm[i]][j] -= fac * jac[perm[k]][j];
        rhs[perm[i]] -= fac * rhs[perm[k]];
      }
    }
    std::array<double, 4> dx{};
    for (int k = 3; k >= 0; --k) {
      double s = rhs[perm[k]];
      for (int j = k + 1; j < 4; ++j) s -= jac[perm[k]][j] * dx[j];
      dx[k] = s / jac[perm[k]][k];
    }
    // Backtracking line search on the residual norm.
    const double base = norm_inf(r);
    double lambda = 1.0;
    bool stepped = false;
    for (int bt = 0; bt < 40 && !stepped; ++bt, lambda *= 0.5) {
      std::array<double, 4> xn;
      for (int j = 0; j < 4; ++j) xn[j] = x[j] + lambda * dx[j];
      try {
        const auto rn = residual(xn);
        if (norm_inf(rn) < base) {
          x = xn;
          r = rn;
          stepped = true;
        }
      } catch (const std::domain_error&) {
        // inadmissible trial point, shorten the step
      }
    }
    if (!stepped || lambda * norm_inf(dx) < step_tol) {
      if (norm_inf(r) < res_tol) return {x[0], x[1], x[2], x[3]};
      if (!stepped)
        throw std::runtime_error("solve_four_means: no acceptable step");
    }
  }
  if (norm_inf(residual(x)) < res_tol) return {x[0], x[1], x[2], x[3]};
  throw std::runtime_error("solve_four_means: did not converge");
}

/// The optimal 4-means set, solved from the coarse grid scan, and its error
/// evaluated through the Voronoi partition.
inline std::pair<Configuration, double> optimal_4(const Domain& domain,
                                                  bool from_grid_scan = true) {
  if (!is_unit_triangle(domain))
    throw std::invalid_argument("optimal_4: unsupported domain");
  const FourMeansParams start =
      from_grid_scan ? four_means_grid_scan() : FourMeansParams{0.5, 0.57, 0.35, 0.38};
  const FourMeansParams sol = solve_four_means(start);
  Configuration cfg = four_means_points(sol);
  const double err = partition(domain, cfg).total_error;
  return {std::move(cfg), err};
}

}  // namespace triquant
