#pragma once

// Triangular-lattice quantizer construction for triangular point counts
// n = N(N+1)/2, with its closed-form error and the resulting upper bound
// on the optimal quantization error.

#include <array>
#include <cmath>
#include <stdexcept>

#include "triquant/voronoi.hpp"

namespace triquant {

// (N, L, a, d) with L = (N-1)d + 2*sqrt(3)*a.
struct LatticeParams {
  int N;      // rows, >= 2
  double L;   // domain side length
  double a;   // edge margin
  double d;   // lattice spacing, derived

  LatticeParams(int rows, double side, double margin)
      : N(rows), L(side), a(margin) {
    if (rows < 2) throw std::invalid_argument("LatticeParams: N < 2");
    if (!(side > 0) || !(margin > 0))
      throw std::invalid_argument("LatticeParams: non-positive L or a");
    d = (L - 2.0 * std::sqrt(3.0) * a) / (N - 1);
    if (!(d > 0)) throw std::invalid_argument("LatticeParams: margin too large");
  }

  static LatticeParams with_optimal_margin(int rows, double side = 1.0) {
    return LatticeParams(rows, side, optimal_margin(rows, side));
  }

  /// Leading-order optimal margin sqrt(7)*L/(6N).
  static double optimal_margin(int rows, double side = 1.0) {
    if (rows < 2) throw std::invalid_argument("optimal_margin: N < 2");
    return std::sqrt(7.0) * side / (6.0 * rows);
  }

  int point_count() const { return N * (N + 1) / 2; }
};

inline double a_opt(int N, double L = 1.0) {
  return LatticeParams::optimal_margin(N, L);
}

// Error kernels, normalized by the domain area L^2*sqrt(3)/4: integrals of
// (x^2+y^2)/Area over a pi/6 right triangle of leg r, a pi/3 right triangle
// of leg r, and an l-by-w rectangle, each with a corner at the quantizer.

inline double kernel_pi6(double r, double L = 1.0) {
  return 10.0 * r * r * r * r / (27.0 * L * L);
}

inline double kernel_pi3(double r, double L = 1.0) {
  return 2.0 * r * r * r * r / (L * L);
}

inline double kernel_rect(double l, double w, double L = 1.0) {
  return 4.0 * l * w * (l * l + w * w) / (3.0 * std::sqrt(3.0) * L * L);
}

/// Per-point error contributions (center, edge, corner) of the construction.
inline std::array<double, 3> point_type_errors(const LatticeParams& p) {
  const double half = p.d / 2.0;
  const double center = 12.0 * kernel_pi6(half, p.L);
  const double edge = 6.0 * kernel_pi6(half, p.L) + 2.0 * kernel_rect(half, p.a, p.L);
  const double corner = 2.0 * kernel_pi6(half, p.L) +
                        2.0 * kernel_rect(half, p.a, p.L) +
                        2.0 * kernel_pi3(p.a, p.L);
  return {center, edge, corner};
}

/// Quantization error of the lattice configuration, as the type-weighted
/// kernel sum: (N-3)(N-2)/2 centers, 3(N-2) edge points, 3 corners.
inline double vn_of_lattice(const LatticeParams& p) {
  const auto [center, edge, corner] = point_type_errors(p);
  return 0.5 * (p.N - 3) * (p.N - 2) * center + 3.0 * (p.N - 2) * edge +
         3.0 * corner;
}

/// Closed-form upper bound on V_n for n = N(N+1)/2, N >= 3; equals
/// vn_of_lattice at the optimal margin.
inline double bound(int N) {
  if (N < 3) throw std::domain_error("bound: requires N >= 3");
  const double s21 = std::sqrt(21.0);
  const double Nd = N;
  const double num = 45.0 * Nd * Nd * Nd - 28.0 * s21 * Nd * Nd +
                     (301.0 - 28.0 * s21) * Nd - 98.0;
  const double den = 324.0 * Nd * Nd * Nd * (Nd - 1.0) * (Nd - 1.0);
  return num / den;
}

/// Leading asymptotic bound 5/(72n).
inline double asymptotic_bound(long n) {
  if (n < 1) throw std::domain_error("asymptotic_bound: n < 1");
  return 5.0 / (72.0 * static_cast<double>(n));
}

/// Conjectured general-domain asymptotic constant 5*sqrt(3)*A/(54n),
/// factored as (A/sqrt(3)) * 5/(18n) so that the equilateral-triangle area
/// sqrt(3)/4 cancels exactly and the result equals 5/(72n) bit for bit.
inline double general_domain_asymptote(double domain_area, long n) {
  if (n < 1) throw std::domain_error("general_domain_asymptote: n < 1");
  return domain_area / std::sqrt(3.0) * 5.0 / (18.0 * static_cast<double>(n));
}

/// The N(N+1)/2-point triangular lattice aligned with the unit triangle,
/// inset by the margin a.  Rows run parallel to the bottom edge; row j from
/// the bottom holds N-j points.
inline Configuration build_lattice_config(const LatticeParams& p) {
  const double s3 = std::sqrt(3.0);
  // Boundary points sit at distance a from the nearest edge, so the lattice
  // spans the inner triangle of side (N-1)d obtained by shrinking about the
  // incenter.
  const double scale = (p.N - 1) * p.d / p.L;
  const Point incenter{p.L / 2.0, p.L * s3 / 6.0};
  const Point base{incenter.x + scale * (0.0 - incenter.x),
                   incenter.y + scale * (0.0 - incenter.y)};
  Configuration cfg;
  cfg.points.reserve(p.point_count());
  for (int row = 0; row < p.N; ++row)
    for (int col = 0; col < p.N - row; ++col)
      cfg.points.push_back({base.x + p.d * (col + 0.5 * row),
                            base.y + p.d * row * s3 / 2.0});
  return cfg;
}

}  // namespace triquant
