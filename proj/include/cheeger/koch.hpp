#pragma once

#include <array>
#include <optional>
#include <string>

#include "cheeger/geometry.hpp"
#include "cheeger/solver.hpp"

namespace cheeger {

inline constexpr int kKochMaxStep = 12;

/// K_1 is the equilateral triangle of side 3 centered at the origin with a
/// vertex on the positive y axis; K_{n+1} attaches an outward equilateral
/// triangle to the middle third of every edge of K_n.
/// Throws CapExceeded for n > 12 and DomainError for n < 1.
JordanPolygon koch_polygon(int n);

/// Area of K_n from the attachment recursion.
double koch_area(int n);

/// h(K_1) = (6 + 2 sqrt(pi sqrt 3)) / (3 sqrt 3).
double closed_form_k1();

struct K2ClosedForm {
  double r2 = 0.0;
  double h2 = 0.0;
  /// Hexagon-case value |K_2^r| - pi r^2 at r = 1/sqrt 3 (negative).
  double hexagon_case_at_inv_sqrt3 = 0.0;
};

K2ClosedForm closed_form_k2();

/// |K_2^r| - pi r^2 when K_2^r is a hexagon with six arcs (r in [1/sqrt 3, 1]).
double hexagon_case_value(double r);

/// |K_2^r| = (6 sqrt 3 - pi) r^2 - 12 r + 3 sqrt 3 for r in [1/2, 1/sqrt 3].
double k2_retract_area(double r);

/// Area of the curvilinear isosceles triangle with base beta and concave
/// sides of radius r. Throws DomainError unless 0 <= beta <= 2r.
double curvilinear_I(double r, double beta);

/// Position of x in the Cantor construction after `levels` iterations
/// (iteration k removes open middle thirds of length 3^-k).
struct CantorData {
  double x = 0.0;
  int levels = 0;
  double d = 0.0;     ///< distance from x to the construction
  double iota = 0.0;  ///< largest element of the construction <= x
  double beta = 0.0;  ///< length of the gap containing x, 0 if none
  double r = 0.0;     ///< sqrt(x^2 / 3 + d^2)
};

/// Throws DomainError unless x in [0, 1] and levels >= 0.
CantorData cantor_data(double x, int levels);

/// Number of generation-j attached triangles (middle-third gaps of length
/// 3^(2-j)) whose base lies in [x, 1]. Throws DomainError unless j >= 3.
long long count_c(double x, int j);

/// Partial curvilinear regions near the gap containing x, for Koch step n
/// (Cantor levels n - 2). Throw CaseMismatch when d = 0 or d is measured
/// from the other gap endpoint.
double area_A(double x, int n);
double area_B(double x, int n);

/// f_n(x) = |K_n^r| - pi r^2 with r = r(x), for x in [x_2, 1] and n >= 5.
double f_n(double x, int n);

/// |K_n^r| from the analytic formulas (n = 1 triangle, 2..4 the K_2 quadratic,
/// n >= 5 through the inverse of x -> r).
double koch_retract_area(double r, int n);

/// 2^(n-3) / (25 * 3^(3n-5)); bounds r_bar - r_n for n >= 4.
double tail_bound(int n);

/// Radius gap bound area_diff / (2 pi r) for nested domains.
double error_estimate_general(double area_diff, double r);

struct KochSolution {
  int n = 0;
  std::optional<double> x;
  double d = 0.0;
  double iota = 0.0;
  double beta = 0.0;
  double r = 0.0;
  double h = 0.0;
  double residual = 0.0;
  double tail_bound = 0.0;
  std::array<double, 2> h_interval{0.0, 0.0};  ///< [1/(r + tail), 1/r]
  std::string method;                          ///< "closed-form" or "analytic-root"
  int iterations = 0;
};

/// Throws CapExceeded for n > 12, DomainError for n < 1.
KochSolution solve_koch(int n);

/// Solver-style report for K_n from the analytic pipeline.
CheegerReport koch_report(int n);

}  // namespace cheeger
