#pragma once

#include <optional>

#include "cheeger/distance_field.hpp"
#include "cheeger/geometry.hpp"
#include "cheeger/marching_squares.hpp"

namespace cheeger {

/// Grid estimate of the inner parallel set {dist >= r}.
struct RetractEstimate {
  double r = 0.0;
  double area = 0.0;
  /// 0.5 * cell * contour length: half a cell of normal slack along the cut.
  double area_error_bound = 0.0;
  int component_count = 0;
  int resolution = 0;
};

struct ExtrapolatedArea {
  double area = 0.0;
  double error_bound = 0.0;  ///< |A_2N - A_N|
};

GridView view_of(const DistanceField& f);

/// Area of {dist >= r} from full cells plus linear partial-cell cuts.
RetractEstimate retract_area(const DistanceField& f, double r);

/// Richardson extrapolation 2 A_2N - A_N over fields at N and 2N.
ExtrapolatedArea retract_area_extrapolated(const JordanPolygon& p, double r, int base_resolution);
ExtrapolatedArea retract_area_extrapolated(const DistanceField& coarse, const DistanceField& fine, double r);

/// Number of 8-connected components of nodes with value > r. Nodes exactly at
/// r are out, matching the strict superlevel set that retract_area measures.
int retract_components(const DistanceField& f, double r);

/// Exact inner parallel set of a convex polygon, or nullopt when it has no
/// interior. Throws NonConvexInput.
std::optional<JordanPolygon> inner_retract_convex(const JordanPolygon& p, double r);

/// Outer Minkowski content of the exact convex retract (its perimeter).
/// Throws EmptyRetract.
double minkowski_content(const JordanPolygon& convex, double r);

/// Finite-difference content (A(r - t) - A(r)) / t at t = 2 cell and 4 cell,
/// extrapolated linearly to t = 0. Throws EmptyRetract.
double minkowski_content(const DistanceField& f, double r);

/// Same, using Richardson-extrapolated areas from a coarse/fine field pair
/// (t measured in coarse cells).
double minkowski_content(const DistanceField& coarse, const DistanceField& fine, double r);

}  // namespace cheeger
