#pragma once

#include <span>
#include <vector>

#include "cheeger/geometry.hpp"

namespace cheeger {

/// Read-only view of node values on a uniform grid; node (i, j) sits at
/// origin + ((i + 0.5) * cell, (j + 0.5) * cell), values are row-major.
struct GridView {
  Point2 origin;
  double cell = 0.0;
  int nx = 0;
  int ny = 0;
  std::span<const double> values;

  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
  Point2 node(int i, int j) const { return {origin.x + (i + 0.5) * cell, origin.y + (j + 0.5) * cell}; }
};

struct LevelSetMeasure {
  double area = 0.0;            ///< area of {v > level} with linear cuts along dual edges
  double contour_length = 0.0;  ///< length of the marching-squares contour
};

/// Area and contour length of the superlevel set {v > level} over the dual
/// grid of nodes. Each dual cell contributes the polygon cut by linear
/// interpolation along its edges; saddles resolve as inside-connected.
LevelSetMeasure measure_superlevel(const GridView& grid, double level);

/// Closed contour loops of {v > level}, oriented with the set on the left.
std::vector<std::vector<Point2>> trace_contours(const GridView& grid, double level);

/// Contour segments of {v > level}, unchained.
std::vector<Segment> contour_segments(const GridView& grid, double level);

}  // namespace cheeger
