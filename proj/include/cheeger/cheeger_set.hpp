#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cheeger/distance_field.hpp"
#include "cheeger/geometry.hpp"

namespace cheeger {

/// Grid form of E: node mask plus sub-cell boundary loops.
struct GridCheegerSet {
  Point2 origin;
  double cell = 0.0;
  int nx = 0;
  int ny = 0;
  std::vector<std::uint8_t> mask;
  std::vector<std::vector<Point2>> boundary;
};

struct CheegerSetGeometry {
  std::variant<GridCheegerSet, ArcPolygon> representation;
  double area = 0.0;
  double perimeter = 0.0;
  double r = 0.0;
};

/// Minkowski sum of a convex retract (ccw vertices) with the disk of radius r:
/// edges pushed out by r joined by vertex arcs. One vertex gives a circle, two
/// give a stadium.
ArcPolygon dilate_convex(std::span<const Point2> retract, double r);

/// dilate_convex packaged with its area and perimeter.
CheegerSetGeometry cheeger_set_convex(std::span<const Point2> retract, double r);

/// E = {x : dist(x, Omega^r) <= r} on the grid of f, measured by marching
/// squares on a second exact distance field to the retract contour.
/// Throws EmptyRetract.
CheegerSetGeometry dilate_grid(const DistanceField& f, double r);

/// Closed rings drawn as the retract layer.
using RetractShape = std::vector<std::vector<Point2>>;

/// Layered SVG 1.1 (layers `domain`, `retract`, `cheeger-set`, and a legend),
/// coordinates fixed at 6 decimals.
std::string svg_document(const JordanPolygon& domain, const RetractShape& retract, const CheegerSetGeometry& set,
                         double h);

/// Writes svg_document to path. Throws IoError naming the path.
void render_svg(const JordanPolygon& domain, const RetractShape& retract, const CheegerSetGeometry& set, double h,
                const std::filesystem::path& path);

}  // namespace cheeger
