#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <vector>

#include "cheeger/geometry.hpp"

namespace cheeger {

/// Signed distance to a polygon boundary sampled at cell centers of a uniform
/// grid. Values are row-major: values[j * nx + i] is the center of column i,
/// row j, located at origin + ((i + 0.5) * cell, (j + 0.5) * cell).
struct DistanceField {
  Point2 origin;
  double cell = 0.0;
  int nx = 0;
  int ny = 0;
  int resolution = 0;
  std::vector<double> values;
  std::shared_ptr<const JordanPolygon> source;

  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
  Point2 center(int i, int j) const { return {origin.x + (i + 0.5) * cell, origin.y + (j + 0.5) * cell}; }
  double max_value() const;
};

/// Builds the field with cell = (longer bbox side) / resolution and a one-cell
/// pad on every side. Every value is the exact signed distance at its center.
/// Throws ResolutionTooSmall when resolution < 16.
DistanceField build_field(const JordanPolygon& p, int resolution);

/// Unsigned distance from every node of `layout` to the nearest of `segments`.
/// Used for distance fields of derived shapes such as retract contours.
std::vector<double> distance_on_grid(const DistanceField& layout, const std::vector<Segment>& segments);

/// Debug dump: 32-byte little-endian header {u32 nx, u32 ny, f64 cell,
/// f64 origin.x, f64 origin.y} followed by nx*ny f64 values. Throws IoError.
void write_field_dump(const DistanceField& f, const std::filesystem::path& path);
DistanceField read_field_dump(const std::filesystem::path& path);

}  // namespace cheeger
