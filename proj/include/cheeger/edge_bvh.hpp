#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cheeger/geometry.hpp"

namespace cheeger {

/// Bounding-volume hierarchy over line segments for exact nearest-edge distance.
class EdgeBvh {
 public:
  explicit EdgeBvh(std::vector<Segment> segments);

  /// Edges of a closed ring (vertex i to vertex i+1, wrapping).
  static EdgeBvh from_ring(std::span<const Point2> ring);

  /// Unsigned distance from q to the nearest segment. `upper` is a known upper
  /// bound used for pruning; the result is exact whenever it is below `upper`.
  double distance(Point2 q, double upper = std::numeric_limits<double>::infinity()) const;

  std::size_t size() const { return segments_.size(); }

 private:
  struct Node {
    BBox box;
    std::uint32_t left = 0;   // child index, or first segment for leaves
    std::uint32_t right = 0;  // child index, or segment count for leaves
    bool leaf = false;
  };

  std::uint32_t build(std::uint32_t begin, std::uint32_t end);

  std::vector<Segment> segments_;
  std::vector<Node> nodes_;
};

}  // namespace cheeger
