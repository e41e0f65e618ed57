#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace cheeger {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// Distance from q to the closed segment [a, b].
double segment_distance(Point2 q, Point2 a, Point2 b);

struct BBox {
  Point2 min;
  Point2 max;

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  double longer_side() const { return std::max(width(), height()); }
  bool contains(Point2 p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
  static BBox of(std::span<const Point2> pts);
};

/// Simple closed polygon, stored counterclockwise with the closing edge implicit.
///
/// Construction validates: at least three finite vertices, no zero-length
/// edges, nonzero area, and (unless the input is trusted) a simple boundary.
/// Clockwise input is reversed. Collinear consecutive vertices are allowed.
class JordanPolygon {
 public:
  enum class Validation {
    full,     ///< run the segment-pair simplicity test
    trusted,  ///< skip simplicity (generated polygons known to be simple)
  };

  explicit JordanPolygon(std::vector<Point2> vertices, Validation validation = Validation::full);

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  /// Vertex i modulo size().
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  const BBox& bbox() const { return bbox_; }

  JordanPolygon transformed(double scale, double rotation, Point2 translation) const;

 private:
  std::vector<Point2> vertices_;
  BBox bbox_;
};

double signed_area(std::span<const Point2> ring);
double polygon_area(const JordanPolygon& p);
double polygon_perimeter(const JordanPolygon& p);

/// Crossing-number point-in-polygon test (half-open edge rule).
bool point_in_polygon(Point2 q, std::span<const Point2> ring);

/// Positive inside, negative outside, zero on the boundary. Exact over all edges.
double signed_distance(Point2 q, const JordanPolygon& p);

/// True when every turn is a left turn or collinear.
bool is_convex(const JordanPolygon& p);

/// True when the ring has no self-intersections (adjacent edges may only share their vertex).
bool is_simple(std::span<const Point2> ring);

/// Intersection of the inward-offset half-planes {dist to edge line >= r} of a
/// convex polygon, as a ccw ring (empty when the region vanishes).
std::vector<Point2> offset_halfplane_intersection(const JordanPolygon& convex, double r);

struct InscribedDisk {
  Point2 center;
  double radius = 0.0;
};

/// Largest inscribed disk of a convex polygon via the half-plane linear program.
/// Throws NonConvexInput.
InscribedDisk chebyshev_center(const JordanPolygon& p);

// ---------------------------------------------------------------------------
// Boundaries with circular arcs

struct Segment {
  Point2 a;
  Point2 b;
};

/// Circular arc. `sweep` is the swept angle magnitude in (0, 2*pi]; `ccw`
/// gives the direction of travel from `start_angle`.
struct Arc {
  Point2 center;
  double radius = 0.0;
  double start_angle = 0.0;
  double sweep = 0.0;
  bool ccw = true;

  double end_angle() const { return ccw ? start_angle + sweep : start_angle - sweep; }
  Point2 start() const;
  Point2 end() const;
  double length() const { return radius * sweep; }
};

using BoundaryPiece = std::variant<Segment, Arc>;

Point2 piece_start(const BoundaryPiece& piece);
Point2 piece_end(const BoundaryPiece& piece);

/// Closed chain of segments and arcs.
class ArcPolygon {
 public:
  explicit ArcPolygon(std::vector<BoundaryPiece> pieces);

  std::span<const BoundaryPiece> pieces() const { return pieces_; }

  /// Enclosed area via Green's theorem (positive for counterclockwise chains).
  double area() const;
  double perimeter() const;
  /// Sum of arc sweeps, signed by orientation.
  double total_arc_sweep() const;
  BBox bbox() const;

 private:
  std::vector<BoundaryPiece> pieces_;
};

}  // namespace cheeger
