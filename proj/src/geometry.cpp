#include "cheeger/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {

int orientation(Point2 a, Point2 b, Point2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool on_segment(Point2 a, Point2 b, Point2 q) {
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= q.y &&
         q.y <= std::max(a.y, b.y);
}

bool segments_touch(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

// Clip a convex ring (ccw) against {p : dot(normal, p) >= offset}.
std::vector<Point2> clip_halfplane(const std::vector<Point2>& ring, Point2 normal, double offset) {
  std::vector<Point2> out;
  const std::size_t n = ring.size();
  if (n == 0) return out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = ring[i];
    const Point2 b = ring[(i + 1) % n];
    const double da = dot(normal, a) - offset;
    const double db = dot(normal, b) - offset;
    if (da >= 0.0) out.push_back(a);
    if ((da >= 0.0) != (db >= 0.0)) {
      const double t = da / (da - db);
      out.push_back(a + t * (b - a));
    }
  }
  return out;
}

// Dense tableau simplex for: maximize c^T x, A x <= b, x >= 0, with b >= 0.
// Bland's rule; returns the optimal x.
std::vector<double> simplex_max(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                                const std::vector<double>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  const std::size_t cols = n + m + 1;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(cols, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1.0;
    t[i][cols - 1] = b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

  constexpr double eps = 1e-12;
  for (int iter = 0; iter < 100000; ++iter) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (t[m][j] < -eps) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] > eps) {
        const double ratio = t[i][cols - 1] / t[i][enter];
        if (ratio < best - eps || (ratio <= best + eps && leave < m && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave == m) throw NumericalError("chebyshev_center: unbounded linear program");
    const double pivot = t[leave][enter];
    for (double& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = t[i][cols - 1];
  }
  return x;
}

}  // namespace

double segment_distance(Point2 q, Point2 a, Point2 b) {
  const Point2 d = b - a;
  const double len2 = dot(d, d);
  double t = len2 > 0.0 ? dot(q - a, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(q, a + t * d);
}

BBox BBox::of(std::span<const Point2> pts) {
  BBox box{{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()},
           {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()}};
  for (const Point2& p : pts) {
    box.min.x = std::min(box.min.x, p.x);
    box.min.y = std::min(box.min.y, p.y);
    box.max.x = std::max(box.max.x, p.x);
    box.max.y = std::max(box.max.y, p.y);
  }
  return box;
}

JordanPolygon::JordanPolygon(std::vector<Point2> vertices, Validation validation)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw InvalidPolygon("polygon needs at least 3 vertices, got " + std::to_string(vertices_.size()));
  }
  for (const Point2& v : vertices_) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) throw InvalidPolygon("polygon vertex is not finite");
  }
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i] == vertices_[(i + 1) % n]) {
      throw InvalidPolygon("zero-length edge at vertex " + std::to_string(i));
    }
  }
  const double area = signed_area(vertices_);
  if (!(std::abs(area) > 0.0)) throw InvalidPolygon("polygon has zero area");
  if (area < 0.0) std::reverse(vertices_.begin(), vertices_.end());
  if (validation == Validation::full && !is_simple(vertices_)) {
    throw InvalidPolygon("polygon boundary self-intersects");
  }
  bbox_ = BBox::of(vertices_);
}

JordanPolygon JordanPolygon::transformed(double scale, double rotation, Point2 translation) const {
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  std::vector<Point2> out;
  out.reserve(vertices_.size());
  for (const Point2& v : vertices_) {
    out.push_back({scale * (c * v.x - s * v.y) + translation.x, scale * (s * v.x + c * v.y) + translation.y});
  }
  return JordanPolygon(std::move(out), Validation::trusted);
}

double signed_area(std::span<const Point2> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return 0.0;
  // Shoelace relative to the first vertex keeps cancellation small for offset inputs.
  const Point2 o = ring[0];
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) twice += cross(ring[i] - o, ring[i + 1] - o);
  return 0.5 * twice;
}

double polygon_area(const JordanPolygon& p) { return signed_area(p.vertices()); }

double polygon_perimeter(const JordanPolygon& p) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) total += distance(p.vertex(i), p.vertex(i + 1));
  return total;
}

bool point_in_polygon(Point2 q, std::span<const Point2> ring) {
  bool inside = false;
  const std::size_t n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = ring[i];
    const Point2 b = ring[j];
    if ((a.y > q.y) != (b.y > q.y)) {
      const double x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (q.x < x) inside = !inside;
    }
  }
  return inside;
}

double signed_distance(Point2 q, const JordanPolygon& p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    best = std::min(best, segment_distance(q, p.vertex(i), p.vertex(i + 1)));
  }
  if (best == 0.0) return 0.0;
  return point_in_polygon(q, p.vertices()) ? best : -best;
}

bool is_convex(const JordanPolygon& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e0 = p.vertex(i + 1) - p.vertex(i);
    const Point2 e1 = p.vertex(i + 2) - p.vertex(i + 1);
    if (cross(e0, e1) < -1e-12 * norm(e0) * norm(e1)) return false;
  }
  return true;
}

bool is_simple(std::span<const Point2> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;

  struct EdgeSpan {
    double min_x, max_x, min_y, max_y;
    std::size_t index;
  };
  std::vector<EdgeSpan> edges(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = ring[i];
    const Point2 b = ring[(i + 1) % n];
    edges[i] = {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y), i};
  }

  auto adjacent = [n](std::size_t i, std::size_t j) { return (i + 1) % n == j || (j + 1) % n == i; };

  // Adjacent edges only share their common vertex unless they fold back on each other.
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = ring[i];
    const Point2 b = ring[(i + 1) % n];
    const Point2 c = ring[(i + 2) % n];
    if (cross(b - a, c - b) == 0.0 && dot(b - a, c - b) < 0.0) return false;
  }

  std::vector<EdgeSpan> sorted = edges;
  std::sort(sorted.begin(), sorted.end(), [](const EdgeSpan& l, const EdgeSpan& r) { return l.min_x < r.min_x; });
  std::vector<EdgeSpan> active;
  for (const EdgeSpan& e : sorted) {
    std::erase_if(active, [&](const EdgeSpan& o) { return o.max_x < e.min_x; });
    for (const EdgeSpan& o : active) {
      if (o.max_y < e.min_y || e.max_y < o.min_y) continue;
      // Adjacent edges can only overlap by folding back, which is tested above.
      if (adjacent(e.index, o.index)) continue;
      if (segments_touch(ring[e.index], ring[(e.index + 1) % n], ring[o.index], ring[(o.index + 1) % n])) {
        return false;
      }
    }
    active.push_back(e);
  }
  return true;
}

std::vector<Point2> offset_halfplane_intersection(const JordanPolygon& convex, double r) {
  std::vector<Point2> ring(convex.vertices().begin(), convex.vertices().end());
  const std::size_t n = convex.size();
  for (std::size_t i = 0; i < n && !ring.empty(); ++i) {
    const Point2 a = convex.vertex(i);
    const Point2 b = convex.vertex(i + 1);
    const Point2 d = b - a;
    const double len = norm(d);
    const Point2 inward{-d.y / len, d.x / len};
    ring = clip_halfplane(ring, inward, dot(inward, a) + r);
  }
  return ring;
}

InscribedDisk chebyshev_center(const JordanPolygon& p) {
  if (!is_convex(p)) throw NonConvexInput("chebyshev_center requires a convex polygon");
  const std::size_t n = p.size();

  Point2 g{};
  for (const Point2& v : p.vertices()) g = g + v;
  g = (1.0 / static_cast<double>(n)) * g;

  // Variables: cx+, cx-, cy+, cy-, t; constraint a_i . c + t <= b_i with c relative to g.
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  a.reserve(n);
  b.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e0 = p.vertex(i);
    const Point2 d = p.vertex(i + 1) - e0;
    const double len = norm(d);
    const Point2 outward{d.y / len, -d.x / len};
    a.push_back({outward.x, -outward.x, outward.y, -outward.y, 1.0});
    b.push_back(std::max(0.0, dot(outward, e0 - g)));
  }
  const std::vector<double> x = simplex_max(a, b, {0.0, 0.0, 0.0, 0.0, 1.0});
  const double radius = x[4];
  InscribedDisk disk{g + Point2{x[0] - x[1], x[2] - x[3]}, radius};

  // The optimum may be a segment (e.g. rectangles); report the centroid of the
  // near-optimal region so the center is the symmetric one.
  const double slack = 1e-9 * std::max(radius, p.bbox().longer_side());
  const std::vector<Point2> face = offset_halfplane_intersection(p, radius - slack);
  const double face_area = signed_area(face);
  if (face.size() >= 3 && face_area > 0.0) {
    Point2 c{};
    const Point2 o = face[0];
    for (std::size_t i = 1; i + 1 < face.size(); ++i) {
      const double w = cross(face[i] - o, face[i + 1] - o);
      c = c + w * (o + face[i] + face[i + 1]);
    }
    disk.center = (1.0 / (6.0 * face_area)) * c;
  }
  return disk;
}

// ---------------------------------------------------------------------------

Point2 Arc::start() const {
  return center + radius * Point2{std::cos(start_angle), std::sin(start_angle)};
}

Point2 Arc::end() const {
  const double e = end_angle();
  return center + radius * Point2{std::cos(e), std::sin(e)};
}

Point2 piece_start(const BoundaryPiece& piece) {
  return std::visit(
      [](const auto& pc) -> Point2 {
        if constexpr (std::is_same_v<std::decay_t<decltype(pc)>, Segment>) {
          return pc.a;
        } else {
          return pc.start();
        }
      },
      piece);
}

Point2 piece_end(const BoundaryPiece& piece) {
  return std::visit(
      [](const auto& pc) -> Point2 {
        if constexpr (std::is_same_v<std::decay_t<decltype(pc)>, Segment>) {
          return pc.b;
        } else {
          return pc.end();
        }
      },
      piece);
}

ArcPolygon::ArcPolygon(std::vector<BoundaryPiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw InvalidPolygon("arc polygon needs at least one piece");
  double extent = 1.0;
  for (const BoundaryPiece& piece : pieces_) {
    if (const Arc* arc = std::get_if<Arc>(&piece)) {
      if (!(arc->radius > 0.0)) throw InvalidPolygon("arc radius must be positive");
      if (!(arc->sweep > 0.0) || arc->sweep > 2.0 * std::numbers::pi + 1e-12) {
        throw InvalidPolygon("arc sweep must lie in (0, 2pi]");
      }
      extent = std::max({extent, std::abs(arc->center.x) + arc->radius, std::abs(arc->center.y) + arc->radius});
    } else {
      const Segment& s = std::get<Segment>(piece);
      extent = std::max({extent, std::abs(s.a.x), std::abs(s.a.y), std::abs(s.b.x), std::abs(s.b.y)});
    }
  }
  const double tol = 1e-12 * extent;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Point2 e = piece_end(pieces_[i]);
    const Point2 s = piece_start(pieces_[(i + 1) % pieces_.size()]);
    if (distance(e, s) > tol) {
      throw InvalidPolygon("arc polygon is not closed at piece " + std::to_string(i));
    }
  }
}

double ArcPolygon::area() const {
  double twice = 0.0;
  for (const BoundaryPiece& piece : pieces_) {
    if (const Segment* s = std::get_if<Segment>(&piece)) {
      twice += cross(s->a, s->b);
    } else {
      const Arc& a = std::get<Arc>(piece);
      const double s0 = a.start_angle;
      const double s1 = a.end_angle();
      const double signed_sweep = s1 - s0;
      twice += a.radius * a.radius * signed_sweep + a.radius * a.center.x * (std::sin(s1) - std::sin(s0)) -
               a.radius * a.center.y * (std::cos(s1) - std::cos(s0));
    }
  }
  return 0.5 * twice;
}

double ArcPolygon::perimeter() const {
  double total = 0.0;
  for (const BoundaryPiece& piece : pieces_) {
    if (const Segment* s = std::get_if<Segment>(&piece)) {
      total += distance(s->a, s->b);
    } else {
      total += std::get<Arc>(piece).length();
    }
  }
  return total;
}

double ArcPolygon::total_arc_sweep() const {
  double total = 0.0;
  for (const BoundaryPiece& piece : pieces_) {
    if (const Arc* a = std::get_if<Arc>(&piece)) total += a->ccw ? a->sweep : -a->sweep;
  }
  return total;
}

BBox ArcPolygon::bbox() const {
  // Conservative: arcs contribute their full circle box.
  std::vector<Point2> pts;
  for (const BoundaryPiece& piece : pieces_) {
    if (const Segment* s = std::get_if<Segment>(&piece)) {
      pts.push_back(s->a);
      pts.push_back(s->b);
    } else {
      const Arc& a = std::get<Arc>(piece);
      pts.push_back(a.center - Point2{a.radius, a.radius});
      pts.push_back(a.center + Point2{a.radius, a.radius});
    }
  }
  return BBox::of(pts);
}

}  // namespace cheeger
