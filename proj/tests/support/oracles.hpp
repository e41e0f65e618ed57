#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's distance, retract, or Koch code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "cheeger/geometry.hpp"

namespace test_support {

using cheeger::Point2;

inline double brute_segment_distance(Point2 q, Point2 a, Point2 b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = ((q.x - a.x) * dx + (q.y - a.y) * dy) / len2;
  t = std::max(0.0, std::min(1.0, t));
  return std::hypot(q.x - (a.x + t * dx), q.y - (a.y + t * dy));
}

inline double brute_boundary_distance(Point2 q, std::span<const Point2> ring) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ring.size(); ++i) {
    best = std::min(best, brute_segment_distance(q, ring[i], ring[(i + 1) % ring.size()]));
  }
  return best;
}

/// Winding number of the ring around q (nonzero means inside).
inline int winding_number(Point2 q, std::span<const Point2> ring) {
  int wn = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point2 a = ring[i];
    const Point2 b = ring[(i + 1) % ring.size()];
    const double side = (b.x - a.x) * (q.y - a.y) - (q.x - a.x) * (b.y - a.y);
    if (a.y <= q.y) {
      if (b.y > q.y && side > 0) ++wn;
    } else if (b.y <= q.y && side < 0) {
      --wn;
    }
  }
  return wn;
}

/// Connected components of {dist >= r} sampled on a corner-aligned grid with
/// `samples` points across the longer bbox side, 8-connected.
inline int flood_fill_components(const cheeger::JordanPolygon& p, double r, int samples) {
  const cheeger::BBox box = p.bbox();
  const double h = box.longer_side() / samples;
  const int nx = static_cast<int>(box.width() / h) + 1;
  const int ny = static_cast<int>(box.height() / h) + 1;
  std::vector<char> in(static_cast<std::size_t>(nx) * ny, 0);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Point2 q{box.min.x + i * h, box.min.y + j * h};
      in[static_cast<std::size_t>(j) * nx + i] =
          winding_number(q, p.vertices()) != 0 && brute_boundary_distance(q, p.vertices()) >= r;
    }
  }
  std::vector<int> label(in.size(), -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < static_cast<int>(in.size()); ++s) {
    if (!in[s] || label[s] >= 0) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const int k = stack.back();
      stack.pop_back();
      const int i = k % nx;
      const int j = k / nx;
      for (int dj = -1; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          const int ii = i + di;
          const int jj = j + dj;
          if (ii < 0 || jj < 0 || ii >= nx || jj >= ny) continue;
          const int kk = jj * nx + ii;
          if (in[kk] && label[kk] < 0) {
            label[kk] = count;
            stack.push_back(kk);
          }
        }
      }
    }
    ++count;
  }
  return count;
}

/// Middle-third gap of the Cantor construction: (lo, hi) at iteration `level`.
struct CantorGap {
  double lo;
  double hi;
  int level;
};

/// All gaps removed in iterations 1..levels, by enumerating ternary digit strings.
inline std::vector<CantorGap> enumerate_gaps(int levels) {
  std::vector<CantorGap> gaps;
  for (int k = 1; k <= levels; ++k) {
    const std::int64_t count = std::int64_t{1} << (k - 1);
    std::int64_t scale = 1;
    for (int i = 0; i < k; ++i) scale *= 3;
    for (std::int64_t m = 0; m < count; ++m) {
      // Digits of the surviving interval: each bit chooses ternary digit 0 or 2.
      std::int64_t num = 0;
      for (int bit = k - 2; bit >= 0; --bit) num = 3 * num + (((m >> bit) & 1) ? 2 : 0);
      const std::int64_t lo = 3 * num + 1;
      gaps.push_back({static_cast<double>(lo) / scale, static_cast<double>(lo + 1) / scale, k});
    }
  }
  return gaps;
}

/// Adaptive bisection over 20-point Gauss-Legendre panels. A panel is accepted
/// when splitting it changes the sum by at most its share of `tol`.
template <class F>
double adaptive_gauss(F f, double a, double b, double tol, double* error = nullptr, int max_depth = 50) {
  using rule = boost::math::quadrature::gauss<double, 20>;
  struct Rec {
    F& f;
    double err = 0.0;
    double run(double lo, double hi, double whole, double tol, int depth) {
      const double mid = 0.5 * (lo + hi);
      const double left = rule::integrate(f, lo, mid);
      const double right = rule::integrate(f, mid, hi);
      const double diff = std::abs(left + right - whole);
      if (depth == 0 || diff <= tol) {
        err += diff;
        return left + right;
      }
      return run(lo, mid, left, 0.5 * tol, depth - 1) + run(mid, hi, right, 0.5 * tol, depth - 1);
    }
  };
  Rec rec{f};
  const double v = rec.run(a, b, rule::integrate(f, a, b), tol, max_depth);
  if (error) *error = rec.err;
  return v;
}

/// Area of the curvilinear isosceles triangle as an integral of its height.
inline double curvilinear_triangle_quadrature(double r, double beta) {
  // Sagitta r - sqrt(r^2 - s^2), written without cancellation.
  auto height = [r](double s) { return s * s / (r + std::sqrt(r * r - s * s)); };
  return 2.0 * adaptive_gauss(height, 0.0, 0.5 * beta, 1e-14);
}

/// Koch step n polygon, built independently of the library generator.
inline std::vector<Point2> koch_vertices(int n) {
  const double s3 = std::sqrt(3.0);
  std::vector<Point2> p;
  for (int k = 0; k < 3; ++k) {
    const double a = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * k / 3.0;
    p.push_back({s3 * std::cos(a), s3 * std::sin(a)});
  }
  for (int step = 1; step < n; ++step) {
    std::vector<Point2> q;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Point2 a = p[i];
      const Point2 b = p[(i + 1) % p.size()];
      const Point2 d{b.x - a.x, b.y - a.y};
      q.push_back(a);
      q.push_back({a.x + d.x / 3.0, a.y + d.y / 3.0});
      q.push_back({a.x + d.x / 2.0 + d.y * s3 / 6.0, a.y + d.y / 2.0 - d.x * s3 / 6.0});
      q.push_back({a.x + 2.0 * d.x / 3.0, a.y + 2.0 * d.y / 3.0});
    }
    p = std::move(q);
  }
  return p;
}

/// |K_n^r| by quadrature over one of the twelve congruent triangles spanned by
/// the center C, the tip V of the first triangle, and the point W one unit
/// along the side from V. In side coordinates (u along VW, v inward) the
/// retract meets each line u = const in an interval reaching the line VC; its
/// lower end is located by bisection on exact distance to the boundary.
inline double koch_retract_area_quadrature(int n, double r, double* error = nullptr) {
  const std::vector<Point2> ring = koch_vertices(n);
  const double s3 = std::sqrt(3.0);
  const Point2 v_tip{0.0, s3};
  const Point2 v1{s3 * std::cos(std::numbers::pi / 2.0 + 2.0 * std::numbers::pi / 3.0),
                  s3 * std::sin(std::numbers::pi / 2.0 + 2.0 * std::numbers::pi / 3.0)};
  Point2 e1{(v1.x - v_tip.x) / 3.0, (v1.y - v_tip.y) / 3.0};
  const double len = std::hypot(e1.x, e1.y);
  e1 = {e1.x / len, e1.y / len};
  Point2 e2{-e1.y, e1.x};
  if (e2.x * -v_tip.x + e2.y * -v_tip.y < 0) e2 = {-e2.x, -e2.y};

  // Only boundary pieces near the integration region can be nearest.
  const Point2 hub{v_tip.x + 1.15 * e1.x + 0.4 * e2.x, v_tip.y + 1.15 * e1.y + 0.4 * e2.y};
  std::vector<std::pair<Point2, Point2>> local;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point2 a = ring[i];
    const Point2 b = ring[(i + 1) % ring.size()];
    if (brute_segment_distance(hub, a, b) < 0.8 + r + 0.1) local.emplace_back(a, b);
  }
  auto dist = [&](Point2 q) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [a, b] : local) best = std::min(best, brute_segment_distance(q, a, b));
    return best;
  };
  auto at = [&](double u, double v) {
    return Point2{v_tip.x + u * e1.x + v * e2.x, v_tip.y + u * e1.y + v * e2.y};
  };
  auto chord = [&](double u) {
    const double bottom = u <= 1.0 ? 0.0 : s3 * (u - 1.0);
    const double top = u / s3;
    if (top <= bottom) return 0.0;
    if (dist(at(u, top)) < r) return 0.0;
    if (dist(at(u, bottom)) >= r) return top - bottom;
    double lo = bottom;
    double hi = top;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (dist(at(u, mid)) >= r) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return top - hi;
  };
  std::vector<double> breaks{0.8};
  for (int k = 65; k < 81; ++k) breaks.push_back(k / 81.0);
  breaks.push_back(1.0);
  breaks.push_back(1.25);
  breaks.push_back(1.5);
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    double err = 0.0;
    total += adaptive_gauss(chord, breaks[k], breaks[k + 1], 1e-14, &err);
    total_err += err;
  }
  if (error) *error = 12.0 * total_err;
  return 12.0 * total;
}

}  // namespace test_support
