#include "cheeger/retract.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "cheeger/errors.hpp"

namespace cheeger {

GridView view_of(const DistanceField& f) { return {f.origin, f.cell, f.nx, f.ny, f.values}; }

RetractEstimate retract_area(const DistanceField& f, double r) {
  const LevelSetMeasure m = measure_superlevel(view_of(f), r);
  RetractEstimate est;
  est.r = r;
  est.area = m.area;
  est.area_error_bound = 0.5 * f.cell * m.contour_length;
  est.component_count = retract_components(f, r);
  est.resolution = f.resolution;
  return est;
}

ExtrapolatedArea retract_area_extrapolated(const DistanceField& coarse, const DistanceField& fine, double r) {
  const double a_n = measure_superlevel(view_of(coarse), r).area;
  const double a_2n = measure_superlevel(view_of(fine), r).area;
  return {2.0 * a_2n - a_n, std::abs(a_2n - a_n)};
}

ExtrapolatedArea retract_area_extrapolated(const JordanPolygon& p, double r, int base_resolution) {
  const DistanceField coarse = build_field(p, base_resolution);
  const DistanceField fine = build_field(p, 2 * base_resolution);
  return retract_area_extrapolated(coarse, fine, r);
}

int retract_components(const DistanceField& f, double r) {
  const std::size_t n = f.values.size();
  std::vector<std::int32_t> label(n, -1);
  std::vector<std::int32_t> stack;
  int count = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (label[start] >= 0 || !(f.values[start] > r)) continue;
    label[start] = count;
    stack.push_back(static_cast<std::int32_t>(start));
    while (!stack.empty()) {
      const std::int32_t idx = stack.back();
      stack.pop_back();
      const int i = idx % f.nx;
      const int j = idx / f.nx;
      for (int dj = -1; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          const int ii = i + di;
          const int jj = j + dj;
          if ((di == 0 && dj == 0) || ii < 0 || jj < 0 || ii >= f.nx || jj >= f.ny) continue;
          const std::size_t k = static_cast<std::size_t>(jj) * f.nx + ii;
          if (label[k] < 0 && f.values[k] > r) {
            label[k] = count;
            stack.push_back(static_cast<std::int32_t>(k));
          }
        }
      }
    }
    ++count;
  }
  return count;
}

std::optional<JordanPolygon> inner_retract_convex(const JordanPolygon& p, double r) {
  if (!is_convex(p)) throw NonConvexInput("inner_retract_convex requires a convex polygon");
  const std::vector<Point2> ring = offset_halfplane_intersection(p, r);
  const double scale = p.bbox().longer_side();
  const double merge_tol = 1e-14 * scale;
  std::vector<Point2> clean;
  clean.reserve(ring.size());
  for (const Point2& q : ring) {
    if (clean.empty() || distance(clean.back(), q) > merge_tol) clean.push_back(q);
  }
  while (clean.size() > 1 && distance(clean.front(), clean.back()) <= merge_tol) clean.pop_back();
  if (clean.size() < 3) return std::nullopt;
  if (!(signed_area(clean) > 1e-24 * scale * scale)) return std::nullopt;
  return JordanPolygon(std::move(clean), JordanPolygon::Validation::trusted);
}

double minkowski_content(const JordanPolygon& convex, double r) {
  const std::optional<JordanPolygon> retract = inner_retract_convex(convex, r);
  if (!retract) throw EmptyRetract("minkowski_content: retract is empty at r = " + std::to_string(r));
  return polygon_perimeter(*retract);
}

namespace {

template <typename AreaFn>
double finite_difference_content(AreaFn&& area, double r, double cell) {
  const double a0 = area(r);
  if (!(a0 > 0.0)) throw EmptyRetract("minkowski_content: retract is empty at r = " + std::to_string(r));
  const double t1 = 2.0 * cell;
  const double t2 = 4.0 * cell;
  const double q1 = (area(r - t1) - a0) / t1;
  const double q2 = (area(r - t2) - a0) / t2;
  return 2.0 * q1 - q2;
}

}  // namespace

double minkowski_content(const DistanceField& f, double r) {
  return finite_difference_content([&](double s) { return measure_superlevel(view_of(f), s).area; }, r, f.cell);
}

double minkowski_content(const DistanceField& coarse, const DistanceField& fine, double r) {
  return finite_difference_content([&](double s) { return retract_area_extrapolated(coarse, fine, s).area; }, r,
                                   coarse.cell);
}

}  // namespace cheeger
