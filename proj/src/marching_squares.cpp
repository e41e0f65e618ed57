#include "cheeger/marching_squares.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace cheeger {

namespace {

// A crossing on a dual edge, identified so neighboring cells agree on it.
struct Crossing {
  Point2 p;
  std::int64_t edge_id = -1;
};

struct CellCut {
  std::array<Point2, 8> poly{};
  std::array<std::int64_t, 8> ids{};  // -1 for grid corners, edge id for crossings
  int count = 0;
};

std::int64_t horizontal_id(const GridView& g, int i, int j) { return 2 * (static_cast<std::int64_t>(j) * g.nx + i); }
std::int64_t vertical_id(const GridView& g, int i, int j) { return 2 * (static_cast<std::int64_t>(j) * g.nx + i) + 1; }

// Inside part of dual cell (i, j)-(i+1, j+1), walking its corners counterclockwise.
CellCut cut_cell(const GridView& g, int i, int j, double level) {
  const std::array<int, 4> ci{i, i + 1, i + 1, i};
  const std::array<int, 4> cj{j, j, j + 1, j + 1};
  std::array<double, 4> v{};
  for (int k = 0; k < 4; ++k) v[k] = g.at(ci[k], cj[k]);
  // Edge k joins corner k and corner k+1: bottom, right, top, left.
  const std::array<std::int64_t, 4> eid{horizontal_id(g, i, j), vertical_id(g, i + 1, j), horizontal_id(g, i, j + 1),
                                        vertical_id(g, i, j)};
  CellCut cut;
  for (int k = 0; k < 4; ++k) {
    const int k1 = (k + 1) % 4;
    const bool in0 = v[k] > level;
    const bool in1 = v[k1] > level;
    if (in0) {
      cut.poly[cut.count] = g.node(ci[k], cj[k]);
      cut.ids[cut.count++] = -1;
    }
    if (in0 != in1) {
      const double t = (v[k] - level) / (v[k] - v[k1]);
      const Point2 a = g.node(ci[k], cj[k]);
      const Point2 b = g.node(ci[k1], cj[k1]);
      cut.poly[cut.count] = a + t * (b - a);
      cut.ids[cut.count++] = eid[k];
    }
  }
  return cut;
}

template <typename Visit>
void for_each_boundary_cell(const GridView& g, double level, Visit&& visit) {
  for (int j = 0; j + 1 < g.ny; ++j) {
    for (int i = 0; i + 1 < g.nx; ++i) {
      const int mask = (g.at(i, j) > level) | ((g.at(i + 1, j) > level) << 1) |
                       ((g.at(i + 1, j + 1) > level) << 2) | ((g.at(i, j + 1) > level) << 3);
      visit(i, j, mask);
    }
  }
}

}  // namespace

LevelSetMeasure measure_superlevel(const GridView& g, double level) {
  LevelSetMeasure m;
  const double full = g.cell * g.cell;
  double partial_twice = 0.0;
  std::size_t full_cells = 0;
  for_each_boundary_cell(g, level, [&](int i, int j, int mask) {
    if (mask == 0) return;
    if (mask == 15) {
      ++full_cells;
      return;
    }
    const CellCut cut = cut_cell(g, i, j, level);
    const Point2 o = cut.poly[0];
    for (int k = 1; k + 1 < cut.count; ++k) partial_twice += cross(cut.poly[k] - o, cut.poly[k + 1] - o);
    for (int k = 0; k < cut.count; ++k) {
      const int k1 = (k + 1) % cut.count;
      if (cut.ids[k] >= 0 && cut.ids[k1] >= 0) m.contour_length += distance(cut.poly[k], cut.poly[k1]);
    }
  });
  m.area = static_cast<double>(full_cells) * full + 0.5 * partial_twice;
  return m;
}

std::vector<Segment> contour_segments(const GridView& g, double level) {
  std::vector<Segment> out;
  for_each_boundary_cell(g, level, [&](int i, int j, int mask) {
    if (mask == 0 || mask == 15) return;
    const CellCut cut = cut_cell(g, i, j, level);
    for (int k = 0; k < cut.count; ++k) {
      const int k1 = (k + 1) % cut.count;
      if (cut.ids[k] >= 0 && cut.ids[k1] >= 0) out.push_back({cut.poly[k], cut.poly[k1]});
    }
  });
  return out;
}

std::vector<std::vector<Point2>> trace_contours(const GridView& g, double level) {
  // Each contour segment runs from one dual-edge crossing to the next; chain
  // segments by matching the end crossing of one with the start of another.
  struct Link {
    Point2 from;
    std::int64_t to_id;
    bool used = false;
  };
  std::unordered_map<std::int64_t, Link> next;
  std::vector<std::int64_t> order;
  std::unordered_map<std::int64_t, Point2> points;
  for_each_boundary_cell(g, level, [&](int i, int j, int mask) {
    if (mask == 0 || mask == 15) return;
    const CellCut cut = cut_cell(g, i, j, level);
    for (int k = 0; k < cut.count; ++k) {
      const int k1 = (k + 1) % cut.count;
      if (cut.ids[k] >= 0 && cut.ids[k1] >= 0) {
        next[cut.ids[k]] = {cut.poly[k], cut.ids[k1]};
        points[cut.ids[k1]] = cut.poly[k1];
        order.push_back(cut.ids[k]);
      }
    }
  });
  std::vector<std::vector<Point2>> loops;
  for (const std::int64_t start : order) {
    auto it = next.find(start);
    if (it == next.end() || it->second.used) continue;
    std::vector<Point2> loop;
    std::int64_t id = start;
    while (true) {
      auto cur = next.find(id);
      if (cur == next.end() || cur->second.used) break;
      cur->second.used = true;
      loop.push_back(cur->second.from);
      id = cur->second.to_id;
    }
    if (loop.size() >= 2) loops.push_back(std::move(loop));
  }
  return loops;
}

}  // namespace cheeger
