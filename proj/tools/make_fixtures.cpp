// Regenerates the polygon fixtures: make_fixtures <output-dir>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <vector>

#include "cheeger/errors.hpp"
#include "cheeger/geometry.hpp"
#include "cheeger/koch.hpp"
#include "cheeger/polygon_io.hpp"

namespace {

using cheeger::JordanPolygon;
using cheeger::Point2;

constexpr double kPi = std::numbers::pi;

// Two unit disks centered at (0,0) and (2,0) over the rectangle [0,2]x[-1,0];
// the arcs meet in a cusp at (1,0). Each arc uses `segments` chords.
JordanPolygon heart(int segments) {
  std::vector<Point2> v;
  v.push_back({0.0, -1.0});
  for (int k = 0; k <= segments; ++k) {
    const double a = -kPi / 2.0 + 1.5 * kPi * k / segments;
    v.push_back({2.0 + std::cos(a), std::sin(a)});
  }
  v[1] = {2.0, -1.0};
  v.back() = {1.0, 0.0};
  for (int k = 1; k < segments; ++k) {
    const double a = 1.5 * kPi * k / segments;
    v.push_back({std::cos(a), std::sin(a)});
  }
  return JordanPolygon(std::move(v));
}

JordanPolygon regular_polygon(int n, double radius) {
  std::vector<Point2> v;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * k / n;
    v.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return JordanPolygon(std::move(v));
}

JordanPolygon rectangle(double w, double h) { return JordanPolygon({{0, 0}, {w, 0}, {w, h}, {0, h}}); }

// Two unit squares joined by a corridor of width 0.1.
JordanPolygon corridor() {
  return JordanPolygon({{0, 0},
                        {1, 0},
                        {1, 0.45},
                        {1.5, 0.45},
                        {1.5, 0},
                        {2.5, 0},
                        {2.5, 1},
                        {1.5, 1},
                        {1.5, 0.55},
                        {1, 0.55},
                        {1, 1},
                        {0, 1}});
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  try {
    std::filesystem::create_directories(dir);
    cheeger::write_polygon_json(rectangle(1, 1), dir / "square.json");
    cheeger::write_polygon_json(rectangle(2, 1), dir / "rectangle.json");
    for (int n = 1; n <= 5; ++n) {
      cheeger::write_polygon_json(cheeger::koch_polygon(n), dir / ("k" + std::to_string(n) + ".json"));
    }
    cheeger::write_polygon_json(heart(256), dir / "heart.json");
    cheeger::write_polygon_json(regular_polygon(256, 1.0), dir / "disk256.json");
    cheeger::write_polygon_json(corridor(), dir / "corridor.json");
  } catch (const std::exception& e) {
    std::cerr << "make_fixtures: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
