#pragma once

#include <cmath>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include "cheeger/geometry.hpp"
#include "cheeger/polygon_io.hpp"

namespace test_support {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(CHEEGER_FIXTURE_DIR) / (name + ".json");
}

inline cheeger::JordanPolygon load_fixture(const std::string& name) {
  return cheeger::read_polygon_json(fixture_path(name));
}

inline cheeger::JordanPolygon rectangle(double w, double h) {
  return cheeger::JordanPolygon({{0, 0}, {w, 0}, {w, h}, {0, h}});
}

inline cheeger::JordanPolygon unit_square() { return rectangle(1, 1); }

inline cheeger::JordanPolygon regular_polygon(int n, double radius, cheeger::Point2 center = {}) {
  std::vector<cheeger::Point2> v;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / n;
    v.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
  }
  return cheeger::JordanPolygon(std::move(v));
}

}  // namespace test_support
