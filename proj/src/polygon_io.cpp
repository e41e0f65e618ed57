#include "cheeger/polygon_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cheeger/errors.hpp"

namespace cheeger {

JordanPolygon parse_polygon_json(std::string_view text, JordanPolygon::Validation validation) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed polygon JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InputError("polygon JSON must be an object with a \"vertices\" array");
  }
  std::vector<Point2> pts;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw InputError("each vertex must be a [x, y] pair of numbers");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return JordanPolygon(std::move(pts), validation);
}

JordanPolygon read_polygon_json(const std::filesystem::path& path, JordanPolygon::Validation validation) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read polygon file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polygon_json(buf.str(), validation);
}

std::string polygon_to_json(const JordanPolygon& p) {
  nlohmann::json verts = nlohmann::json::array();
  for (const Point2& v : p.vertices()) verts.push_back({v.x, v.y});
  nlohmann::json doc;
  doc["vertices"] = std::move(verts);
  return doc.dump();
}

void write_polygon_json(const JordanPolygon& p, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write polygon file: " + path.string());
  out << polygon_to_json(p) << '\n';
  if (!out) throw IoError("failed writing polygon file: " + path.string());
}

}  // namespace cheeger
