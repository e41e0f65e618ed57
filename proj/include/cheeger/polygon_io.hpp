#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cheeger/geometry.hpp"

namespace cheeger {

/// Parses {"vertices": [[x, y], ...]}. Throws InputError (malformed JSON or
/// shape) and InvalidPolygon.
JordanPolygon parse_polygon_json(std::string_view text,
                                 JordanPolygon::Validation validation = JordanPolygon::Validation::full);

/// Reads a polygon file. Throws IoError when unreadable, otherwise as parse_polygon_json.
JordanPolygon read_polygon_json(const std::filesystem::path& path,
                                JordanPolygon::Validation validation = JordanPolygon::Validation::full);

std::string polygon_to_json(const JordanPolygon& p);
void write_polygon_json(const JordanPolygon& p, const std::filesystem::path& path);

}  // namespace cheeger
