#include "cheeger/distance_field.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "cheeger/edge_bvh.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/parallel.hpp"

namespace cheeger {

namespace {

static_assert(std::endian::native == std::endian::little, "field dumps assume a little-endian host");

// Row sweep with a Lipschitz upper bound from the previous node.
void fill_row_distances(const EdgeBvh& bvh, const DistanceField& layout, int j, double* out) {
  double prev = std::numeric_limits<double>::infinity();
  const double step = layout.cell * (1.0 + 1e-12);
  for (int i = 0; i < layout.nx; ++i) {
    const double d = bvh.distance(layout.center(i, j), prev + step);
    out[i] = d;
    prev = d;
  }
}

// Marks nodes of row j inside the ring by counting edge crossings left of each center.
void apply_row_signs(std::span<const Point2> ring, const DistanceField& layout, int j, double* out,
                     std::vector<double>& crossings) {
  const double y = layout.origin.y + (j + 0.5) * layout.cell;
  crossings.clear();
  const std::size_t n = ring.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point2 a = ring[k];
    const Point2 b = ring[(k + 1) % n];
    if ((a.y > y) != (b.y > y)) crossings.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
  }
  std::sort(crossings.begin(), crossings.end());
  std::size_t c = 0;
  for (int i = 0; i < layout.nx; ++i) {
    const double x = layout.origin.x + (i + 0.5) * layout.cell;
    while (c < crossings.size() && crossings[c] <= x) ++c;
    // An odd number of crossings to the right means the center is inside.
    const bool inside = ((crossings.size() - c) % 2) == 1;
    if (!inside) out[i] = -out[i];
  }
}

}  // namespace

double DistanceField::max_value() const {
  return values.empty() ? -std::numeric_limits<double>::infinity() : *std::max_element(values.begin(), values.end());
}

DistanceField build_field(const JordanPolygon& p, int resolution) {
  if (resolution < 16) {
    throw ResolutionTooSmall("resolution must be at least 16, got " + std::to_string(resolution));
  }
  const BBox box = p.bbox();
  DistanceField f;
  f.resolution = resolution;
  f.cell = box.longer_side() / resolution;
  f.nx = static_cast<int>(std::ceil(box.width() / f.cell - 1e-9)) + 2;
  f.ny = static_cast<int>(std::ceil(box.height() / f.cell - 1e-9)) + 2;
  f.nx = std::max(f.nx, 3);
  f.ny = std::max(f.ny, 3);
  f.origin = box.min - Point2{f.cell, f.cell};
  f.source = std::make_shared<const JordanPolygon>(p);
  f.values.assign(static_cast<std::size_t>(f.nx) * f.ny, 0.0);

  const EdgeBvh bvh = EdgeBvh::from_ring(p.vertices());
  const std::span<const Point2> ring = p.vertices();
  parallel_for(static_cast<std::size_t>(f.ny), [&](std::size_t begin, std::size_t end) {
    std::vector<double> crossings;
    for (std::size_t j = begin; j < end; ++j) {
      double* row = f.values.data() + j * f.nx;
      fill_row_distances(bvh, f, static_cast<int>(j), row);
      apply_row_signs(ring, f, static_cast<int>(j), row, crossings);
    }
  });
  return f;
}

std::vector<double> distance_on_grid(const DistanceField& layout, const std::vector<Segment>& segments) {
  std::vector<double> out(static_cast<std::size_t>(layout.nx) * layout.ny,
                          std::numeric_limits<double>::infinity());
  if (segments.empty()) return out;
  const EdgeBvh bvh(segments);
  parallel_for(static_cast<std::size_t>(layout.ny), [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      fill_row_distances(bvh, layout, static_cast<int>(j), out.data() + j * layout.nx);
    }
  });
  return out;
}

void write_field_dump(const DistanceField& f, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open field dump for writing: " + path.string());
  unsigned char header[32];
  const auto nx = static_cast<std::uint32_t>(f.nx);
  const auto ny = static_cast<std::uint32_t>(f.ny);
  std::memcpy(header, &nx, 4);
  std::memcpy(header + 4, &ny, 4);
  std::memcpy(header + 8, &f.cell, 8);
  std::memcpy(header + 16, &f.origin.x, 8);
  std::memcpy(header + 24, &f.origin.y, 8);
  out.write(reinterpret_cast<const char*>(header), sizeof header);
  out.write(reinterpret_cast<const char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(double)));
  if (!out) throw IoError("failed writing field dump: " + path.string());
}

DistanceField read_field_dump(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open field dump: " + path.string());
  unsigned char header[32];
  in.read(reinterpret_cast<char*>(header), sizeof header);
  if (!in) throw IoError("truncated field dump header: " + path.string());
  std::uint32_t nx = 0;
  std::uint32_t ny = 0;
  DistanceField f;
  std::memcpy(&nx, header, 4);
  std::memcpy(&ny, header + 4, 4);
  std::memcpy(&f.cell, header + 8, 8);
  std::memcpy(&f.origin.x, header + 16, 8);
  std::memcpy(&f.origin.y, header + 24, 8);
  f.nx = static_cast<int>(nx);
  f.ny = static_cast<int>(ny);
  f.values.resize(static_cast<std::size_t>(nx) * ny);
  in.read(reinterpret_cast<char*>(f.values.data()), static_cast<std::streamsize>(f.values.size() * sizeof(double)));
  if (!in) throw IoError("truncated field dump values: " + path.string());
  return f;
}

}  // namespace cheeger
