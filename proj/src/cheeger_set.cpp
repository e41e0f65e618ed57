#include "cheeger/cheeger_set.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "cheeger/errors.hpp"
#include "cheeger/marching_squares.hpp"
#include "cheeger/retract.hpp"

namespace cheeger {

namespace {

constexpr double kPi = std::numbers::pi;

Point2 outward_normal(Point2 a, Point2 b) {
  const Point2 d = b - a;
  const double len = norm(d);
  return {d.y / len, -d.x / len};
}

}  // namespace

ArcPolygon dilate_convex(std::span<const Point2> retract, double r) {
  if (retract.empty()) throw EmptyRetract("dilate_convex: empty retract");
  if (!(r > 0.0)) throw DomainError("dilate_convex requires r > 0");
  std::vector<BoundaryPiece> pieces;
  if (retract.size() == 1) {
    pieces.push_back(Arc{retract[0], r, 0.0, 2.0 * kPi, true});
    return ArcPolygon(std::move(pieces));
  }
  const std::size_t n = retract.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 prev = retract[(i + n - 1) % n];
    const Point2 v = retract[i];
    const Point2 next = retract[(i + 1) % n];
    const Point2 n_in = outward_normal(prev, v);
    const Point2 n_out = outward_normal(v, next);
    double sweep = std::atan2(cross(n_in, n_out), dot(n_in, n_out));
    if (sweep < 0.0) sweep = sweep > -1e-9 ? 0.0 : sweep + 2.0 * kPi;
    if (sweep > 1e-15) pieces.push_back(Arc{v, r, std::atan2(n_in.y, n_in.x), sweep, true});
    pieces.push_back(Segment{v + r * n_out, next + r * n_out});
  }
  return ArcPolygon(std::move(pieces));
}

CheegerSetGeometry cheeger_set_convex(std::span<const Point2> retract, double r) {
  ArcPolygon e = dilate_convex(retract, r);
  CheegerSetGeometry g;
  g.area = e.area();
  g.perimeter = e.perimeter();
  g.r = r;
  g.representation = std::move(e);
  return g;
}

CheegerSetGeometry dilate_grid(const DistanceField& f, double r) {
  const GridView view = view_of(f);
  const std::vector<Segment> contour = contour_segments(view, r);
  if (contour.empty()) {
    throw EmptyRetract("dilate_grid: retract is empty at r = " + std::to_string(r));
  }
  std::vector<double> dilation = distance_on_grid(f, contour);
  for (std::size_t k = 0; k < dilation.size(); ++k) {
    dilation[k] = f.values[k] >= r ? r + dilation[k] : r - dilation[k];
  }
  const GridView dview{f.origin, f.cell, f.nx, f.ny, dilation};
  const LevelSetMeasure m = measure_superlevel(dview, 0.0);

  GridCheegerSet set;
  set.origin = f.origin;
  set.cell = f.cell;
  set.nx = f.nx;
  set.ny = f.ny;
  set.mask.resize(dilation.size());
  for (std::size_t k = 0; k < dilation.size(); ++k) set.mask[k] = dilation[k] >= 0.0 ? 1 : 0;
  set.boundary = trace_contours(dview, 0.0);

  CheegerSetGeometry g;
  g.area = m.area;
  g.perimeter = m.contour_length;
  g.r = r;
  g.representation = std::move(set);
  return g;
}

// ---------------------------------------------------------------------------

namespace {

class SvgWriter {
 public:
  SvgWriter(const BBox& box, double pad) : min_x_(box.min.x - pad), max_y_(box.max.y + pad) {}

  std::string xy(Point2 p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f %.6f", p.x - min_x_, max_y_ - p.y);
    return buf;
  }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
  }

  std::string ring_path(const std::vector<Point2>& ring) const {
    std::string d;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      d += (i == 0 ? "M " : " L ") + xy(ring[i]);
    }
    if (!ring.empty()) d += " Z";
    return d;
  }

  std::string arc_path(const ArcPolygon& poly) const {
    std::string d = "M " + xy(piece_start(poly.pieces().front()));
    for (const BoundaryPiece& piece : poly.pieces()) {
      if (const Segment* s = std::get_if<Segment>(&piece)) {
        d += " L " + xy(s->b);
        continue;
      }
      // Split arcs into halves so no SVG arc exceeds a half turn.
      const Arc& a = std::get<Arc>(piece);
      const int parts = a.sweep > kPi * 0.999 ? 2 : 1;
      for (int k = 1; k <= parts; ++k) {
        const double sweep = a.sweep * k / parts;
        const double ang = a.ccw ? a.start_angle + sweep : a.start_angle - sweep;
        const Point2 end = a.center + a.radius * Point2{std::cos(ang), std::sin(ang)};
        // The y flip turns counterclockwise arcs into SVG sweep-flag 0.
        d += " A " + num(a.radius) + " " + num(a.radius) + " 0 0 " + (a.ccw ? "0 " : "1 ") + xy(end);
      }
    }
    return d + " Z";
  }

 private:
  double min_x_;
  double max_y_;
};

}  // namespace

std::string svg_document(const JordanPolygon& domain, const RetractShape& retract, const CheegerSetGeometry& set,
                         double h) {
  const BBox box = domain.bbox();
  const double extent = box.longer_side();
  const double pad = 0.05 * extent;
  const double legend = 0.12 * extent;
  const SvgWriter w(box, pad);
  const double width = box.width() + 2.0 * pad;
  const double height = box.height() + 2.0 * pad + legend;
  const double stroke = 0.003 * extent;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + SvgWriter::num(800.0) +
         "\" height=\"" + SvgWriter::num(800.0 * height / width) + "\" viewBox=\"0 0 " + SvgWriter::num(width) + " " +
         SvgWriter::num(height) + "\">\n";

  std::string e_path;
  if (const ArcPolygon* arc = std::get_if<ArcPolygon>(&set.representation)) {
    e_path = w.arc_path(*arc);
  } else {
    for (const auto& loop : std::get<GridCheegerSet>(set.representation).boundary) {
      if (!e_path.empty()) e_path += ' ';
      e_path += w.ring_path(loop);
    }
  }
  out += "  <g id=\"cheeger-set\">\n    <path d=\"" + e_path +
         "\" fill=\"#9ecae1\" fill-opacity=\"0.8\" fill-rule=\"evenodd\" stroke=\"#3182bd\" stroke-width=\"" +
         SvgWriter::num(stroke) + "\"/>\n  </g>\n";

  std::string r_path;
  for (const auto& ring : retract) {
    if (!r_path.empty()) r_path += ' ';
    r_path += w.ring_path(ring);
  }
  out += "  <g id=\"retract\">\n    <path d=\"" + r_path + "\" fill=\"#fdae6b\" fill-rule=\"evenodd\" stroke=\"none\"/>\n  </g>\n";

  const std::vector<Point2> boundary(domain.vertices().begin(), domain.vertices().end());
  out += "  <g id=\"domain\">\n    <path d=\"" + w.ring_path(boundary) +
         "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" + SvgWriter::num(stroke) + "\"/>\n  </g>\n";

  const double font = 0.045 * extent;
  out += "  <g id=\"legend\" font-family=\"sans-serif\" font-size=\"" + SvgWriter::num(font) + "\">\n";
  out += "    <text x=\"" + SvgWriter::num(pad) + "\" y=\"" + SvgWriter::num(height - legend + 1.2 * font) +
         "\">h = " + SvgWriter::num(h) + "</text>\n";
  out += "    <text x=\"" + SvgWriter::num(pad) + "\" y=\"" + SvgWriter::num(height - legend + 2.4 * font) +
         "\">r = " + SvgWriter::num(set.r) + "</text>\n";
  out += "  </g>\n</svg>\n";
  return out;
}

void render_svg(const JordanPolygon& domain, const RetractShape& retract, const CheegerSetGeometry& set, double h,
                const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open SVG output: " + path.string());
  out << svg_document(domain, retract, set, h);
  if (!out) throw IoError("failed writing SVG output: " + path.string());
}

}  // namespace cheeger
