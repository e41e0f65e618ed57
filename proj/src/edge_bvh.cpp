#include "cheeger/edge_bvh.hpp"

#include <algorithm>
#include <cmath>

namespace cheeger {

namespace {

constexpr std::uint32_t kLeafSize = 4;

BBox segment_box(const Segment& s) {
  return {{std::min(s.a.x, s.b.x), std::min(s.a.y, s.b.y)}, {std::max(s.a.x, s.b.x), std::max(s.a.y, s.b.y)}};
}

BBox merge(const BBox& l, const BBox& r) {
  return {{std::min(l.min.x, r.min.x), std::min(l.min.y, r.min.y)},
          {std::max(l.max.x, r.max.x), std::max(l.max.y, r.max.y)}};
}

double box_distance2(const BBox& b, Point2 q) {
  const double dx = std::max({b.min.x - q.x, 0.0, q.x - b.max.x});
  const double dy = std::max({b.min.y - q.y, 0.0, q.y - b.max.y});
  return dx * dx + dy * dy;
}

double segment_distance2(Point2 q, const Segment& s) {
  const Point2 d = s.b - s.a;
  const double len2 = dot(d, d);
  double t = len2 > 0.0 ? dot(q - s.a, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const Point2 e = q - (s.a + t * d);
  return dot(e, e);
}

}  // namespace

EdgeBvh::EdgeBvh(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) return;
  nodes_.reserve(2 * segments_.size() / kLeafSize + 2);
  build(0, static_cast<std::uint32_t>(segments_.size()));
}

EdgeBvh EdgeBvh::from_ring(std::span<const Point2> ring) {
  std::vector<Segment> segs;
  segs.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) segs.push_back({ring[i], ring[(i + 1) % ring.size()]});
  return EdgeBvh(std::move(segs));
}

std::uint32_t EdgeBvh::build(std::uint32_t begin, std::uint32_t end) {
  const auto index = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({});
  BBox box = segment_box(segments_[begin]);
  for (std::uint32_t i = begin + 1; i < end; ++i) box = merge(box, segment_box(segments_[i]));
  if (end - begin <= kLeafSize) {
    nodes_[index] = {box, begin, end - begin, true};
    return index;
  }
  const bool split_x = box.width() >= box.height();
  const std::uint32_t mid = begin + (end - begin) / 2;
  auto key = [split_x](const Segment& s) { return split_x ? s.a.x + s.b.x : s.a.y + s.b.y; };
  std::nth_element(segments_.begin() + begin, segments_.begin() + mid, segments_.begin() + end,
                   [&](const Segment& l, const Segment& r) { return key(l) < key(r); });
  const std::uint32_t left = build(begin, mid);
  const std::uint32_t right = build(mid, end);
  nodes_[index] = {box, left, right, false};
  return index;
}

double EdgeBvh::distance(Point2 q, double upper) const {
  if (nodes_.empty()) return std::numeric_limits<double>::infinity();
  double best2 = std::isfinite(upper) ? upper * upper : std::numeric_limits<double>::infinity();
  std::uint32_t stack[64];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Node& node = nodes_[stack[--top]];
    if (box_distance2(node.box, q) >= best2) continue;
    if (node.leaf) {
      for (std::uint32_t i = node.left; i < node.left + node.right; ++i) {
        best2 = std::min(best2, segment_distance2(q, segments_[i]));
      }
      continue;
    }
    // Visit the nearer child first so the bound tightens quickly.
    const double dl = box_distance2(nodes_[node.left].box, q);
    const double dr = box_distance2(nodes_[node.right].box, q);
    if (dl <= dr) {
      stack[top++] = node.right;
      stack[top++] = node.left;
    } else {
      stack[top++] = node.left;
      stack[top++] = node.right;
    }
  }
  return std::sqrt(best2);
}

}  // namespace cheeger
