#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cheeger/errors.hpp"
#include "cheeger/geometry.hpp"
#include "cheeger/koch.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace cheeger;
using test_support::unit_square;

namespace {

const double kSqrt3 = std::sqrt(3.0);

JordanPolygon triangle_side3() {
  return JordanPolygon({{0, 0}, {3, 0}, {1.5, 1.5 * kSqrt3}});
}

}  // namespace

TEST(Polygon, RejectsTooFewVertices) {
  EXPECT_THROW(JordanPolygon({{0, 0}, {1, 0}}), InvalidPolygon);
}

TEST(Polygon, RejectsZeroLengthEdge) {
  EXPECT_THROW(JordanPolygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), InvalidPolygon);
}

TEST(Polygon, RejectsZeroArea) {
  EXPECT_THROW(JordanPolygon({{0, 0}, {1, 0}, {2, 0}}), InvalidPolygon);
}

TEST(Polygon, RejectsNonFiniteVertex) {
  EXPECT_THROW(JordanPolygon({{0, 0}, {1, 0}, {0, std::nan("")}}), InvalidPolygon);
}

TEST(Polygon, RejectsSelfIntersection) {
  EXPECT_THROW(JordanPolygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), InvalidPolygon);
}

TEST(Polygon, RejectsTouchingNonAdjacentEdges) {
  // Vertex (1, 0) lies on the edge from (0, 0) to (2, 0).
  EXPECT_THROW(JordanPolygon({{0, 0}, {2, 0}, {2, 2}, {1, 0.0}, {0, 2}}), InvalidPolygon);
}

TEST(Polygon, TrustedSkipsSimplicityCheck) {
  EXPECT_NO_THROW(JordanPolygon({{0, 0}, {1, 1}, {1, 0}, {0, 1.5}}, JordanPolygon::Validation::trusted));
}

TEST(Polygon, ClockwiseInputIsReversed) {
  const JordanPolygon p({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  EXPECT_GT(signed_area(p.vertices()), 0.0);
  EXPECT_DOUBLE_EQ(polygon_area(p), 1.0);
}

TEST(Polygon, CollinearVerticesAllowed) {
  const JordanPolygon p({{0, 0}, {1, 0}, {2, 0}, {1, 1}});
  EXPECT_DOUBLE_EQ(polygon_area(p), 1.0);
}

TEST(PolygonArea, UnitSquare) { EXPECT_DOUBLE_EQ(polygon_area(unit_square()), 1.0); }

TEST(PolygonArea, TriangleSide3) { EXPECT_NEAR(polygon_area(triangle_side3()), 9.0 * kSqrt3 / 4.0, 1e-14); }

TEST(PolygonArea, K2StarIsK1PlusThreeUnitTriangles) {
  const double expected = 9.0 * kSqrt3 / 4.0 + 3.0 * kSqrt3 / 4.0;
  EXPECT_NEAR(polygon_area(koch_polygon(2)), expected, 1e-13);
  EXPECT_NEAR(expected, 3.0 * kSqrt3, 1e-14);
}

TEST(PolygonPerimeter, UnitSquare) { EXPECT_DOUBLE_EQ(polygon_perimeter(unit_square()), 4.0); }

TEST(PolygonPerimeter, TriangleSide3) { EXPECT_NEAR(polygon_perimeter(triangle_side3()), 9.0, 1e-14); }

TEST(PolygonPerimeter, KochStepsGrowByFourThirds) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_NEAR(polygon_perimeter(koch_polygon(n)), 9.0 * std::pow(4.0 / 3.0, n - 1), 1e-11) << "n = " << n;
  }
}

TEST(SignedDistance, SquareCenterAndOutside) {
  EXPECT_DOUBLE_EQ(signed_distance({0.5, 0.5}, unit_square()), 0.5);
  EXPECT_DOUBLE_EQ(signed_distance({2.0, 0.5}, unit_square()), -1.0);
  EXPECT_DOUBLE_EQ(signed_distance({1.0, 0.5}, unit_square()), 0.0);
}

TEST(SignedDistance, TriangleIncenter) {
  const Point2 centroid{1.5, 0.5 * kSqrt3};
  EXPECT_NEAR(signed_distance(centroid, triangle_side3()), kSqrt3 / 2.0, 1e-14);
}

TEST(Convexity, Examples) {
  EXPECT_TRUE(is_convex(unit_square()));
  EXPECT_FALSE(is_convex(koch_polygon(2)));
  EXPECT_TRUE(is_convex(JordanPolygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}})));
}

TEST(ChebyshevCenter, UnitSquare) {
  const InscribedDisk d = chebyshev_center(unit_square());
  EXPECT_NEAR(d.center.x, 0.5, 1e-9);
  EXPECT_NEAR(d.center.y, 0.5, 1e-9);
  EXPECT_NEAR(d.radius, 0.5, 1e-12);
}

TEST(ChebyshevCenter, TriangleIncenter) {
  const InscribedDisk d = chebyshev_center(triangle_side3());
  EXPECT_NEAR(d.center.x, 1.5, 1e-8);
  EXPECT_NEAR(d.center.y, 0.5 * kSqrt3, 1e-8);
  EXPECT_NEAR(d.radius, kSqrt3 / 2.0, 1e-12);
}

TEST(ChebyshevCenter, RectangleUsesSymmetricCenter) {
  const InscribedDisk d = chebyshev_center(test_support::rectangle(2, 1));
  EXPECT_NEAR(d.center.x, 1.0, 1e-8);
  EXPECT_NEAR(d.center.y, 0.5, 1e-8);
  EXPECT_NEAR(d.radius, 0.5, 1e-12);
}

TEST(ChebyshevCenter, RejectsNonConvex) { EXPECT_THROW(chebyshev_center(koch_polygon(2)), NonConvexInput); }

TEST(ArcPolygon, FullCircle) {
  const ArcPolygon c({Arc{{1, 2}, 0.5, 0.3, 2 * std::numbers::pi, true}});
  EXPECT_NEAR(c.area(), std::numbers::pi * 0.25, 1e-14);
  EXPECT_NEAR(c.perimeter(), std::numbers::pi, 1e-14);
}

TEST(ArcPolygon, HalfDiskMixedPieces) {
  const ArcPolygon c({Segment{{-1, 0}, {1, 0}}, Arc{{0, 0}, 1.0, 0.0, std::numbers::pi, true}});
  EXPECT_NEAR(c.area(), std::numbers::pi / 2.0, 1e-14);
  EXPECT_NEAR(c.perimeter(), 2.0 + std::numbers::pi, 1e-14);
  EXPECT_NEAR(c.total_arc_sweep(), std::numbers::pi, 1e-15);
}

TEST(ArcPolygon, RejectsOpenChain) {
  EXPECT_THROW(ArcPolygon({Segment{{0, 0}, {1, 0}}, Segment{{1, 0}, {0, 1}}}), InvalidPolygon);
}

TEST(ArcPolygon, RejectsBadArc) {
  EXPECT_THROW(ArcPolygon({Arc{{0, 0}, 0.0, 0.0, 1.0, true}}), InvalidPolygon);
  EXPECT_THROW(ArcPolygon({Arc{{0, 0}, 1.0, 0.0, 7.0, true}}), InvalidPolygon);
}

// ---------------------------------------------------------------------------
// Properties

TEST(GeometryProperty, AreaPerimeterUnderSimilarities) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> shift(-50.0, 50.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  const std::vector<JordanPolygon> shapes{unit_square(), triangle_side3(), koch_polygon(3),
                                          test_support::load_fixture("heart")};
  for (const JordanPolygon& p : shapes) {
    const double a = polygon_area(p);
    const double per = polygon_perimeter(p);
    for (int trial = 0; trial < 20; ++trial) {
      const double rot = angle(rng);
      const Point2 t{shift(rng), shift(rng)};
      const JordanPolygon moved = p.transformed(1.0, rot, t);
      EXPECT_NEAR(polygon_area(moved), a, 1e-12 * a);
      EXPECT_NEAR(polygon_perimeter(moved), per, 1e-12 * per);
      const double lambda = scale(rng);
      const JordanPolygon scaled = p.transformed(lambda, rot, t);
      EXPECT_NEAR(polygon_area(scaled), lambda * lambda * a, 1e-12 * lambda * lambda * a);
      EXPECT_NEAR(polygon_perimeter(scaled), lambda * per, 1e-12 * lambda * per);
    }
  }
}

TEST(GeometryProperty, SignedDistanceSignMatchesWindingNumber) {
  std::mt19937_64 rng(7);
  const std::vector<JordanPolygon> shapes{koch_polygon(3), test_support::load_fixture("heart"),
                                          test_support::load_fixture("corridor")};
  for (const JordanPolygon& p : shapes) {
    const BBox box = p.bbox();
    std::uniform_real_distribution<double> ux(box.min.x - 0.2, box.max.x + 0.2);
    std::uniform_real_distribution<double> uy(box.min.y - 0.2, box.max.y + 0.2);
    for (int k = 0; k < 1000; ++k) {
      const Point2 q{ux(rng), uy(rng)};
      const double sd = signed_distance(q, p);
      const bool inside = test_support::winding_number(q, p.vertices()) != 0;
      EXPECT_EQ(sd > 0.0, inside) << q.x << ", " << q.y;
      EXPECT_NEAR(std::abs(sd), test_support::brute_boundary_distance(q, p.vertices()), 1e-14);
    }
  }
}

TEST(GeometryProperty, ChebyshevRadiusMatchesSampledMaximum) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    // Random convex polygon: sorted angles on an ellipse.
    const int n = 3 + trial;
    std::vector<double> angles;
    for (int k = 0; k < n; ++k) angles.push_back(2.0 * std::numbers::pi * (k + 0.8 * jitter(rng)) / n);
    const double ax = radius(rng);
    const double by = radius(rng);
    std::vector<Point2> v;
    for (double a : angles) v.push_back({ax * std::cos(a), by * std::sin(a)});
    const JordanPolygon p(std::move(v));
    ASSERT_TRUE(is_convex(p));
    const InscribedDisk d = chebyshev_center(p);
    const int samples = 200;
    const double cell = p.bbox().longer_side() / samples;
    double best = -1.0;
    for (int j = 0; j <= samples; ++j) {
      for (int i = 0; i <= samples; ++i) {
        const Point2 q{p.bbox().min.x + i * cell, p.bbox().min.y + j * cell};
        best = std::max(best, signed_distance(q, p));
      }
    }
    EXPECT_LE(best, d.radius + 1e-12);
    EXPECT_NEAR(best, d.radius, 2.0 * cell);
    EXPECT_NEAR(signed_distance(d.center, p), d.radius, 1e-7);
  }
}
