#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cheeger/errors.hpp"
#include "cheeger/tv_oracle.hpp"
#include "support/fixtures.hpp"

using namespace cheeger;
using test_support::unit_square;

namespace {

const double kSquareH = 2.0 + std::sqrt(std::numbers::pi);

}  // namespace

TEST(OracleH, UnitSquareCoarse) {
  const OracleResult res = oracle_h(unit_square(), 128);
  EXPECT_EQ(res.resolution, 128);
  EXPECT_NEAR(res.h_approx / kSquareH, 1.0, 0.03);
  EXPECT_GE(res.iterations, 1);
}

TEST(OracleH, LambdaSequenceStrictlyDecreases) {
  for (const char* name : {"square", "k2", "disk256"}) {
    const OracleResult res = oracle_h(test_support::load_fixture(name), 96);
    ASSERT_GE(res.lambdas.size(), 1u) << name;
    for (std::size_t k = 1; k < res.lambdas.size(); ++k) EXPECT_LT(res.lambdas[k], res.lambdas[k - 1]) << name;
    EXPECT_DOUBLE_EQ(res.lambdas.back(), res.h_approx);
  }
}

TEST(OracleH, RatioConsistency) {
  for (const char* name : {"square", "k2", "rectangle"}) {
    const OracleResult res = oracle_h(test_support::load_fixture(name), 96);
    EXPECT_GT(res.final_cells, 0);
    EXPECT_NEAR(res.final_perimeter / res.final_area, res.h_approx, 1e-9 * res.h_approx) << name;
  }
}

TEST(OracleH, ResolutionTooSmall) { EXPECT_THROW(oracle_h(unit_square(), 32), ResolutionTooSmall); }

TEST(OracleH, DisconnectedRaster) {
  // Two unit squares joined by a corridor far thinner than a cell.
  const JordanPolygon p({{0, 0}, {1, 0}, {1, 0.49995}, {1.5, 0.49995}, {1.5, 0}, {2.5, 0}, {2.5, 1}, {1.5, 1},
                         {1.5, 0.50005}, {1, 0.50005}, {1, 1}, {0, 1}});
  EXPECT_THROW(oracle_h(p, 64), Disconnected);
}

TEST(OracleH, RefinementImprovesSquare) {
  const double e256 = std::abs(oracle_h(unit_square(), 256).h_approx - kSquareH);
  const double e512 = std::abs(oracle_h(unit_square(), 512).h_approx - kSquareH);
  EXPECT_LE(e512, e256 + 1e-4);
}
