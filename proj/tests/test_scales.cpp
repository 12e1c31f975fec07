// Scale-grid tests: the geometric law a_j = a0 * 2^{-j/Q} and its input
// validation.

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "wavesig/scales.hpp"

namespace {

using wavesig::make_scale_grid;

TEST(Scales, GeometricLawHoldsExactly) {
  const auto grid = make_scale_grid(0.125, 3, 16);
  ASSERT_EQ(grid.count(), 16u);
  EXPECT_DOUBLE_EQ(grid.scales[0], 0.125);
  for (int j = 0; j < 16; ++j) {
    EXPECT_NEAR(grid.scales[std::size_t(j)], 0.125 * std::pow(2.0, -j / 3.0), 1e-16)
        << "j=" << j;
  }
  // Whole octaves are exact halvings: a_{j+Q} = a_j / 2.
  for (int j = 0; j + 3 < 16; ++j) {
    EXPECT_DOUBLE_EQ(grid.scales[std::size_t(j + 3)], grid.scales[std::size_t(j)] / 2.0);
  }
  // Sixteen scales at three voices per octave span exactly five octaves.
  EXPECT_DOUBLE_EQ(grid.scales[15], grid.scales[0] / 32.0);
}

TEST(Scales, StrictlyDecreasingAndPositive) {
  const auto grid = make_scale_grid(2.0, 5, 40);
  for (std::size_t j = 0; j < grid.count(); ++j) {
    EXPECT_GT(grid.scales[j], 0.0);
    if (j > 0) {
      EXPECT_LT(grid.scales[j], grid.scales[j - 1]);
    }
  }
}

TEST(Scales, SingleScaleGrid) {
  const auto grid = make_scale_grid(1.0, 1, 1);
  ASSERT_EQ(grid.count(), 1u);
  EXPECT_DOUBLE_EQ(grid.scales[0], 1.0);
}

TEST(Scales, RecordsItsParameters) {
  const auto grid = make_scale_grid(0.25, 4, 8);
  EXPECT_DOUBLE_EQ(grid.base_scale, 0.25);
  EXPECT_EQ(grid.voices_per_octave, 4);
}

TEST(Scales, RejectsBadParameters) {
  EXPECT_THROW(make_scale_grid(0.0, 3, 16), std::invalid_argument);
  EXPECT_THROW(make_scale_grid(-1.0, 3, 16), std::invalid_argument);
  EXPECT_THROW(make_scale_grid(1.0, 0, 16), std::invalid_argument);
  EXPECT_THROW(make_scale_grid(1.0, 3, 0), std::invalid_argument);
  EXPECT_THROW(make_scale_grid(std::numeric_limits<double>::infinity(), 3, 16),
               std::invalid_argument);
}

}  // namespace
