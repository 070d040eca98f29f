#include <gtest/gtest.h>

#include "hirreg/arith.hpp"
#include "reference.hpp"

using hirreg::ceil_div;

TEST(CeilDiv, NegativeNumeratorsRoundTowardPositiveInfinity) {
  EXPECT_EQ(ceil_div(-1, 4), 0);
  EXPECT_EQ(ceil_div(4, 4), 1);
  EXPECT_EQ(ceil_div(-7, 8), 0);
  EXPECT_EQ(ceil_div(-8, 8), -1);
  EXPECT_EQ(ceil_div(-9, 8), -1);
  EXPECT_EQ(ceil_div(1, 8), 1);
  EXPECT_EQ(ceil_div(0, 5), 0);
}

TEST(CeilDiv, RejectsNonPositiveDivisor) {
  EXPECT_THROW(ceil_div(3, 0), hirreg::Error);
  EXPECT_THROW(ceil_div(3, -2), hirreg::Error);
  try {
    ceil_div(1, 0);
  } catch (const hirreg::Error& e) {
    EXPECT_EQ(e.code(), hirreg::ErrorCode::InvalidParameter);
  }
}

TEST(CeilDiv, SoundnessAgainstScan) {
  for (std::int64_t q = 1; q <= 40; ++q) {
    for (std::int64_t p = -300; p <= 300; ++p) {
      auto x = ceil_div(p, q);
      ASSERT_GE(q * x, p) << p << "/" << q;
      ASSERT_LT(q * (x - 1), p) << p << "/" << q;
      ASSERT_EQ(x, reference::ceil_by_scan(p, q));
    }
  }
}
