#include <gtest/gtest.h>

#include "hirreg/bounds.hpp"

using namespace hirreg;

TEST(LowerBound, Examples) {
  EXPECT_EQ(lower_bound(LabelingKind::Vertex, 2, 4, 4), 2);
  EXPECT_EQ(lower_bound(LabelingKind::Edge, 4, 4, 4), 2);
  for (auto kind : kAllKinds) EXPECT_EQ(lower_bound(kind, 1, 6, 7), 1);
  EXPECT_EQ(lower_bound(LabelingKind::Total, 10, 4, 4), 3);  // 1 + ceil(9/8)
}

TEST(LowerBound, ZeroDenominator) {
  EXPECT_THROW(lower_bound(LabelingKind::Vertex, 3, 0, 5), Error);
  EXPECT_THROW(lower_bound(LabelingKind::Edge, 3, 5, 0), Error);
  EXPECT_THROW(lower_bound(LabelingKind::Total, 3, 0, 0), Error);
  EXPECT_THROW(lower_bound(LabelingKind::Vertex, 0, 4, 4), Error);
  EXPECT_NO_THROW(lower_bound(LabelingKind::Vertex, 3, 4, 0));
}

TEST(UpperBoundExponent, Examples) {
  EXPECT_EQ(upper_bound_exponent(LabelingKind::Vertex, make_grid({2, 2})), 3);
  EXPECT_EQ(upper_bound_exponent(LabelingKind::Edge, make_grid({2, 2})), 3);
  EXPECT_EQ(upper_bound_exponent(LabelingKind::Total, make_grid({2, 3})), 6);
  EXPECT_THROW(upper_bound_exponent(LabelingKind::Vertex, Graph{}), Error);
  EXPECT_THROW(upper_bound_exponent(LabelingKind::Edge, make_grid({1, 1})), Error);
}

TEST(BoundReport, UpperStaysSymbolicWhenHuge) {
  auto r = bound_report(LabelingKind::Edge, CoverShape::checked(4, 6, 40));
  EXPECT_EQ(r.upper_exponent, 2 * 160 - 44 - 1);
  EXPECT_FALSE(r.upper().has_value());
  auto small = bound_report(LabelingKind::Vertex, CoverShape::checked(2, 2, 3));
  EXPECT_EQ(small.upper(), 32);
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form_strength(LabelingKind::Vertex, CoverShape::checked(2, 2, 3)), 2);
  EXPECT_EQ(closed_form_strength(LabelingKind::Edge, CoverShape::checked(2, 2, 7)), 3);
  for (auto kind : kAllKinds) {
    EXPECT_EQ(closed_form_strength(kind, CoverShape::checked(3, 5, 5)), 1);
  }
  EXPECT_EQ(closed_form_strength(LabelingKind::Total, CoverShape::checked(2, 2, 11)), 3);
}

TEST(ClosedForm, TightSandwichedAndMonotone) {
  for (auto kind : kAllKinds) {
    for (int m = 2; m <= 5; ++m) {
      for (int c = m; c <= 7; ++c) {
        std::int64_t previous = 0;
        for (int n = c; n <= 60; ++n) {
          auto shape = CoverShape::checked(m, c, n);
          auto closed = closed_form_strength(kind, shape);
          auto report = bound_report(kind, shape);
          ASSERT_EQ(closed, lower_bound(kind, n - c + 1, m * c, 2 * m * c - m - c));
          ASSERT_LE(report.lower, closed);
          if (auto upper = report.upper()) {
            ASSERT_LE(closed, *upper);
          }
          ASSERT_GE(closed, previous);
          previous = closed;
        }
      }
    }
  }
}
