#include <gtest/gtest.h>

#include "circuit/lp.hpp"

namespace circuit {
namespace {

using Row = std::vector<Ratio>;

TEST(Simplex, SmallOptimum) {
  // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
  auto r = solve_lp({Row{1, 2, 1, 0}, Row{3, 1, 0, 1}}, Row{4, 6}, Row{-1, -1, 0, 0});
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, Ratio(-14, 5));
  EXPECT_EQ(r.x[0], Ratio(8, 5));
  EXPECT_EQ(r.x[1], Ratio(6, 5));
}

TEST(Simplex, Infeasible) {
  // x + y = -1 with x, y >= 0
  EXPECT_EQ(solve_lp({Row{1, 1}}, Row{-1}, Row{0, 0}).status, LpStatus::kInfeasible);
}

TEST(Simplex, Unbounded) {
  // min -x s.t. x - y = 1
  EXPECT_EQ(solve_lp({Row{1, -1}}, Row{1}, Row{-1, 0}).status, LpStatus::kUnbounded);
}

TEST(Simplex, RedundantRowsDropped) {
  auto r = solve_lp({Row{1, 1}, Row{2, 2}, Row{1, 1}}, Row{3, 6, 3}, Row{1, 2});
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, Ratio(3));
}

TEST(Simplex, NegativeRhsRowsFlipped) {
  // -x = -5
  auto r = solve_lp({Row{-1}}, Row{-5}, Row{1});
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.x[0], Ratio(5));
}

TEST(Simplex, DegenerateCycleExample) {
  // Beale's example; cycles under the largest-coefficient rule.
  std::vector<Row> a = {
      Row{Ratio(1, 4), -8, -1, 9, 1, 0, 0},
      Row{Ratio(1, 2), -12, Ratio(-1, 2), 3, 0, 1, 0},
      Row{0, 0, 1, 0, 0, 0, 1},
  };
  auto r = solve_lp(a, Row{0, 0, 1}, Row{Ratio(-3, 4), 20, Ratio(-1, 2), 6, 0, 0, 0});
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, Ratio(-5, 4));
}

TEST(Simplex, EmptyConstraints) {
  auto r = solve_lp({}, {}, Row{1, 0});
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, Ratio(0));
  EXPECT_EQ(solve_lp({}, {}, Row{-1}).status, LpStatus::kUnbounded);
}

TEST(Simplex, ShapeChecked) {
  EXPECT_THROW(solve_lp({Row{1, 2}}, Row{1}, Row{1}), std::invalid_argument);
  EXPECT_THROW(solve_lp({Row{1}}, Row{}, Row{1}), std::invalid_argument);
}

}  // namespace
}  // namespace circuit
