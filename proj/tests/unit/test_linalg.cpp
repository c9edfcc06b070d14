#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pealab/error.hpp"
#include "pealab/linalg.hpp"
#include "pealab/rational.hpp"

using namespace pealab;
using oracle::q;

TEST(Rational, ToStringAlwaysHasDenominator) {
  EXPECT_EQ(to_string(q(3)), "3/1");
  EXPECT_EQ(to_string(q(0)), "0/1");
  EXPECT_EQ(to_string(q(-2, 4)), "-1/2");
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), q(7));
  EXPECT_EQ(parse_rational("6/4"), q(3, 2));
  EXPECT_EQ(parse_rational("-1/3"), q(-1, 3));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Linalg, RankOfDependentRows) {
  linalg::Matrix m{{q(1), q(2)}, {q(2), q(4)}, {q(0), q(1)}};
  EXPECT_EQ(linalg::rank(m), 2u);
  EXPECT_EQ(linalg::rank({{q(0), q(0)}}), 0u);
}

TEST(Linalg, SolveAffineGivesParticularAndKernel) {
  // x + y + z = 1, x − z = 0
  linalg::Matrix a{{q(1), q(1), q(1)}, {q(1), q(0), q(-1)}};
  auto sol = linalg::solve_affine(a, {q(1), q(0)}, 3);
  ASSERT_TRUE(sol);
  ASSERT_EQ(sol->kernel.size(), 1u);
  EXPECT_EQ(dot(a[0], sol->particular), q(1));
  EXPECT_EQ(dot(a[1], sol->particular), q(0));
  EXPECT_EQ(dot(a[0], sol->kernel[0]), q(0));
  EXPECT_EQ(dot(a[1], sol->kernel[0]), q(0));
}

TEST(Linalg, InconsistentSystem) {
  linalg::Matrix a{{q(1), q(1)}, {q(2), q(2)}};
  EXPECT_FALSE(linalg::solve_affine(a, {q(1), q(3)}, 2));
}

TEST(Linalg, FindNonnegative) {
  // x − y = 1 has x = 1, y = 0.
  auto x = linalg::find_nonnegative({{q(1), q(-1)}}, {q(1)}, 2);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0] - (*x)[1], q(1));
  EXPECT_GE((*x)[0], 0);
  EXPECT_GE((*x)[1], 0);
  // x + y = −1 has no nonnegative solution.
  EXPECT_FALSE(linalg::find_nonnegative({{q(1), q(1)}}, {q(-1)}, 2));
}

TEST(Linalg, FindNonnegativeAgreesWithUniqueSolve) {
  linalg::Matrix a{{q(2), q(1)}, {q(1), q(3)}};
  const oracle::Vec b{q(5), q(10)};
  auto expected = oracle::unique_solution(a, b);
  auto got = linalg::find_nonnegative(a, b, 2);
  ASSERT_TRUE(expected && got);
  EXPECT_EQ(*expected, *got);
}
