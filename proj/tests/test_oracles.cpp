#include "oracles/oracle.hpp"

#include <gtest/gtest.h>

using oracle::frac;
using oracle::P;
using oracle::Q;

TEST(Oracle, SylvesterDeterminantOnSmallCases) {
  EXPECT_EQ(oracle::sylvester_resultant(P{-1, 0, 1}, P{0, 2}), Q(-4));
  EXPECT_EQ(oracle::sylvester_resultant(P{-1, 1}, P{-2, 1}), Q(-1));
  // Res(x - a, q) = q(a)
  EXPECT_EQ(oracle::sylvester_resultant(P{-3, 1}, P{1, 0, 1}), Q(10));
}

TEST(Oracle, DescartesCountsKnownRoots) {
  const P cubic = {0, -3, 0, 1};  // x^3 - 3x
  EXPECT_EQ(oracle::distinct_roots(cubic), 3);
  EXPECT_EQ(oracle::distinct_roots(cubic, Q(0), Q(2)), 1);
  EXPECT_EQ(oracle::distinct_roots(cubic, Q(0), std::nullopt), 1);
  EXPECT_EQ(oracle::distinct_roots(cubic, std::nullopt, Q(0)), 1);
  EXPECT_EQ(oracle::distinct_roots(P{1, 0, 1}), 0);
  EXPECT_EQ(oracle::distinct_roots(P{-2, 0, 1}, frac(1414, 1000), frac(1415, 1000)), 1);
}

TEST(Oracle, MultiplicityChainCounts) {
  // x^3 (x - 1)
  EXPECT_EQ(oracle::roots_with_multiplicity(P{0, 0, 0, -1, 1}), 4);
  EXPECT_EQ(oracle::distinct_roots(P{0, 0, 0, -1, 1}), 2);
  // (x^2 + 1)^2 x^2
  const P q = oracle::mul(oracle::mul(P{1, 0, 1}, P{1, 0, 1}), P{0, 0, 1});
  EXPECT_EQ(oracle::roots_with_multiplicity(q), 2);
}

TEST(Oracle, NaiveHExpansion) {
  // x^2 - 1 at k = 1: 4x^2 - 2(x^2 - 1) = 2x^2 + 2
  EXPECT_EQ(oracle::h_naive(P{-1, 0, 1}, 1), (P{2, 0, 2}));
}

TEST(Oracle, ComplexEvaluation) {
  auto [re, im] = oracle::eval_complex(P{0, 0, 1}, 1, 1);
  EXPECT_EQ(re, 0);
  EXPECT_EQ(im, 2);
}
