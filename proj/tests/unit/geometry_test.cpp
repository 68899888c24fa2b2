#include <gtest/gtest.h>

#include <convdec/errors.hpp>
#include <convdec/geometry.hpp>

#include "support/oracles.hpp"
#include "support/random_instances.hpp"

using namespace convdec;

namespace {

Rational q(long p, long d = 1)
{
  return make_rational(p, d);
}

} // namespace

TEST(Rational, ParsesAndPrintsLowestTerms)
{
  EXPECT_EQ(parse_rational("6/4"), q(3, 2));
  EXPECT_EQ(parse_rational(" -2/6 "), q(-1, 3));
  EXPECT_EQ(parse_rational("7"), q(7));
  EXPECT_EQ(to_string(q(6, 4)), "3/2");
  EXPECT_EQ(to_string(q(-4, 2)), "-2");
  EXPECT_EQ(to_string(parse_rational("123456789012345678901234567890/3")), "41152263004115226300411522630");
}

TEST(Rational, RejectsMalformedText)
{
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("0.5"), ParseError);
}

TEST(Rational, CeilSqrt)
{
  EXPECT_EQ(ceil_sqrt(1), 1u);
  EXPECT_EQ(ceil_sqrt(2), 2u);
  EXPECT_EQ(ceil_sqrt(4), 2u);
  EXPECT_EQ(ceil_sqrt(5), 3u);
  EXPECT_EQ(ceil_sqrt(16), 4u);
  EXPECT_EQ(ceil_sqrt(17), 5u);
}

TEST(RVector, AccessIsBoundsChecked)
{
  RVector v{q(1), q(2)};
  EXPECT_THROW(v[2], std::out_of_range);
  EXPECT_THROW(v + RVector(3), DimensionMismatch);
  EXPECT_EQ(parse_rvector("3, 1/2,-4"), (RVector{q(3), q(1, 2), q(-4)}));
}

TEST(BinaryPoint, RejectsNonBinaryComponents)
{
  EXPECT_THROW((BinaryPoint{0, 2}), std::invalid_argument);
  EXPECT_LT((BinaryPoint{1, 0}), (BinaryPoint{1, 1}));
  EXPECT_LT((BinaryPoint{0, 1}), (BinaryPoint{1, 0}));
}

TEST(Sigma, WorkedExamples)
{
  EXPECT_EQ(sigma(tau({0, 0})), (RVector{q(0), q(0)}));
  ConvexCombination half(2, {{{1, 0}, q(1, 2)}, {{0, 0}, q(1, 2)}});
  EXPECT_EQ(sigma(half), (RVector{q(1, 2), q(0)}));
  ConvexCombination three(2, {{{1, 1}, q(1, 4)}, {{0, 1}, q(1, 4)}, {{0, 0}, q(1, 2)}});
  EXPECT_EQ(sigma(three), (RVector{q(1, 4), q(1, 2)}));
}

TEST(Tau, PointMass)
{
  for (BinaryPoint p : {BinaryPoint{0, 0}, BinaryPoint{1, 0}, BinaryPoint{1, 1, 0}})
  {
    ConvexCombination t = tau(p);
    EXPECT_EQ(psi(t), 1u);
    EXPECT_EQ(t.weight(p), 1);
  }
}

TEST(ConvexCombination, EnforcesInvariants)
{
  EXPECT_THROW(ConvexCombination(2, {{{1, 0}, q(1, 2)}}), InvalidCombination);
  EXPECT_THROW(ConvexCombination(2, {{{1, 0}, q(3, 2)}, {{0, 0}, q(-1, 2)}}), InvalidCombination);
  EXPECT_THROW(ConvexCombination(2, {{{1, 0, 1}, q(1)}}), InvalidCombination);
  EXPECT_THROW(ConvexCombination(2, {}), InvalidCombination);

  ConvexCombination dropped(2, {{{1, 0}, q(1)}, {{0, 1}, q(0)}});
  EXPECT_EQ(psi(dropped), 1u);
  EXPECT_FALSE(dropped.contains({0, 1}));
}

TEST(ConvexCombination, TransferKeepsMass)
{
  ConvexCombination lambda(2, {{{1, 1}, q(1, 2)}, {{0, 0}, q(1, 2)}});
  lambda.transfer({1, 1}, {0, 1}, q(1, 4));
  EXPECT_EQ(lambda.weight({1, 1}), q(1, 4));
  EXPECT_EQ(lambda.weight({0, 1}), q(1, 4));
  lambda.transfer({1, 1}, {0, 1}, q(1, 4));
  EXPECT_FALSE(lambda.contains({1, 1}));
  EXPECT_EQ(lambda.weight({0, 1}), q(1, 2));
  EXPECT_THROW(lambda.transfer({0, 1}, {0, 0}, q(1)), InvalidCombination);
  EXPECT_THROW(lambda.transfer({1, 1}, {0, 0}, q(1, 8)), InvalidCombination);
}

TEST(Mix, WorkedExamples)
{
  ConvexCombination lambda(2, {{{1, 0}, q(1, 3)}, {{0, 1}, q(2, 3)}});
  EXPECT_EQ(mix(lambda, q(1), tau({1, 1}), q(0)), lambda);

  ConvexCombination merged = mix(tau({0, 0}), q(1, 2), tau({1, 0}), q(1, 2));
  EXPECT_EQ(merged, ConvexCombination(2, {{{0, 0}, q(1, 2)}, {{1, 0}, q(1, 2)}}));

  EXPECT_EQ(mix(tau({1, 0}), q(1, 3), tau({1, 0}), q(2, 3)), tau({1, 0}));
}

TEST(Mix, RejectsBadWeightsAndDimensions)
{
  EXPECT_THROW(mix(tau({0, 0}), q(1, 2), tau({1, 0}), q(1, 3)), InvalidCombination);
  EXPECT_THROW(mix(tau({0, 0}), q(3, 2), tau({1, 0}), q(-1, 2)), InvalidCombination);
  EXPECT_THROW(mix(tau({0, 0}), q(1, 2), tau({1, 0, 0}), q(1, 2)), DimensionMismatch);
}

TEST(Norms, WorkedExamples)
{
  EXPECT_EQ(squared_l2(RVector{q(0), q(0)}), 0);
  EXPECT_EQ(squared_l2(RVector{q(1, 2), q(1, 2)}), q(1, 2));
  EXPECT_EQ(squared_l2(RVector{q(3, 5), q(4, 5)}), 1);

  RVector a{q(1, 3), q(2, 7)};
  EXPECT_EQ(l1_distance(a, a), 0);
  EXPECT_EQ(l1_distance(RVector{q(1, 2), q(1, 2)}, RVector{q(1, 2), q(0)}), q(1, 2));
  EXPECT_EQ(l1_distance(RVector{q(1), q(0)}, RVector{q(0), q(1)}), 2);
  EXPECT_THROW(l1_distance(a, RVector(3)), DimensionMismatch);
}

TEST(GeometryProperties, MixIsExactAndSupportSubadditive)
{
  test_support::InstanceGenerator gen(7);
  for (int trial = 0; trial < 300; ++trial)
  {
    std::size_t n = gen.uniform(1, 8);
    ExplicitProblem cube(ExplicitPolytope(n, {BinaryPoint(std::vector<std::uint8_t>(n, 1))}));
    ConvexCombination a = gen.random_combination(cube, 6);
    ConvexCombination b = gen.random_combination(cube, 6);
    Rational wa = make_rational(static_cast<long>(gen.uniform(0, 12)), 12);
    Rational wb = 1 - wa;

    ConvexCombination m = mix(a, wa, b, wb);
    EXPECT_EQ(sigma(m), wa * sigma(a) + wb * sigma(b));
    EXPECT_EQ(sigma(m), test_support::weighted_sum(m));
    EXPECT_LE(psi(m), psi(a) + psi(b));

    Rational total = 0;
    for (const auto& [p, w] : m)
    {
      EXPECT_GT(w, 0);
      total += w;
    }
    EXPECT_EQ(total, 1);
    RVector barycenter = sigma(m);
    for (const auto& c : barycenter.components())
    {
      EXPECT_GE(c, 0);
      EXPECT_LE(c, 1);
    }
  }
}

TEST(GeometryProperties, NormsVanishOnlyAtZero)
{
  test_support::InstanceGenerator gen(11);
  for (int trial = 0; trial < 300; ++trial)
  {
    std::size_t n = gen.uniform(1, 6);
    RVector a = gen.mixed_objective(n);
    RVector b = gen.mixed_objective(n);
    EXPECT_GE(squared_l2(a - b), 0);
    EXPECT_GE(l1_distance(a, b), 0);
    EXPECT_EQ(sgn(squared_l2(a - b)) == 0, a == b);
    EXPECT_EQ(sgn(l1_distance(a, b)) == 0, a == b);
    EXPECT_EQ(l1_distance(a, a), 0);
  }
}
