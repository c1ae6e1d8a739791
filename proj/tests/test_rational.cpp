#include "postlie/rational.hpp"

#include <gtest/gtest.h>

using namespace postlie;

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
    EXPECT_EQ(to_string(Rational(5)), "5");
    EXPECT_THROW(parse_rational("1/0"), std::exception);
    EXPECT_THROW(parse_rational("x"), std::exception);
}

TEST(Rational, FactorialAndBinomial)
{
    EXPECT_EQ(factorial(0), Rational(1));
    EXPECT_EQ(factorial(10), Rational(3628800));
    // Pascal's rule as the oracle.
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k < n; ++k)
            EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k)) << n << " " << k;
}

TEST(Laurent, ArithmeticIsSparse)
{
    const Laurent l = Laurent::weight();
    const Laurent inv = Laurent::monomial(-1);
    EXPECT_EQ(l * inv, Laurent(1));
    EXPECT_TRUE((l - l).is_zero());
    EXPECT_TRUE((l - l).terms().empty());

    const Laurent p = (l + Laurent(1)) * (l - Laurent(1));
    EXPECT_EQ(p.coefficient(2), Rational(1));
    EXPECT_EQ(p.coefficient(1), Rational(0));
    EXPECT_EQ(p.coefficient(0), Rational(-1));
    EXPECT_EQ(p.terms().size(), 2u);
    EXPECT_EQ(p.min_exponent(), 0);
    EXPECT_EQ(p.max_exponent(), 2);
}

TEST(Laurent, Evaluate)
{
    const Laurent p = Laurent::monomial(-2, Rational(3)) + Laurent::monomial(1, Rational(1, 2));
    EXPECT_EQ(p.evaluate(Rational(2)), Rational(3, 4) + Rational(1));
    EXPECT_THROW(p.evaluate(Rational(0)), std::exception);
    EXPECT_EQ(Laurent::weight().evaluate(0), Rational(0));
    EXPECT_EQ(p.shifted(2), Laurent(3) + Laurent::monomial(3, Rational(1, 2)));
}

TEST(Laurent, Text)
{
    const Laurent p = (Laurent::weight() - Laurent(1)) * Rational(1, 24);
    EXPECT_EQ(to_string(p), "(1/24)*L^1 + (-1/24)*L^0");
    EXPECT_EQ(to_string(Laurent()), "0");
}
