#include "postlie/forest_algebra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace postlie;

namespace {

using S = Series<Rational>;

S f(const std::string& text, int order = 6, const Rational& c = 1) { return S::of(parse_forest(text), order, c); }

S random_series(std::mt19937_64& rng, int order)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    S s(order);
    for (int n = 0; n <= order; ++n)
        for (const auto& g : enumerate_forests(n))
            if (rng() % 3 == 0)
                s.add(g, Rational(coeff(rng)));
    return s;
}

} // namespace

TEST(ForestAlgebra, ConcatAndBracket)
{
    EXPECT_EQ(concat(f("o"), f("o(o)")), f("o o(o)"));
    EXPECT_EQ(bracket(f("o"), f("o")), S(6));
    EXPECT_EQ(bracket(f("o"), f("o(o)")), f("o o(o)") - f("o(o) o"));
}

TEST(ForestAlgebra, UnshuffleOfTwoVertices)
{
    const Tensor<Rational> d = unshuffle(f("o o"));
    ASSERT_EQ(d.terms.size(), 3u);
    EXPECT_EQ(d.terms.at({parse_forest("o o"), Forest()}), Rational(1));
    EXPECT_EQ(d.terms.at({parse_forest("o"), parse_forest("o")}), Rational(2));
    EXPECT_EQ(d.terms.at({Forest(), parse_forest("o o")}), Rational(1));
}

TEST(ForestAlgebra, TreesArePrimitive)
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& t : enumerate_trees(n))
            EXPECT_TRUE(is_primitive(S::of(Forest(t), 6)));
    EXPECT_FALSE(is_primitive(f("o o")));
    EXPECT_EQ(counit(f("o") + S::unit(6) * Rational(3)), Rational(3));
}

TEST(ForestAlgebra, Grafting)
{
    EXPECT_EQ(graft(f("o"), f("o")), f("o(o)"));
    EXPECT_EQ(graft(f("o"), f("o o")), f("o(o) o") + f("o o(o)"));
    EXPECT_EQ(graft(f("o"), f("o(o)")), f("o(o o)") + f("o(o(o))"));
    // Two trees grafted independently; both on the same vertex keep their order.
    EXPECT_EQ(graft(f("o(o) o"), f("o")), f("o(o(o) o)"));
    EXPECT_EQ(graft(f("o"), S::unit(6)), S(6));
    EXPECT_EQ(graft(S::unit(6), f("o(o)")), f("o(o)"));
}

TEST(ForestAlgebra, GrossmanLarsonLowDegree)
{
    EXPECT_EQ(gl_product(f("o"), f("o")), f("o o") + f("o(o)"));
    EXPECT_EQ(gl_product(S::unit(6), f("o(o)")), f("o(o)"));
    EXPECT_EQ(gl_product(f("o(o)"), S::unit(6)), f("o(o)"));
}

TEST(ForestAlgebra, BothProductsAgreeOnBasis)
{
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m + n <= 5; ++m)
            for (const auto& a : enumerate_forests(n))
                for (const auto& b : enumerate_forests(m))
                    EXPECT_EQ(gl_product(S::of(a, 5), S::of(b, 5)), gl_product_via_bplus<Rational>(a, b, 5))
                        << serialize(a) << " * " << serialize(b);
}

TEST(ForestAlgebra, GrossmanLarsonIsAssociative)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 6; ++i) {
        const S x = random_series(rng, 5), y = random_series(rng, 5), z = random_series(rng, 5);
        EXPECT_EQ(gl_product(gl_product(x, y), z), gl_product(x, gl_product(y, z)));
    }
}

TEST(ForestAlgebra, AntipodeLowDegree)
{
    EXPECT_EQ(gl_antipode(f("o")), -f("o"));
    EXPECT_EQ(gl_antipode(f("o o")), f("o o") + f("o(o)", 6, 2));
    EXPECT_EQ(gl_antipode(S::unit(6)), S::unit(6));
}

TEST(ForestAlgebra, AntipodeConvolutionIdentity)
{
    // m(S (x) id) Delta = unit . counit on every basis forest.
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : enumerate_forests(n)) {
            S sum(5);
            for_each_unshuffle(g, [&](const Forest& l, const Forest& r) {
                sum += gl_product(gl_antipode(S::of(l, 5)), S::of(r, 5));
            });
            EXPECT_TRUE(sum.is_zero()) << serialize(g);
        }
}

TEST(ForestAlgebra, ExponentialsLowDegree)
{
    const S x = f("o", 2);
    EXPECT_EQ(exp_concat(x), S::unit(2) + x + f("o o", 2, Rational(1, 2)));
    EXPECT_EQ(exp_gl(x), S::unit(2) + x + f("o o", 2, Rational(1, 2)) + f("o(o)", 2, Rational(1, 2)));
    EXPECT_THROW(exp_gl(S::unit(2)), std::domain_error);
}

TEST(ForestAlgebra, ExpLogInverse)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 4; ++i) {
        S x = random_series(rng, 4);
        x -= S::unit(4) * counit(x);
        EXPECT_EQ(log_concat(exp_concat(x)), x);
        EXPECT_EQ(log_gl(exp_gl(x)), x);
    }
}

TEST(ForestAlgebra, ExponentialOfPrimitiveIsGrouplike)
{
    const S x = f("o", 5) + f("o(o)", 5, Rational(-1, 3));
    EXPECT_TRUE(is_grouplike(exp_concat(x)));
    EXPECT_TRUE(is_grouplike(exp_gl(x)));
    EXPECT_FALSE(is_grouplike(S::unit(5) + x + f("o o", 5)));
}

TEST(ForestAlgebra, TruncationOrders)
{
    EXPECT_EQ((f("o", 3) + f("o", 5)).order(), 5);
    EXPECT_EQ(gl_product(f("o", 3), f("o", 5)).order(), 3);
    EXPECT_TRUE(S::of(parse_forest("o o o"), 2).is_zero());
}
