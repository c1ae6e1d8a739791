#include "postlie/lie.hpp"
#include "postlie/matrix_model.hpp"
#include "postlie/reference.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace postlie;
using namespace postlie::lie;

namespace {

// Strictly upper triangular n x n matrices: any product of n of them is zero,
// so exponentials are finite sums and BCH through degree n-1 is exact.
constexpr int nil_dim = 6;

RatMatrix random_nilpotent(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    RatMatrix m(nil_dim);
    for (int i = 0; i < nil_dim; ++i)
        for (int j = i + 1; j < nil_dim; ++j) {
            m(i, j) = Rational(num(rng), den(rng));
            m(i, j).canonicalize();
        }
    return m;
}

RatMatrix matrix_exp(const RatMatrix& a)
{
    RatMatrix sum = RatMatrix::identity(nil_dim);
    RatMatrix power = RatMatrix::identity(nil_dim);
    for (int k = 1; k < nil_dim; ++k) {
        power = power * a * Rational(1, k);
        sum += power;
    }
    return sum;
}

RatMatrix commutator(const RatMatrix& x, const RatMatrix& y) { return x * y - y * x; }

} // namespace

TEST(WordSeries, Products)
{
    const WordSeries a = WordSeries::letter('a', 3), b = WordSeries::letter('b', 3);
    const WordSeries ab = a * b;
    EXPECT_EQ(ab.coefficient("ab"), Rational(1));
    EXPECT_EQ((ab * ab).terms().size(), 0u);  // degree 4 is truncated
    EXPECT_EQ((a + b).order(), 3);
}

TEST(WordSeries, ExpLogInverse)
{
    const WordSeries x = WordSeries::letter('a', 5) + WordSeries::letter('b', 5, Rational(-2, 3));
    EXPECT_EQ(log(exp(x)), x);
    EXPECT_EQ(exp(x).coefficient("aa"), Rational(1, 2));
}

TEST(Bracket, ExpandAndRightNormed)
{
    const Bracket ab = Bracket::of(Bracket::letter('a'), Bracket::letter('b'));
    EXPECT_EQ(ab.str(), "[a,b]");
    const WordSeries w = ab.expand();
    EXPECT_EQ(w.coefficient("ab"), Rational(1));
    EXPECT_EQ(w.coefficient("ba"), Rational(-1));
    EXPECT_EQ(Bracket::right_normed("aab").str(), "[a,[a,b]]");
    EXPECT_EQ(Bracket::right_normed("aab").degree(), 3);
}

TEST(Dynkin, ProjectsLieElements)
{
    const Bracket aab = Bracket::right_normed("aab");
    const BracketExpr e = dynkin_project(aab.expand(), 3);
    ASSERT_EQ(e.terms().size(), 1u);
    EXPECT_EQ(e.terms()[0].first.str(), "[a,[a,b]]");
    EXPECT_EQ(e.terms()[0].second, Rational(1));

    WordSeries not_lie(2);
    not_lie.add("ab", 1);
    EXPECT_THROW(dynkin_project(not_lie, 2), std::domain_error);
}

TEST(Dynkin, RoundTripOnBracketedWords)
{
    // Right-normed brackets survive expand + project.
    const std::vector<Word> words = {"ab", "aab", "bab", "aaab", "baab", "abab", "bbab"};
    for (const auto& w : words) {
        const WordSeries expanded = Bracket::right_normed(w).expand();
        const int n = static_cast<int>(w.size());
        EXPECT_EQ(dynkin_project(expanded, n).expand(n), expanded) << w;
    }
}

TEST(Bch, ReferenceLowDegreeTerms)
{
    const BchTable t = bch_table(6);
    for (int n = 1; n <= 4; ++n)
        EXPECT_EQ(t.component(n), reference::bch(n)) << "degree " << n;
    EXPECT_THROW(t.component(7), std::out_of_range);
}

TEST(Bch, WordLevelMatchesLogOfProduct)
{
    const int order = 6;
    const WordSeries a = WordSeries::letter('a', order), b = WordSeries::letter('b', order);
    EXPECT_EQ(bch_words(order), log(exp(a) * exp(b)));
}

TEST(Bch, ExactOnNilpotentMatrices)
{
    const BchTable t = bch_table(nil_dim - 1);
    BracketExpr all;
    for (int n = 1; n <= t.max_degree(); ++n)
        for (const auto& [m, c] : t.component(n).terms())
            all.add(m, c);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const RatMatrix a = random_nilpotent(rng), b = random_nilpotent(rng);
        const RatMatrix z = evaluate(all, a, b, RatMatrix(nil_dim), commutator);
        EXPECT_EQ(matrix_exp(z), matrix_exp(a) * matrix_exp(b)) << "trial " << trial;
    }
}

TEST(Bch, DegenerateArguments)
{
    const int order = 6;
    const WordSeries a = WordSeries::letter('a', order);
    const WordSeries zero(order);
    EXPECT_EQ(log(exp(a) * exp(zero)), a);
    EXPECT_TRUE(log(exp(a) * exp(a * Rational(-1))).is_zero());
    // BCH(a, a) = 2a: every bracket vanishes on equal arguments.
    const BchTable t = bch_table(order);
    for (int n = 2; n <= order; ++n) {
        const RatMatrix m = RatMatrix::unit(3, 0, 1) + RatMatrix::unit(3, 1, 2);
        EXPECT_TRUE(evaluate(t.component(n), m, m, RatMatrix(3), commutator).is_zero()) << n;
    }
}

TEST(Bch, TildeDropsLinearPart)
{
    const BchTable t = bch_tilde(3);
    EXPECT_TRUE(t.component(1).is_zero());
    EXPECT_EQ(t.component(2), bch_table(3).component(2));
}
