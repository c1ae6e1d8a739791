#include "postlie/matrix_model.hpp"

#include <gtest/gtest.h>

using namespace postlie;

namespace {

const RatMatrix E21 = RatMatrix::unit(4, 1, 0);
const RatMatrix E12 = RatMatrix::unit(4, 0, 1);

RatMatrix rb_rhs(const RotaBaxterModel& m, const RatMatrix& x, const RatMatrix& y)
{
    return m.rb(m.rb(x) * y + x * m.rb(y) + m.weight() * (x * y));
}

} // namespace

TEST(RatMatrix, Arithmetic)
{
    const RatMatrix i = RatMatrix::identity(4);
    EXPECT_EQ(i * E21, E21);
    EXPECT_EQ(E21 * E12, RatMatrix::unit(4, 1, 1));
    EXPECT_TRUE((E21 * E21).is_zero());
    EXPECT_EQ((E21 * Rational(3))(1, 0), Rational(3));
}

TEST(RotaBaxter, ProjectionSigns)
{
    const RotaBaxterModel m(4);
    EXPECT_EQ(m.rb(E21), -E21);
    EXPECT_TRUE(m.rb(RatMatrix::identity(4)).is_zero());
    EXPECT_TRUE(m.rb(E12).is_zero());
    EXPECT_EQ(m.rb_tilde(E21), E21 - E21);
    EXPECT_EQ(m.rb_tilde(E12), -E12);
}

TEST(RotaBaxter, IdentityOnUnitMatrices)
{
    const RotaBaxterModel m(4);
    const RatMatrix x = E21 + E12, y = E21;
    EXPECT_EQ(m.rb(x) * m.rb(y), rb_rhs(m, x, y));
    EXPECT_EQ(m.rb(y) * m.rb(x), rb_rhs(m, y, x));
}

TEST(RotaBaxter, RandomSamplesAtSeveralWeights)
{
    for (const Rational w : {Rational(1), Rational(2), Rational(-1, 3)}) {
        const RotaBaxterModel m(4, w);
        std::mt19937_64 rng(42);
        for (int s = 0; s < 20; ++s) {
            const RatMatrix x = m.random_matrix(rng), y = m.random_matrix(rng);
            EXPECT_EQ(m.rb(x) * m.rb(y), rb_rhs(m, x, y));
            const RatMatrix tx = m.rb_tilde(x), ty = m.rb_tilde(y);
            EXPECT_EQ(tx * ty, m.rb_tilde(tx * y + x * ty + w * (x * y)));
        }
        EXPECT_TRUE(verify_rb_identity(m, 20, 9).passed());
    }
}

TEST(MatrixSeries, ExpLog)
{
    const RotaBaxterModel m(3);
    std::mt19937_64 rng(1);
    const MatrixSeries x = MatrixSeries::monomial(m.random_matrix(rng), 1, 5);
    EXPECT_EQ(log1p(exp(x) - MatrixSeries::constant(RatMatrix::identity(3), 5)), x);
    EXPECT_THROW(exp(MatrixSeries::constant(RatMatrix::identity(3), 5)), std::domain_error);
    EXPECT_EQ(first_difference(x, x), -1);
    EXPECT_EQ(first_difference(x, x * Rational(2)), 1);
}

TEST(MatrixSeries, Derivative)
{
    const RatMatrix a = E21 + E12;
    const MatrixSeries s = MatrixSeries::monomial(a, 3, 4);
    EXPECT_EQ(s.derivative(), MatrixSeries::monomial(a * Rational(3), 2, 3));
}

TEST(MatrixModel, GrossmanLarsonExponential)
{
    const RotaBaxterModel m(4);
    std::mt19937_64 rng(2);
    const RatMatrix x = m.random_matrix(rng);
    EXPECT_TRUE(verify_et9(m, x, 6).passed());
    EXPECT_TRUE(verify_et9(m, RatMatrix::identity(4), 4).passed());
    for (int n = 0; n <= 3; ++n)
        EXPECT_TRUE(verify_derivative_identity(m, x, n, 4).passed()) << n;
}

TEST(MatrixModel, SpitzerFirstOrder)
{
    // To first order both sides are 1 + t R(a).
    const RotaBaxterModel m(4);
    std::mt19937_64 rng(3);
    const RatMatrix a = m.random_matrix(rng);
    EXPECT_TRUE(verify_spitzer(m, a, 1).passed());
    EXPECT_TRUE(verify_spitzer(m, a, 4).passed());
}

TEST(MatrixModel, FullSuite)
{
    const Report r = verify_matrix_model(4, 6, 1, 30);
    for (const auto& c : r.checks())
        EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
}

TEST(MatrixModel, EvaluateGenerator)
{
    const RotaBaxterModel m(3, 2);
    std::mt19937_64 rng(4);
    const MatrixSeries u = MatrixSeries::monomial(m.random_matrix(rng), 1, 3);
    EXPECT_EQ(m.evaluate(generator(3), u), u);
    // x |> x maps to [R(u), u].
    const Series<Rational> xx = Series<Rational>::of(parse_forest("o(o)"), 3);
    EXPECT_EQ(m.evaluate(xx, u), m.graft(u, u));
}
