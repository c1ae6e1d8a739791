#ifndef POSTLIE_RB_LIFT_HPP
#define POSTLIE_RB_LIFT_HPP

// The weighted BCH-recursion chi_lambda, evaluated symbolically over the free
// post-Lie algebra on one generator x.
//
// Elements p + R(r) of a weight-lambda Rota-Baxter algebra are modelled by
// pairs (p, r) of free post-Lie (primitive) series. The post-Lie bracket of
// the free algebra stands for lambda times the commutator, and x |> y stands
// for [R(x), y]. The Rota-Baxter identity then closes the commutator on
// pairs:
//
//   [p1 + R(r1), p2 + R(r2)] = (1/lambda)[p1,p2] + r1|>p2 - r2|>p1
//                              + R([r1,r2] + r1|>r2 - r2|>r1).
//
// R itself is never expanded into trees; it is the formal wrapper above.

#include "postlie/magnus.hpp"
#include "postlie/report.hpp"

namespace postlie {

using WeightedSeries = Series<Laurent>;
using WeightedExpansion = Expansion<Laurent>;

struct LiftedElement
{
    WeightedSeries plain;
    WeightedSeries wrapped;

    static LiftedElement unwrapped(const WeightedSeries& p) { return {p, WeightedSeries(p.order())}; }
    static LiftedElement rb(const WeightedSeries& r) { return {WeightedSeries(r.order()), r}; }
    /// R~(r) = -lambda r - R(r).
    static LiftedElement rb_tilde(const WeightedSeries& r);

    bool is_zero() const { return plain.is_zero() && wrapped.is_zero(); }

    LiftedElement& operator+=(const LiftedElement& o)
    {
        plain += o.plain;
        wrapped += o.wrapped;
        return *this;
    }
    friend LiftedElement operator+(LiftedElement a, const LiftedElement& b) { return a += b; }
    friend LiftedElement operator-(LiftedElement a, const LiftedElement& b)
    {
        a.plain -= b.plain;
        a.wrapped -= b.wrapped;
        return a;
    }
    friend LiftedElement operator*(LiftedElement a, const Rational& q)
    {
        a.plain *= q;
        a.wrapped *= q;
        return a;
    }
    friend LiftedElement operator*(LiftedElement a, const Laurent& c)
    {
        a.plain *= c;
        a.wrapped *= c;
        return a;
    }
    friend bool operator==(const LiftedElement&, const LiftedElement&) = default;
};

LiftedElement lifted_bracket(const LiftedElement& u, const LiftedElement& v);

enum class RecursionForm
{
    standard,   // chi = x + (1/lambda) BCH~(R(chi), R~(chi))
    simplified  // chi = x - (1/lambda) BCH~(-R(chi), -lambda x)
};

/// chi_lambda^(1..order). Throws std::logic_error if the R-part of the BCH
/// remainder fails to cancel at some degree.
WeightedExpansion bch_recursion(int order, RecursionForm form = RecursionForm::standard);

/// chi_lambda^{-1}(x) = x - (1/lambda) BCH~(R(x), R~(x)), degree by degree.
WeightedExpansion bch_recursion_inverse(int order);

/// Substitutes a rational value for the weight.
MagnusExpansion specialize(const WeightedExpansion& e, const Rational& weight);
Series<Rational> specialize(const WeightedSeries& s, const Rational& weight);

/// Lowest power of the weight occurring anywhere in the expansion.
int min_weight_power(const WeightedExpansion& e);

/// chi_1 = chi and chi_1^{-1} = theta for all degrees <= order.
Report verify_main_theorem(int order);

} // namespace postlie

#endif
