#include "postlie/rb_lift.hpp"

#include "postlie/format.hpp"
#include "postlie/lie.hpp"

namespace postlie {

namespace {

const Laurent& weight()
{
    static const Laurent w = Laurent::weight();
    return w;
}

const Laurent& inverse_weight()
{
    static const Laurent w = Laurent::monomial(-1);
    return w;
}

void check_order(int order)
{
    if (order < 1)
        throw std::invalid_argument("expansion order must be at least 1");
}

// Degree-n part of BCH~(a, b) for graded lifted arguments.
class LiftedBch
{
  public:
    LiftedBch(int order, lie::GradedEvaluator<LiftedElement>::Inputs inputs)
        : order_(order), table_(lie::bch_tilde(order)),
          evaluator_(std::move(inputs), lifted_bracket, LiftedElement{WeightedSeries(order), WeightedSeries(order)},
                     [](const LiftedElement& e) { return e.is_zero(); })
    {}

    LiftedElement degree(int n)
    {
        LiftedElement sum{WeightedSeries(order_), WeightedSeries(order_)};
        for (int k = 2; k <= n; ++k)
            sum += evaluator_.evaluate(table_.component(k), n);
        if (!sum.wrapped.is_zero())
            throw std::logic_error("R-part of the BCH remainder does not cancel at degree " + std::to_string(n));
        return sum;
    }

  private:
    int order_;
    lie::BchTable table_;
    lie::GradedEvaluator<LiftedElement> evaluator_;
};

} // namespace

LiftedElement LiftedElement::rb_tilde(const WeightedSeries& r) { return {r * (-weight()), -r}; }

LiftedElement lifted_bracket(const LiftedElement& u, const LiftedElement& v)
{
    LiftedElement out;
    out.plain = bracket(u.plain, v.plain) * inverse_weight();
    out.plain += graft(u.wrapped, v.plain);
    out.plain -= graft(v.wrapped, u.plain);
    out.wrapped = bracket(u.wrapped, v.wrapped);
    out.wrapped += graft(u.wrapped, v.wrapped);
    out.wrapped -= graft(v.wrapped, u.wrapped);
    return out;
}

WeightedExpansion bch_recursion(int order, RecursionForm form)
{
    check_order(order);
    const WeightedSeries x = generator<Laurent>(order);
    WeightedExpansion chi{order, {x}};
    const WeightedSeries zero(order);

    lie::GradedEvaluator<LiftedElement>::Inputs inputs;
    if (form == RecursionForm::standard) {
        inputs = [&chi](char letter, int d) {
            const WeightedSeries& c = chi.component(d);
            return letter == 'a' ? LiftedElement::rb(c) : LiftedElement::rb_tilde(c);
        };
    } else {
        inputs = [&chi, &x, &zero](char letter, int d) {
            if (letter == 'a')
                return LiftedElement::rb(-chi.component(d));
            return LiftedElement::unwrapped(d == 1 ? x * (-weight()) : zero);
        };
    }
    LiftedBch bch(order, std::move(inputs));
    const Laurent scale = form == RecursionForm::standard ? inverse_weight() : -inverse_weight();
    for (int n = 2; n <= order; ++n)
        chi.components.push_back(bch.degree(n).plain * scale);
    return chi;
}

WeightedExpansion bch_recursion_inverse(int order)
{
    check_order(order);
    const WeightedSeries x = generator<Laurent>(order);
    const WeightedSeries zero(order);
    LiftedBch bch(order, [&](char letter, int d) {
        const WeightedSeries& c = d == 1 ? x : zero;
        return letter == 'a' ? LiftedElement::rb(c) : LiftedElement::rb_tilde(c);
    });
    WeightedExpansion inverse{order, {x}};
    for (int n = 2; n <= order; ++n)
        inverse.components.push_back(bch.degree(n).plain * (-inverse_weight()));
    return inverse;
}

Series<Rational> specialize(const WeightedSeries& s, const Rational& weight)
{
    return s.map_coefficients([&](const Laurent& c) { return c.evaluate(weight); });
}

MagnusExpansion specialize(const WeightedExpansion& e, const Rational& weight)
{
    MagnusExpansion out{e.order, {}};
    for (const auto& c : e.components)
        out.components.push_back(specialize(c, weight));
    return out;
}

int min_weight_power(const WeightedExpansion& e)
{
    int lowest = 0;
    for (const auto& c : e.components)
        for (const auto& [f, p] : c.terms())
            lowest = std::min(lowest, p.min_exponent());
    return lowest;
}

Report verify_main_theorem(int order)
{
    Report report;
    const MagnusExpansion chi = postlie_magnus(order);
    const MagnusExpansion theta = inverse_postlie_magnus(order);
    const MagnusExpansion chi_one = specialize(bch_recursion(order), 1);
    const MagnusExpansion inverse_one = specialize(bch_recursion_inverse(order), 1);
    for (int n = 1; n <= order; ++n) {
        const auto diff = chi_one.component(n) - chi.component(n);
        report.add("chi_1^(" + std::to_string(n) + ") = chi^(" + std::to_string(n) + ")", diff.is_zero(),
                   diff.is_zero() ? "" : "difference: " + to_text(diff));
    }
    for (int n = 1; n <= order; ++n) {
        const auto diff = inverse_one.component(n) - theta.component(n);
        report.add("chi_1^{-1}(" + std::to_string(n) + ") = theta^(" + std::to_string(n) + ")", diff.is_zero(),
                   diff.is_zero() ? "" : "difference: " + to_text(diff));
    }
    return report;
}

} // namespace postlie
