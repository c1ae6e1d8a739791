#ifndef POSTLIE_MAGNUS_HPP
#define POSTLIE_MAGNUS_HPP

// The post-Lie Magnus expansion chi = log*(exp(f)) and its inverse
// theta = log(exp*(f)) in the free post-Lie algebra on one generator f.

#include "postlie/forest_algebra.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace postlie {

/// Homogeneous components 1..order of an expansion in the generator.
template <Coefficient C>
struct Expansion
{
    int order = 0;
    std::vector<Series<C>> components;

    const Series<C>& component(int n) const
    {
        if (n < 1 || n > order)
            throw std::out_of_range("component " + std::to_string(n) + " outside 1.." + std::to_string(order));
        return components[static_cast<std::size_t>(n - 1)];
    }

    Series<C> total() const
    {
        Series<C> sum(order);
        for (const auto& c : components)
            sum += c;
        return sum;
    }

    friend bool operator==(const Expansion&, const Expansion&) = default;
};

using MagnusExpansion = Expansion<Rational>;

template <Coefficient C>
Expansion<C> split_by_degree(const Series<C>& series, int order)
{
    Expansion<C> e{order, {}};
    for (int n = 1; n <= order; ++n)
        e.components.push_back(series.homogeneous(n).with_order(order));
    return e;
}

/// Bernoulli numbers with B1 = -1/2, i.e. the coefficients of x/(e^x - 1).
Rational bernoulli(int n);

/// Which sign of B1 the inverse-expansion recursion uses. `plus` takes
/// (-1)^j B_j, the coefficients of x/(1 - e^-x).
enum class BernoulliSign { minus, plus };

/// chi by the composition recursion over Grossman-Larson products.
MagnusExpansion postlie_magnus_recursive(int order);
/// chi as log*(exp(f)).
MagnusExpansion postlie_magnus_via_log(int order);
/// chi by the recursion, cross-checked against the log route; throws
/// std::logic_error on any mismatch.
MagnusExpansion postlie_magnus(int order);

/// theta by the Bernoulli/adjoint recursion.
MagnusExpansion inverse_postlie_magnus_recursive(int order, BernoulliSign sign = BernoulliSign::plus);
/// theta as log(exp*(f)).
MagnusExpansion inverse_postlie_magnus_via_log(int order);
/// theta by the recursion, cross-checked against the log route.
MagnusExpansion inverse_postlie_magnus(int order);

} // namespace postlie

#endif
