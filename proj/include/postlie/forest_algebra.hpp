#ifndef POSTLIE_FOREST_ALGEBRA_HPP
#define POSTLIE_FOREST_ALGEBRA_HPP

// The enveloping algebra of the free post-Lie algebra on planar trees:
// concatenation, unshuffle coproduct, the extended grafting product, the
// Grossman-Larson product and its antipode, and truncated exp/log for both
// associative products.

#include "postlie/series.hpp"

#include <map>
#include <stdexcept>

namespace postlie {

template <Coefficient C>
Series<C> concat(const Series<C>& x, const Series<C>& y)
{
    Series<C> out(std::min(x.order(), y.order()));
    for (const auto& [f, a] : x.terms())
        for (const auto& [g, b] : y.terms())
            if (f.degree() + g.degree() <= out.order())
                out.add(f * g, a * b);
    return out;
}

/// Concatenation commutator; the Lie bracket of the free post-Lie algebra.
template <Coefficient C>
Series<C> bracket(const Series<C>& x, const Series<C>& y)
{
    return concat(x, y) - concat(y, x);
}

template <Coefficient C>
Tensor<C> unshuffle(const Series<C>& x)
{
    Tensor<C> out{x.order(), {}};
    for (const auto& [f, c] : x.terms())
        for_each_unshuffle(f, [&](const Forest& l, const Forest& r) { out.add(l, r, c); });
    return out;
}

template <Coefficient C>
C counit(const Series<C>& x)
{
    return x.constant_term();
}

/// Extended grafting product X |> Y. On forests, every tree of X is grafted
/// as a leftmost branch onto some vertex of Y, summed over all choices.
template <Coefficient C>
Series<C> graft(const Series<C>& x, const Series<C>& y)
{
    Series<C> out(std::min(x.order(), y.order()));
    for (const auto& [f, a] : x.terms())
        for (const auto& [g, b] : y.terms()) {
            if (f.degree() + g.degree() > out.order())
                continue;
            const C ab = a * b;
            for_each_graft(f, g, [&](const Forest& h) { out.add(h, ab); });
        }
    return out;
}

/// Grossman-Larson product X * Y = X(1) (X(2) |> Y).
template <Coefficient C>
Series<C> gl_product(const Series<C>& x, const Series<C>& y)
{
    Series<C> out(std::min(x.order(), y.order()));
    for (const auto& [f, a] : x.terms())
        for (const auto& [g, b] : y.terms()) {
            if (f.degree() + g.degree() > out.order())
                continue;
            const C ab = a * b;
            for_each_unshuffle(f, [&](const Forest& left, const Forest& right) {
                for_each_graft(right, g, [&](const Forest& h) { out.add(left * h, ab); });
            });
        }
    return out;
}

/// The planar Grossman-Larson product B-(f |> B+(g)) on basis forests.
template <Coefficient C = Rational>
Series<C> gl_product_via_bplus(const Forest& f, const Forest& g, int order)
{
    Series<C> out(order);
    if (f.degree() + g.degree() > order)
        return out;
    for_each_graft(f, Forest(b_plus(g)), [&](const Forest& h) {
        out.add(b_minus(Tree(h.vertices())), C(Rational(1)));
    });
    return out;
}

template <Coefficient C>
Series<C> gl_product_via_bplus(const Series<C>& x, const Series<C>& y)
{
    Series<C> out(std::min(x.order(), y.order()));
    for (const auto& [f, a] : x.terms())
        for (const auto& [g, b] : y.terms())
            out += gl_product_via_bplus<C>(f, g, out.order()) * C(a * b);
    return out;
}

namespace detail {

template <Coefficient C>
const Series<C>& antipode_of(const Forest& f, int order, std::map<Forest, Series<C>>& memo)
{
    if (auto it = memo.find(f); it != memo.end())
        return it->second;
    Series<C> s(order);
    if (f.empty()) {
        s.add(f, C(Rational(1)));
    } else {
        // sum over splits f(1) (x) f(2) of f(1) * S(f(2)) vanishes; the split
        // with empty f(1) contributes S(f) itself.
        for_each_unshuffle(f, [&](const Forest& left, const Forest& right) {
            if (left.empty())
                return;
            const Series<C>& rest = antipode_of(right, order, memo);
            s -= gl_product(Series<C>::of(left, order), rest);
        });
    }
    return memo.emplace(f, std::move(s)).first->second;
}

} // namespace detail

/// Antipode of the Grossman-Larson Hopf algebra, by the graded recursion.
template <Coefficient C>
Series<C> gl_antipode(const Series<C>& x)
{
    std::map<Forest, Series<C>> memo;
    Series<C> out(x.order());
    for (const auto& [f, c] : x.terms())
        out += detail::antipode_of<C>(f, x.order(), memo) * c;
    return out;
}

namespace detail {

template <Coefficient C, class Product>
Series<C> exp_with(const Series<C>& x, Product&& product)
{
    if (!postlie::is_zero(counit(x)))
        throw std::domain_error("exp requires an argument with zero constant term");
    const int n = x.order();
    const auto one = Series<C>::unit(n);
    // 1 + x(1 + x/2 (1 + x/3 (...)))
    Series<C> acc = one;
    for (int k = n; k >= 1; --k)
        acc = one + product(x, acc) * Rational(1, k);
    return acc;
}

template <Coefficient C, class Product>
Series<C> log_with(const Series<C>& x, Product&& product)
{
    if (counit(x) != C(Rational(1)))
        throw std::domain_error("log requires an argument with unit constant term");
    const int n = x.order();
    const auto one = Series<C>::unit(n);
    const Series<C> y = x - one;
    if (n == 0)
        return Series<C>(n);
    // y(1 - y(1/2 - y(1/3 - ...)))
    Series<C> acc = one * Rational(1, n);
    for (int k = n - 1; k >= 1; --k)
        acc = one * Rational(1, k) - product(y, acc);
    return product(y, acc);
}

} // namespace detail

template <Coefficient C>
Series<C> exp_concat(const Series<C>& x)
{
    return detail::exp_with(x, [](const Series<C>& a, const Series<C>& b) { return concat(a, b); });
}

template <Coefficient C>
Series<C> log_concat(const Series<C>& x)
{
    return detail::log_with(x, [](const Series<C>& a, const Series<C>& b) { return concat(a, b); });
}

template <Coefficient C>
Series<C> exp_gl(const Series<C>& x)
{
    return detail::exp_with(x, [](const Series<C>& a, const Series<C>& b) { return gl_product(a, b); });
}

template <Coefficient C>
Series<C> log_gl(const Series<C>& x)
{
    return detail::log_with(x, [](const Series<C>& a, const Series<C>& b) { return gl_product(a, b); });
}

template <Coefficient C>
Tensor<C> primitive_tensor(const Series<C>& x)
{
    Tensor<C> t{x.order(), {}};
    for (const auto& [f, c] : x.terms()) {
        t.add(f, Forest(), c);
        t.add(Forest(), f, c);
    }
    return t;
}

template <Coefficient C>
Tensor<C> tensor_square(const Series<C>& x)
{
    Tensor<C> t{x.order(), {}};
    for (const auto& [f, a] : x.terms())
        for (const auto& [g, b] : x.terms())
            t.add(f, g, a * b);
    return t;
}

/// Delta(X) = X (x) 1 + 1 (x) X, checked exactly up to the truncation order.
template <Coefficient C>
bool is_primitive(const Series<C>& x)
{
    return unshuffle(x) == primitive_tensor(x);
}

/// Delta(X) = X (x) X in total degree <= order.
template <Coefficient C>
bool is_grouplike(const Series<C>& x)
{
    return counit(x) == C(Rational(1)) && unshuffle(x) == tensor_square(x);
}

} // namespace postlie

#endif
