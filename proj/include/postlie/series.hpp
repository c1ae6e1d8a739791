#ifndef POSTLIE_SERIES_HPP
#define POSTLIE_SERIES_HPP

// Truncated linear combinations of planar forests.

#include "postlie/rational.hpp"
#include "postlie/trees.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace postlie {

/// A finite linear combination of forests of degree <= order(). Terms above
/// the truncation order are dropped on insertion; zero coefficients are never
/// stored. Sums keep the larger truncation order, products the smaller.
template <Coefficient C>
class Series
{
  public:
    using Terms = std::map<Forest, C>;

    Series() = default;
    explicit Series(int order) : order_(order) {}

    static Series unit(int order) { return of(Forest(), order); }

    static Series of(const Forest& forest, int order, const C& coeff = C(Rational(1)))
    {
        Series s(order);
        s.add(forest, coeff);
        return s;
    }

    int order() const { return order_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Forest& forest, const C& coeff)
    {
        if (forest.degree() > order_ || postlie::is_zero(coeff))
            return;
        auto [it, inserted] = terms_.try_emplace(forest, coeff);
        if (!inserted) {
            it->second = it->second + coeff;
            if (postlie::is_zero(it->second))
                terms_.erase(it);
        }
    }

    C coefficient(const Forest& forest) const
    {
        auto it = terms_.find(forest);
        return it == terms_.end() ? C(Rational(0)) : it->second;
    }

    /// The coefficient of the empty forest.
    C constant_term() const { return coefficient(Forest()); }

    Series homogeneous(int degree) const
    {
        Series s(order_);
        for (const auto& [f, c] : terms_)
            if (f.degree() == degree)
                s.terms_.emplace(f, c);
        return s;
    }

    Series truncated(int order) const
    {
        Series s(std::min(order, order_));
        for (const auto& [f, c] : terms_)
            if (f.degree() <= s.order_)
                s.terms_.emplace(f, c);
        return s;
    }

    Series with_order(int order) const
    {
        Series s = truncated(order);
        s.order_ = order;
        return s;
    }

    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

    template <class F>
    auto map_coefficients(F&& f) const
    {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        Series<D> s(order_);
        for (const auto& [forest, c] : terms_)
            s.add(forest, f(c));
        return s;
    }

    Series& operator+=(const Series& other)
    {
        order_ = std::max(order_, other.order_);
        for (const auto& [f, c] : other.terms_)
            add(f, c);
        return *this;
    }

    Series& operator-=(const Series& other)
    {
        order_ = std::max(order_, other.order_);
        for (const auto& [f, c] : other.terms_)
            add(f, -c);
        return *this;
    }

    Series& operator*=(const Rational& scale)
    {
        if (postlie::is_zero(scale)) {
            terms_.clear();
            return *this;
        }
        for (auto& [f, c] : terms_)
            c = c * scale;
        return *this;
    }

    Series& operator*=(const C& scale)
        requires(!std::same_as<C, Rational>)
    {
        Terms scaled;
        for (const auto& [f, c] : terms_) {
            C product = c * scale;
            if (!postlie::is_zero(product))
                scaled.emplace(f, std::move(product));
        }
        terms_ = std::move(scaled);
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a) { return a *= Rational(-1); }
    friend Series operator*(Series a, const Rational& q) { return a *= q; }
    friend Series operator*(const Rational& q, Series a) { return a *= q; }
    friend Series operator*(Series a, const C& c)
        requires(!std::same_as<C, Rational>)
    {
        return a *= c;
    }
    friend Series operator*(const C& c, Series a)
        requires(!std::same_as<C, Rational>)
    {
        return a *= c;
    }

    /// Compares terms only; the truncation order is not part of the value.
    friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }

  private:
    int order_ = 0;
    Terms terms_;
};

/// Element of the tensor square, as explicit (left, right, coefficient)
/// triples. `order` bounds the total degree.
template <Coefficient C>
struct Tensor
{
    int order = 0;
    std::map<std::pair<Forest, Forest>, C> terms;

    void add(const Forest& left, const Forest& right, const C& coeff)
    {
        if (left.degree() + right.degree() > order || postlie::is_zero(coeff))
            return;
        auto [it, inserted] = terms.try_emplace({left, right}, coeff);
        if (!inserted) {
            it->second = it->second + coeff;
            if (postlie::is_zero(it->second))
                terms.erase(it);
        }
    }

    friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms == b.terms; }
};

/// Single generator of the free post-Lie algebra: the one-vertex tree.
template <Coefficient C = Rational>
Series<C> generator(int order, std::uint8_t label = 0)
{
    return Series<C>::of(Forest(Tree::leaf(label)), order);
}

template <Coefficient C = Rational>
Series<C> single(const Forest& f, int order)
{
    return Series<C>::of(f, order);
}

} // namespace postlie

#endif
