#include "postlie/magnus.hpp"

#include <functional>

namespace postlie {

namespace {

using S = Series<Rational>;

void check_order(int order)
{
    if (order < 1)
        throw std::invalid_argument("expansion order must be at least 1");
}

void cross_check(const MagnusExpansion& a, const MagnusExpansion& b, const char* what)
{
    for (int n = 1; n <= a.order; ++n)
        if (!(a.component(n) == b.component(n)))
            throw std::logic_error(std::string(what) + ": recursion and log routes differ at degree " +
                                   std::to_string(n));
}

S power_of_generator(int n, int order)
{
    std::vector<Vertex> vs(static_cast<std::size_t>(n), Vertex{0, 0});
    return S::of(Forest(std::move(vs)), order);
}

} // namespace

Rational bernoulli(int n)
{
    if (n < 0)
        throw std::invalid_argument("Bernoulli index must be non-negative");
    std::vector<Rational> b{Rational(1)};
    for (int m = 1; m <= n; ++m) {
        Rational sum = 0;
        for (int k = 0; k < m; ++k)
            sum += binomial(m + 1, k) * b[static_cast<std::size_t>(k)];
        b.push_back(-sum / (m + 1));
    }
    return b[static_cast<std::size_t>(n)];
}

MagnusExpansion postlie_magnus_recursive(int order)
{
    check_order(order);
    const S f = generator(order);
    // powers[k][m]: sum over compositions of m into k parts of chi^(p1) * ... * chi^(pk).
    std::vector<std::vector<S>> powers(static_cast<std::size_t>(order) + 1,
                                       std::vector<S>(static_cast<std::size_t>(order) + 1, S(order)));
    MagnusExpansion chi{order, {}};
    chi.components.push_back(f);
    powers[1][1] = f;
    for (int n = 2; n <= order; ++n) {
        S value = power_of_generator(n, order) * Rational(1 / factorial(n));
        for (int k = 2; k <= n; ++k) {
            S sum(order);
            for (int p = 1; p <= n - k + 1; ++p)
                sum += gl_product(chi.component(p), powers[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n - p)]);
            powers[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] = sum;
            value -= sum * Rational(1 / factorial(k));
        }
        chi.components.push_back(value);
        powers[1][static_cast<std::size_t>(n)] = value;
    }
    return chi;
}

MagnusExpansion postlie_magnus_via_log(int order)
{
    check_order(order);
    return split_by_degree(log_gl(exp_concat(generator(order))), order);
}

MagnusExpansion postlie_magnus(int order)
{
    MagnusExpansion chi = postlie_magnus_recursive(order);
    cross_check(chi, postlie_magnus_via_log(order), "post-Lie Magnus expansion");
    return chi;
}

MagnusExpansion inverse_postlie_magnus_recursive(int order, BernoulliSign sign)
{
    check_order(order);
    const S f = generator(order);
    const auto idx = [](int i) { return static_cast<std::size_t>(i); };
    auto coefficient = [&](int j) {
        Rational b = bernoulli(j);
        if (sign == BernoulliSign::plus && j % 2 == 1)
            b = -b;
        return Rational(b / factorial(j));
    };

    MagnusExpansion theta{order, {}};
    theta.components.push_back(f);
    // products[j][m]: sum over compositions of m into j parts of theta^(k1)...theta^(kj).
    std::vector<std::vector<S>> products(idx(order) + 1, std::vector<S>(idx(order) + 1, S(order)));
    products[0][0] = S::unit(order);

    auto refresh_products = [&](int m) {
        for (int j = 1; j <= m; ++j) {
            S sum(order);
            for (int k = 1; k <= m - j + 1; ++k)
                sum += concat(theta.component(k), products[idx(j - 1)][idx(m - k)]);
            products[idx(j)][idx(m)] = sum;
        }
    };
    // sum over compositions of m into q parts of ad_theta^(k1) ... ad_theta^(kq) (y)
    std::function<S(int, int, const S&)> ad_sum = [&](int q, int m, const S& y) -> S {
        if (q == 0)
            return m == 0 ? y : S(order);
        S sum(order);
        for (int k = 1; k <= m - q + 1; ++k)
            sum += bracket(theta.component(k), ad_sum(q - 1, m - k, y));
        return sum;
    };
    auto grafted_products = [&](int m) {
        S sum(order);
        for (int p = 1; p <= m; ++p)
            sum += graft(products[idx(p)][idx(m)], f) * Rational(1 / factorial(p));
        return sum;
    };

    for (int n = 2; n <= order; ++n) {
        refresh_products(n - 1);
        S value = grafted_products(n - 1);
        for (int j = 1; j <= n - 1; ++j)
            value += ad_sum(j, n - 1, f) * coefficient(j);
        for (int j = 2; j <= n - 1; ++j) {
            const S inner = grafted_products(n - j);
            for (int q = 1; q <= j - 1; ++q)
                value += ad_sum(q, j - 1, inner) * coefficient(q);
        }
        theta.components.push_back(value * Rational(1, n));
    }
    return theta;
}

MagnusExpansion inverse_postlie_magnus_via_log(int order)
{
    check_order(order);
    return split_by_degree(log_concat(exp_gl(generator(order))), order);
}

MagnusExpansion inverse_postlie_magnus(int order)
{
    MagnusExpansion theta = inverse_postlie_magnus_recursive(order);
    cross_check(theta, inverse_postlie_magnus_via_log(order), "inverse post-Lie Magnus expansion");
    return theta;
}

} // namespace postlie
