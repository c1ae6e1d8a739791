#include "postlie/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace postlie {

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational factorial(int n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

Rational binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Laurent::Laurent(const Rational& constant) { add_term(0, constant); }

Laurent Laurent::monomial(int exponent, const Rational& coeff)
{
    Laurent p;
    p.add_term(exponent, coeff);
    return p;
}

bool Laurent::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational Laurent::coefficient(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Laurent::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

int Laurent::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Rational Laurent::evaluate(const Rational& weight) const
{
    if (postlie::is_zero(weight) && min_exponent() < 0)
        throw std::domain_error("cannot evaluate a negative weight power at zero");
    Rational sum = 0;
    for (const auto& [k, c] : terms_) {
        Rational power = 1;
        Rational base = k >= 0 ? weight : Rational(1 / weight);
        for (int i = 0; i < (k >= 0 ? k : -k); ++i)
            power *= base;
        sum += c * power;
    }
    return sum;
}

Laurent Laurent::shifted(int k) const
{
    Laurent p;
    for (const auto& [e, c] : terms_)
        p.terms_.emplace(e + k, c);
    return p;
}

void Laurent::add_term(int exponent, const Rational& coeff)
{
    if (postlie::is_zero(coeff))
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (postlie::is_zero(it->second))
            terms_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& other)
{
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& other)
{
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

Laurent& Laurent::operator*=(const Laurent& other)
{
    Laurent product;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_)
            product.add_term(e1 + e2, c1 * c2);
    *this = std::move(product);
    return *this;
}

Laurent& Laurent::operator*=(const Rational& scale)
{
    if (postlie::is_zero(scale)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= scale;
    return *this;
}

std::string to_string(const Laurent& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    // Highest power first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first)
            out << " + ";
        first = false;
        out << '(' << it->second.get_str() << ")*L^" << it->first;
    }
    return out.str();
}

} // namespace postlie
