#ifndef POSTLIE_RATIONAL_HPP
#define POSTLIE_RATIONAL_HPP

// Exact scalars: GMP rationals and sparse Laurent polynomials in the weight.

#include <gmpxx.h>

#include <concepts>
#include <map>
#include <string>

namespace postlie {

using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
Rational factorial(int n);
Rational binomial(int n, int k);

/// A Laurent polynomial in the formal weight variable (written L in text
/// output). Terms are kept sparse: a zero coefficient is never stored.
class Laurent
{
  public:
    Laurent() = default;
    Laurent(const Rational& constant);
    Laurent(long constant) : Laurent(Rational(constant)) {}

    static Laurent monomial(int exponent, const Rational& coeff = 1);
    static Laurent weight() { return monomial(1); }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coefficient(int exponent) const;
    int min_exponent() const;
    int max_exponent() const;

    /// Substitutes a value for the weight. Throws if the value is zero and a
    /// negative power is present.
    Rational evaluate(const Rational& weight) const;
    /// Multiplies by weight^k.
    Laurent shifted(int k) const;

    Laurent& operator+=(const Laurent& other);
    Laurent& operator-=(const Laurent& other);
    Laurent& operator*=(const Laurent& other);
    Laurent& operator*=(const Rational& scale);

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
    friend Laurent operator*(Laurent a, const Rational& b) { return a *= b; }
    friend Laurent operator-(Laurent a) { return a *= Rational(-1); }
    friend bool operator==(const Laurent&, const Laurent&) = default;

  private:
    void add_term(int exponent, const Rational& coeff);

    std::map<int, Rational> terms_;
};

inline bool is_zero(const Laurent& p) { return p.is_zero(); }

std::string to_string(const Laurent& p);

/// Scalars a Series may carry: a commutative ring containing the rationals.
template <class C>
concept Coefficient = std::regular<C> && requires(C a, C b, Rational q) {
    { C(q) };
    { C(a + b) };
    { C(a - b) };
    { C(a * b) };
    { C(a * q) };
    { C(-a) };
    { is_zero(a) } -> std::same_as<bool>;
};

static_assert(Coefficient<Laurent>);

} // namespace postlie

#endif
