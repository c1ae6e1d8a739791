#include "postlie/reference.hpp"

#include "postlie/expression.hpp"

#include <array>
#include <stdexcept>

namespace postlie::reference {

namespace {

const std::array<std::string, 5> magnus_components = {
    "f",
    "-1/2 * f|>f",
    "1/12 * f|>(f|>f) + 1/4 * (f|>f)|>f + 1/12 * [f|>f, f]",
    "-1/12 * ((f|>f)|>(f|>f) + (f|>(f|>f))|>f + ((f|>f)|>f)|>f)"
    " + 1/24 * ([f, f|>(f|>f)] + [f, (f|>f)|>f])",
    "-1/720 * f|>(f|>(f|>(f|>f)))"
    " + 1/144 * ((f|>f)|>(f|>(f|>f)) - f|>(((f|>f)|>f)|>f)"
    "   - f|>((f|>(f|>f))|>f) - f|>(f|>((f|>f)|>f)) + 5 * (f|>(f|>f))|>(f|>f)"
    "   + 5 * ((f|>f)|>f)|>(f|>f) + 6 * ((f|>f)|>(f|>f))|>f"
    "   + 3 * ((f|>(f|>f))|>f)|>f + 3 * (f|>(f|>(f|>f)))|>f"
    "   + 3 * (f|>((f|>f)|>f))|>f + 3 * (f|>f)|>((f|>f)|>f)"
    "   + 3 * (((f|>f)|>f)|>f)|>f)"
    " + 1/180 * [f, [f, f|>(f|>f)] - f|>(f|>(f|>f))]"
    " - 1/120 * [f|>f, f|>(f|>f)] - 1/36 * [f, (f|>f)|>(f|>f)]"
    " - 1/72 * [f, f|>((f|>f)|>f) + (f|>(f|>f))|>f + ((f|>f)|>f)|>f]"
    " - 1/360 * [f|>f, [f, f|>f]]"
    " + 1/720 * [f, [f, [f, f|>f]]]",
};

const std::array<std::string, 5> inverse_components = {
    "f",
    "1/2 * f|>f",
    "1/6 * f|>(f|>f) + 1/12 * [f, f|>f]",
    "1/24 * (f|>(f|>(f|>f)) + [f, f|>(f|>f)])",
    "1/120 * f|>(f|>(f|>(f|>f))) + 1/80 * [f, f|>(f|>(f|>f))]"
    " + 1/720 * ([f, [f, f|>(f|>f)]] - [f, [f, [f, f|>f]]])"
    " + 1/120 * [f|>f, f|>(f|>f)] - 1/240 * [f|>f, [f, f|>f]]",
};

const std::array<std::string, 4> weighted_components = {
    "x",
    "-1/2 * x|>x",
    "1/4 * (x|>x)|>x + 1/12 * x|>(x|>x) + 1/12 * [x|>x, x]",
    "(L-1)/24 * x|>((x|>x)|>x) - (L+1)/24 * (x|>x)|>(x|>x)"
    " + (L-3)/24 * ((x|>x)|>x)|>x - (L+1)/24 * (x|>(x|>x))|>x"
    " + 1/24 * [x, x|>(x|>x) + (x|>x)|>x]",
};

template <std::size_t N>
const std::string& pick(const std::array<std::string, N>& table, int n)
{
    if (n < 1 || n > static_cast<int>(N))
        throw std::out_of_range("no reference component of degree " + std::to_string(n));
    return table[static_cast<std::size_t>(n - 1)];
}

} // namespace

const std::string& magnus_text(int n) { return pick(magnus_components, n); }
const std::string& inverse_magnus_text(int n) { return pick(inverse_components, n); }
const std::string& weighted_text(int n) { return pick(weighted_components, n); }

Series<Rational> magnus(int n) { return parse_rational_expression(magnus_text(n), n); }
Series<Rational> inverse_magnus(int n) { return parse_rational_expression(inverse_magnus_text(n), n); }
Series<Laurent> weighted(int n) { return parse_expression(weighted_text(n), n); }

lie::BracketExpr bch(int n)
{
    using lie::Bracket;
    const Bracket a = Bracket::letter('a');
    const Bracket b = Bracket::letter('b');
    const Bracket ab = Bracket::of(a, b);
    lie::BracketExpr e;
    switch (n) {
    case 1:
        e.add(a, 1);
        e.add(b, 1);
        break;
    case 2:
        e.add(ab, Rational(1, 2));
        break;
    case 3:
        e.add(Bracket::of(a, ab), Rational(1, 12));
        e.add(Bracket::of(b, ab), Rational(-1, 12));
        break;
    case 4:
        e.add(Bracket::of(a, Bracket::of(b, ab)), Rational(-1, 24));
        break;
    default:
        throw std::out_of_range("no reference BCH component of degree " + std::to_string(n));
    }
    return e;
}

} // namespace postlie::reference
