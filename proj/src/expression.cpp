#include "postlie/expression.hpp"

#include "postlie/forest_algebra.hpp"

#include <cctype>
#include <optional>

namespace postlie {

namespace {

struct Value
{
    std::optional<Laurent> scalar;
    Series<Laurent> series;

    bool is_scalar() const { return scalar.has_value(); }
};

class Reader
{
  public:
    Reader(const std::string& text, int order) : text_(text), order_(order) {}

    Series<Laurent> read()
    {
        Value v = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character");
        if (v.is_scalar()) {
            if (!v.scalar->is_zero())
                fail("expression is a scalar");
            return Series<Laurent>(order_);
        }
        return v.series;
    }

  private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(const std::string& token)
    {
        skip_space();
        if (text_.compare(pos_, token.size(), token) != 0)
            return false;
        pos_ += token.size();
        return true;
    }

    void expect(const std::string& token)
    {
        if (!accept(token))
            fail("expected '" + token + "'");
    }

    Value add(Value a, const Value& b, bool subtract)
    {
        if (a.is_scalar() != b.is_scalar())
            fail("cannot add a scalar and a series");
        if (a.is_scalar())
            *a.scalar = subtract ? *a.scalar - *b.scalar : *a.scalar + *b.scalar;
        else if (subtract)
            a.series -= b.series;
        else
            a.series += b.series;
        return a;
    }

    Value expr()
    {
        bool negate = false;
        if (accept("-"))
            negate = true;
        else
            accept("+");
        Value v = term();
        if (negate)
            v = scale(v, Laurent(-1));
        while (true) {
            if (accept("+"))
                v = add(v, term(), false);
            else if (accept("-"))
                v = add(v, term(), true);
            else
                return v;
        }
    }

    Value scale(Value v, const Laurent& s)
    {
        if (v.is_scalar())
            *v.scalar *= s;
        else
            v.series *= s;
        return v;
    }

    Value term()
    {
        Value v = factor();
        while (true) {
            if (accept("*")) {
                Value w = factor();
                if (v.is_scalar())
                    v = scale(w, *v.scalar);
                else if (w.is_scalar())
                    v = scale(v, *w.scalar);
                else
                    fail("product of two series");
            } else if (accept("/")) {
                Value w = factor();
                if (!w.is_scalar() || !w.scalar->is_constant() || w.scalar->is_zero())
                    fail("division by something other than a nonzero number");
                v = scale(v, Laurent(1 / w.scalar->coefficient(0)));
            } else {
                return v;
            }
        }
    }

    Value factor()
    {
        Value v = primary();
        if (!accept("|>"))
            return v;
        Value w = primary();
        if (v.is_scalar() || w.is_scalar())
            fail("grafting needs two series");
        v.series = graft(v.series, w.series);
        skip_space();
        if (text_.compare(pos_, 2, "|>") == 0)
            fail("parenthesize chained grafting");
        return v;
    }

    Value primary()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
                ++end;
            Value v{Laurent(Rational(mpz_class(text_.substr(pos_, end - pos_)))), {}};
            pos_ = end;
            return v;
        }
        if (c == 'L') {
            ++pos_;
            return {Laurent::weight(), {}};
        }
        if (c == 'x' || c == 'f') {
            ++pos_;
            return {std::nullopt, generator<Laurent>(order_)};
        }
        if (accept("(")) {
            Value v = expr();
            expect(")");
            return v;
        }
        if (accept("[")) {
            Value a = expr();
            expect(",");
            Value b = expr();
            expect("]");
            if (a.is_scalar() || b.is_scalar())
                fail("bracket needs two series");
            return {std::nullopt, bracket(a.series, b.series)};
        }
        fail("unexpected character");
    }

    const std::string& text_;
    int order_;
    std::size_t pos_ = 0;
};

} // namespace

Series<Laurent> parse_expression(const std::string& text, int order)
{
    return Reader(text, order).read();
}

Series<Rational> parse_rational_expression(const std::string& text, int order)
{
    const Series<Laurent> s = parse_expression(text, order);
    Series<Rational> out(order);
    for (const auto& [f, c] : s.terms()) {
        if (!c.is_constant())
            throw std::invalid_argument("expression depends on the weight");
        out.add(f, c.coefficient(0));
    }
    return out;
}

} // namespace postlie
