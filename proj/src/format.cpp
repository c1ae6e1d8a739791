#include "postlie/format.hpp"

#include <algorithm>
#include <limits>

namespace postlie {

namespace {

using nlohmann::json;

template <Coefficient C>
std::vector<std::pair<std::string, C>> sorted_terms(const Series<C>& s, const Alphabet& alphabet)
{
    std::vector<std::pair<std::string, C>> out;
    std::vector<std::pair<Forest, C>> terms(s.terms().begin(), s.terms().end());
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const auto& a, const auto& b) { return canonical_less(a.first, b.first, alphabet); });
    for (auto& [f, c] : terms)
        out.emplace_back(serialize(f, alphabet), c);
    return out;
}

std::string latex_forest(const std::string& serialized)
{
    std::string out;
    for (char c : serialized) {
        if (c == ' ')
            out += "\\, ";
        else
            out += c;
    }
    return out;
}

json integer_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return json(static_cast<long long>(z.get_si()));
    return json(z.get_str());
}

mpz_class integer_from_json(const json& j)
{
    if (j.is_number_integer())
        return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string())
        return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

Rational rational_from_json(const json& num, const json& den)
{
    Rational q(integer_from_json(num), integer_from_json(den));
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
}

std::string latex_integer_power(const mpz_class& coeff, int power, bool first)
{
    // One signed term of a numerator polynomial in lambda.
    std::string out;
    mpz_class magnitude = abs(coeff);
    if (sgn(coeff) < 0)
        out += "-";
    else if (!first)
        out += "+";
    if (power == 0) {
        out += magnitude.get_str();
        return out;
    }
    if (magnitude != 1)
        out += magnitude.get_str();
    out += "\\lambda";
    if (power != 1)
        out += "^{" + std::to_string(power) + "}";
    return out;
}

std::string text_coefficient(const Rational& q) { return q.get_str(); }

std::string text_coefficient(const Laurent& p)
{
    std::string s = to_string(p);
    return p.terms().size() > 1 ? "(" + s + ")" : s;
}

bool is_unit(const Rational& q) { return q == 1; }
bool is_unit(const Laurent&) { return false; }

template <Coefficient C>
std::string text_series(const Series<C>& s, const Alphabet& alphabet)
{
    if (s.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [forest, c] : sorted_terms(s, alphabet)) {
        if (!first)
            out += " + ";
        first = false;
        out += is_unit(c) ? forest : text_coefficient(c) + " * " + forest;
    }
    return out;
}

} // namespace

std::string to_text(const Series<Rational>& s, const Alphabet& alphabet) { return text_series(s, alphabet); }

std::string to_text(const Series<Laurent>& s, const Alphabet& alphabet) { return text_series(s, alphabet); }

std::string to_text(const lie::BracketExpr& e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : e.terms()) {
        if (!first)
            out += " + ";
        first = false;
        out += c == 1 ? b.str() : c.get_str() + " " + b.str();
    }
    return out;
}

std::string latex_coefficient(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_str();
    std::string sign = sgn(q) < 0 ? "-" : "";
    return sign + "\\frac{" + mpz_class(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_coefficient(const Laurent& p)
{
    if (p.is_zero())
        return "0";
    mpz_class den = 1;
    for (const auto& [k, c] : p.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    const int shift = std::min(p.min_exponent(), 0);
    std::string numerator;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Rational scaled = it->second * Rational(den);
        numerator += latex_integer_power(scaled.get_num(), it->first - shift, first);
        first = false;
    }
    std::string denominator = den == 1 ? "" : den.get_str();
    if (shift < 0)
        denominator += "\\lambda" + (shift == -1 ? std::string() : "^{" + std::to_string(-shift) + "}");
    if (p.terms().size() == 1) {
        const bool negative = numerator.front() == '-';
        const std::string body = negative ? numerator.substr(1) : numerator;
        const std::string sign = negative ? "-" : "";
        if (denominator.empty())
            return numerator;
        return sign + "\\frac{" + body + "}{" + denominator + "}";
    }
    if (denominator.empty())
        return "(" + numerator + ")";
    return "\\frac{" + numerator + "}{" + denominator + "}";
}

std::string to_latex(const Series<Rational>& s, const Alphabet& alphabet)
{
    if (s.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [forest, c] : sorted_terms(s, alphabet)) {
        const bool negative = sgn(c) < 0;
        const Rational magnitude = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (magnitude != 1)
            out += latex_coefficient(magnitude) + "\\, ";
        out += latex_forest(forest);
    }
    return out;
}

std::string to_latex(const Series<Laurent>& s, const Alphabet& alphabet)
{
    if (s.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [forest, c] : sorted_terms(s, alphabet)) {
        std::string coeff = latex_coefficient(c);
        const bool negative = coeff.front() == '-';
        if (negative)
            coeff.erase(0, 1);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (coeff != "1")
            out += coeff + "\\, ";
        out += latex_forest(forest);
    }
    return out;
}

std::string to_latex(const lie::BracketExpr& e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : e.terms()) {
        const bool negative = sgn(c) < 0;
        const Rational magnitude = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (magnitude != 1)
            out += latex_coefficient(magnitude) + "\\, ";
        out += b.str();
    }
    return out;
}

json to_json(const Series<Rational>& s, const Alphabet& alphabet)
{
    json terms = json::array();
    for (const auto& [forest, c] : sorted_terms(s, alphabet))
        terms.push_back({{"coeff", {{"num", integer_json(c.get_num())}, {"den", integer_json(c.get_den())}}},
                         {"forest", forest}});
    return {{"order", s.order()}, {"terms", terms}};
}

json to_json(const Series<Laurent>& s, const Alphabet& alphabet)
{
    json terms = json::array();
    for (const auto& [forest, c] : sorted_terms(s, alphabet)) {
        json coeff = json::array();
        for (const auto& [k, q] : c.terms())
            coeff.push_back({k, integer_json(q.get_num()), integer_json(q.get_den())});
        terms.push_back({{"coeff", coeff}, {"forest", forest}});
    }
    return {{"order", s.order()}, {"terms", terms}};
}

json to_json(const lie::BracketExpr& e)
{
    json terms = json::array();
    for (const auto& [b, c] : e.terms())
        terms.push_back({{"coeff", {{"num", integer_json(c.get_num())}, {"den", integer_json(c.get_den())}}},
                         {"bracket", b.str()}});
    return terms;
}

Series<Rational> rational_series_from_json(const json& j, const Alphabet& alphabet)
{
    try {
        Series<Rational> s(j.at("order").get<int>());
        for (const auto& t : j.at("terms")) {
            const auto& c = t.at("coeff");
            s.add(parse_forest(t.at("forest").get<std::string>(), alphabet), rational_from_json(c.at("num"), c.at("den")));
        }
        return s;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed series JSON: ") + e.what());
    }
}

Series<Laurent> laurent_series_from_json(const json& j, const Alphabet& alphabet)
{
    try {
        Series<Laurent> s(j.at("order").get<int>());
        for (const auto& t : j.at("terms")) {
            Laurent c;
            for (const auto& entry : t.at("coeff")) {
                if (!entry.is_array() || entry.size() != 3)
                    throw std::invalid_argument("Laurent term must be [k, num, den]");
                c += Laurent::monomial(entry[0].get<int>(), rational_from_json(entry[1], entry[2]));
            }
            s.add(parse_forest(t.at("forest").get<std::string>(), alphabet), c);
        }
        return s;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed series JSON: ") + e.what());
    }
}

} // namespace postlie
