#ifndef POSTLIE_FORMAT_HPP
#define POSTLIE_FORMAT_HPP

// Text, LaTeX and JSON renderings of series, expansions and BCH tables.
//
// Text:  terms "coeff * forest" joined by " + " in canonical basis order; a
//        unit coefficient is omitted; Laurent coefficients print as sums of
//        (p/q)*L^k. The zero series prints as "0".
// JSON:  {"order": N, "terms": [{"coeff": {"num": p, "den": q}, "forest": s}]}
//        with Laurent coefficients as [[k, p, q], ...].

#include "postlie/lie.hpp"
#include "postlie/magnus.hpp"

#include <json.hpp>

#include <string>

namespace postlie {

std::string to_text(const Series<Rational>& s, const Alphabet& alphabet = Alphabet::standard());
std::string to_text(const Series<Laurent>& s, const Alphabet& alphabet = Alphabet::standard());
std::string to_text(const lie::BracketExpr& e);

std::string latex_coefficient(const Rational& q);
std::string latex_coefficient(const Laurent& p);
std::string to_latex(const Series<Rational>& s, const Alphabet& alphabet = Alphabet::standard());
std::string to_latex(const Series<Laurent>& s, const Alphabet& alphabet = Alphabet::standard());
std::string to_latex(const lie::BracketExpr& e);

nlohmann::json to_json(const Series<Rational>& s, const Alphabet& alphabet = Alphabet::standard());
nlohmann::json to_json(const Series<Laurent>& s, const Alphabet& alphabet = Alphabet::standard());
nlohmann::json to_json(const lie::BracketExpr& e);

/// Inverse of to_json. Throws std::invalid_argument on schema violations.
Series<Rational> rational_series_from_json(const nlohmann::json& j, const Alphabet& alphabet = Alphabet::standard());
Series<Laurent> laurent_series_from_json(const nlohmann::json& j, const Alphabet& alphabet = Alphabet::standard());

/// One line per degree, degree 1 first.
template <Coefficient C>
std::string to_text(const Expansion<C>& e)
{
    std::string out;
    for (const auto& c : e.components)
        out += to_text(c) + "\n";
    return out;
}

/// One "symbol^{(n)} = ..." line per degree.
template <Coefficient C>
std::string to_latex(const Expansion<C>& e, const std::string& symbol)
{
    std::string out;
    for (int n = 1; n <= e.order; ++n)
        out += symbol + "^{(" + std::to_string(n) + ")} = " + to_latex(e.component(n)) + "\n";
    return out;
}

template <Coefficient C>
nlohmann::json to_json(const Expansion<C>& e, const std::string& what)
{
    nlohmann::json components = nlohmann::json::array();
    for (int n = 1; n <= e.order; ++n)
        components.push_back({{"degree", n}, {"series", to_json(e.component(n))}});
    return {{"what", what}, {"order", e.order}, {"components", components}};
}

} // namespace postlie

#endif
