#ifndef POSTLIE_REFERENCE_HPP
#define POSTLIE_REFERENCE_HPP

// Reference low-degree components, kept as post-Lie expressions in the
// generator and expanded on demand into the forest basis.

#include "postlie/lie.hpp"
#include "postlie/series.hpp"

#include <string>

namespace postlie::reference {

/// chi^(n) for 1 <= n <= 5.
const std::string& magnus_text(int n);
/// theta^(n) for 1 <= n <= 5.
const std::string& inverse_magnus_text(int n);
/// chi_lambda^(n) for 1 <= n <= 4, with L standing for the weight.
const std::string& weighted_text(int n);

Series<Rational> magnus(int n);
Series<Rational> inverse_magnus(int n);
Series<Laurent> weighted(int n);

/// Degree-n part of BCH(a, b) for 1 <= n <= 4, in the right-normed basis.
lie::BracketExpr bch(int n);

} // namespace postlie::reference

#endif
