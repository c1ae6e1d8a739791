#ifndef POSTLIE_EXPRESSION_HPP
#define POSTLIE_EXPRESSION_HPP

// Reader for post-Lie expressions in one generator, written with the grafting
// product and the Lie bracket:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := primary ['|>' primary]
//   primary := integer | 'L' | generator | '(' expr ')' | '[' expr ',' expr ']'
//
// The generator may be written `x` or `f`; `L` is the weight. Scalars and
// series combine only where the result is meaningful (no series products, no
// division by a series or by a non-constant scalar). A chain a |> b |> c must
// be parenthesized.

#include "postlie/series.hpp"

#include <string>

namespace postlie {

Series<Laurent> parse_expression(const std::string& text, int order);

/// As parse_expression, for expressions without the weight.
Series<Rational> parse_rational_expression(const std::string& text, int order);

} // namespace postlie

#endif
