#ifndef EQLINES_LAMBDA_EXPR_HPP
#define EQLINES_LAMBDA_EXPR_HPP

#include <string>

#include "eqlines/algebraic.hpp"

namespace eqlines {

/// Parse the command-line syntax for algebraic numbers:
///   - rationals and decimals, exactly: "2", "3/2", "2.01"
///   - radical sugar: "sqrt(2)", "sqrt(2+sqrt(5))", "1/(1+2sqrt(2))"
///   - explicit polynomial plus isolating interval: "x^2-2@[1.4,1.5]"
/// Decimals become exact rationals. Sums or products of two irrational
/// subexpressions are rejected (out of the supported sugar).
AlgebraicReal parse_lambda_expr(const std::string& text);

}  // namespace eqlines

#endif
