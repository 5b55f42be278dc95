#ifndef REE2F4_EXPR_HPP
#define REE2F4_EXPR_HPP

#include <string>

#include "ree2f4/sympoly.hpp"

namespace ree2f4 {

/// Parses the table/report expression language into a SymPoly.
///
/// Grammar:  expr   := term (('+'|'-') term)*
///           term   := factor (('*'|'/') factor)*
///           factor := '-'* atom ('^' ['-'] integer)?
///           atom   := integer | identifier | '(' expr ')'
///
/// The identifiers `q` (the indeterminate) and `r2` (sqrt 2) are reserved;
/// any other identifier becomes a named unknown. Division is restricted to
/// nonzero constants and single-term q-monomials (exact, possibly Laurent:
/// "r2*x/q" is legal); anything else is rejected.
///
/// Throws std::invalid_argument with a position on malformed input.
SymPoly parse_expr(const std::string& text);

/// parse_expr, then demand no unknowns; returns the plain QPoly.
QPoly parse_qpoly(const std::string& text);

}  // namespace ree2f4

#endif  // REE2F4_EXPR_HPP
