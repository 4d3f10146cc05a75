#ifndef REGAL_EXPR_HPP
#define REGAL_EXPR_HPP

#include <string>

#include "regal/bipoly.hpp"
#include "regal/qpoly.hpp"

namespace regal {

/// Parse a polynomial in the variables xvar (main) and tvar (parameter).
/// Grammar: rational literals ("a" or "a/b"), the two variable names,
/// `+ - * ^`, parentheses. No implicit multiplication. Example:
/// "X^3 + (T-1)*X + (T-1)".
BiPoly parse_bipoly(const std::string& text, const std::string& tvar = "T",
                    const std::string& xvar = "X");

/// Univariate case: only xvar may appear.
QPoly parse_qpoly(const std::string& text, const std::string& xvar = "X");

}  // namespace regal

#endif
