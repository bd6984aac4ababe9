#pragma once
// Canonical text form of polynomials and a small infix expression reader.
//
// Canonical form: terms in canonical monomial order joined by '+', each term
// a parenthesised y-polynomial followed by "*name^exp" for every variable
// with nonzero exponent, e.g. "(1+y)*a1^1*b1^-1". Zero prints as "0".

#include <stdexcept>
#include <string>
#include <string_view>

#include "mcc/rational.hpp"

namespace mcc {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// How y-coefficients are displayed. In the q convention every coefficient is
/// rewritten through y = -q.
enum class CoefficientStyle { y, q };

std::string to_string(const LaurentPolynomial& p, CoefficientStyle style = CoefficientStyle::y);
std::string to_string(const RationalExpression& r, CoefficientStyle style = CoefficientStyle::y);

/// Inverse of to_string(LaurentPolynomial): accepts exactly the canonical
/// grammar (whitespace ignored). parse(to_string(p)) == p.
LaurentPolynomial parse_polynomial(std::string_view text, const TablePtr& table,
                                   CoefficientStyle style = CoefficientStyle::y);

/// Infix expression over the table's variables, integers, `y` and `q`
/// (q = -y), with + - * / ^ and parentheses. Division by a non-monomial
/// produces a denominator factor.
RationalExpression parse_expression(std::string_view text, const TablePtr& table);

}  // namespace mcc
