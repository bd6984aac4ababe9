#pragma once
// Ring maps and divisibility on Laurent polynomials.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcc/laurent.hpp"

namespace mcc {

/// Returns r with q * r == p, or nullopt when q does not divide p in
/// Z[y][x^{+-1}]. Throws std::domain_error for q == 0.
std::optional<LaurentPolynomial> exact_div(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// The ring map sending variable i of p's table to images[i] (a monomial over
/// `target`); y is fixed.
LaurentPolynomial substitute_monomials(const LaurentPolynomial& p, const TablePtr& target,
                                       std::span<const Monomial> images);

/// Renames variables inside one table: variable i goes to variable perm[i].
LaurentPolynomial permute_variables(const LaurentPolynomial& p, std::span<const std::size_t> perm);

/// One-variable table {xi}.
TablePtr xi_table(const std::string& name = "xi");

/// alpha_i -> xi^{s_i}. The result lives over a one-variable table.
LaurentPolynomial toric_substitute(const LaurentPolynomial& p, std::span<const int> s,
                                   const TablePtr& xi = xi_table());

enum class LambdaSign { y, minus_one };

/// prod_w (1 + y w^{+-1}) for LambdaSign::y, prod_w (1 - w^{+-1}) for
/// LambdaSign::minus_one; the exponent is -1 when `dual` is set. An empty
/// weight list gives 1.
LaurentPolynomial lambda_class(const TablePtr& table, std::span<const Monomial> weights, LambdaSign sign,
                               bool dual);

}  // namespace mcc
