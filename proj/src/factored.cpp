#include "mcc/factored.hpp"

#include "mcc/algebra.hpp"

namespace mcc {

LaurentPolynomial psi(const TablePtr& table, const Monomial& xi, Side side) {
  const auto one = LaurentPolynomial::constant(table, YPoly(1));
  switch (side) {
    case Side::below:
      return one - LaurentPolynomial::monomial(table, xi);
    case Side::equal:
      return LaurentPolynomial::monomial(table, xi, YPoly{1, 1});
    case Side::above:
      return one + LaurentPolynomial::monomial(table, xi, YPoly::y());
  }
  return one;
}

RationalExpression FactoredProduct::expand(const TablePtr& table) const {
  LaurentPolynomial n = LaurentPolynomial::constant(table, YPoly(1));
  for (const auto& f : num) n *= f;
  return RationalExpression(std::move(n), den);
}

std::optional<RationalExpression> FactoredProduct::substituted(const TablePtr& target,
                                                               std::span<const Monomial> images) const {
  LaurentPolynomial n = LaurentPolynomial::constant(target, YPoly(1));
  for (const auto& f : num) {
    LaurentPolynomial g = substitute_monomials(f, target, images);
    if (g.is_zero()) return std::nullopt;
    n *= g;
  }
  std::vector<LaurentPolynomial> d;
  d.reserve(den.size());
  for (const auto& f : den) {
    LaurentPolynomial g = substitute_monomials(f, target, images);
    if (g.is_zero()) throw std::domain_error("substitution sends a denominator factor to zero");
    d.push_back(std::move(g));
  }
  return RationalExpression(std::move(n), d);
}

}  // namespace mcc
