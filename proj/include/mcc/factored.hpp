#pragma once
// Products of binomial factors kept unexpanded, and the psi kernel shared by
// the flag and matrix weight functions.

#include <optional>
#include <span>
#include <vector>

#include "mcc/rational.hpp"

namespace mcc {

/// Position of a target index relative to the reference index of a psi factor.
enum class Side { below, equal, above };

/// psi(xi) = 1 - xi (below), (1+y) xi (equal), 1 + y xi (above).
LaurentPolynomial psi(const TablePtr& table, const Monomial& xi, Side side);

/// prod(num) / prod(den), with every factor stored separately.
struct FactoredProduct {
  std::vector<LaurentPolynomial> num;
  std::vector<LaurentPolynomial> den;

  RationalExpression expand(const TablePtr& table) const;
  /// Applies a monomial substitution factor by factor. Returns nullopt as soon
  /// as a numerator factor vanishes; throws std::domain_error if a
  /// denominator factor does.
  std::optional<RationalExpression> substituted(const TablePtr& target, std::span<const Monomial> images) const;
};

}  // namespace mcc
