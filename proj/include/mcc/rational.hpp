#pragma once
// Rational expressions with factored denominators.

#include <stdexcept>
#include <utility>
#include <vector>

#include "mcc/laurent.hpp"

namespace mcc {

struct NonCancellingDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A denominator factor in normal form together with its multiplicity.
struct Factor {
  LaurentPolynomial poly;
  int multiplicity = 1;
};

/// Splits f = unit * g where unit = +-monomial and g is the canonical
/// representative of f's class up to units: its smallest term has trivial
/// variable monomial and positive coefficient.
std::pair<LaurentPolynomial, LaurentPolynomial> normalize_factor(const LaurentPolynomial& f);

/// numerator / prod(factors). Factors are kept unexpanded, in normal form and
/// sorted; units are absorbed into the numerator (monomials are invertible in
/// the Laurent ring). Equality of values is `rat_equal`, not `==`.
class RationalExpression {
 public:
  RationalExpression() = default;
  RationalExpression(LaurentPolynomial numerator);  // NOLINT(google-explicit-constructor)
  RationalExpression(LaurentPolynomial numerator, const std::vector<LaurentPolynomial>& denominator);

  const TablePtr& table() const { return num_.table(); }
  const LaurentPolynomial& numerator() const { return num_; }
  const std::vector<Factor>& factors() const { return den_; }
  /// The denominator factors listed with repetition.
  std::vector<LaurentPolynomial> denominator_factors() const;
  LaurentPolynomial expanded_denominator() const;

  bool is_polynomial() const { return den_.empty(); }
  bool is_zero() const { return num_.is_zero(); }
  /// Throws NonCancellingDenominator unless is_polynomial().
  const LaurentPolynomial& as_polynomial() const;

  /// Divides by f (kept as a factor unless f is a unit).
  RationalExpression divided_by(const LaurentPolynomial& f) const;

  /// Removes every denominator factor that divides the numerator exactly.
  RationalExpression cancelled() const;

  RationalExpression operator-() const;
  friend RationalExpression operator+(const RationalExpression& a, const RationalExpression& b);
  friend RationalExpression operator-(const RationalExpression& a, const RationalExpression& b) { return a + (-b); }
  friend RationalExpression operator*(const RationalExpression& a, const RationalExpression& b);
  RationalExpression& operator+=(const RationalExpression& o) { return *this = *this + o; }
  RationalExpression& operator*=(const RationalExpression& o) { return *this = *this * o; }

  RationalExpression scaled(const YPoly& c) const;

  /// Applies a variable map to numerator and factors (see substitute_monomials).
  /// Throws std::domain_error if a factor maps to zero.
  RationalExpression substituted(const TablePtr& target, std::span<const Monomial> images) const;
  RationalExpression permuted(std::span<const std::size_t> perm) const;

 private:
  void add_factor(const LaurentPolynomial& normalized, int multiplicity);

  LaurentPolynomial num_;
  std::vector<Factor> den_;  // sorted by compare(), multiplicities > 0
};

/// a == b as elements of the fraction field, by cross-multiplication after
/// removing shared factors.
bool rat_equal(const RationalExpression& a, const RationalExpression& b);

}  // namespace mcc
