#pragma once
// Multivariate Laurent polynomials over Z[y].

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mcc/kernels.hpp"
#include "mcc/ypoly.hpp"

namespace mcc {

struct TableMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A contiguous run of variables that is permuted as a unit by symmetrization.
struct Block {
  std::string name;
  std::size_t begin = 0;
  std::size_t size = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Ordered, uniquely named variables plus their block structure. Shared
/// read-only between every polynomial built over it.
class VariableTable {
 public:
  VariableTable(std::vector<std::string> names, std::vector<Block> blocks = {});

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(const std::string& name) const;
  /// Index of a variable, or -1.
  int index_of(const std::string& name) const;

  friend bool operator==(const VariableTable&, const VariableTable&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Block> blocks_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

TablePtr make_table(std::vector<std::string> names, std::vector<Block> blocks = {});

/// Both tables are the same object or structurally identical.
bool same_table(const TablePtr& a, const TablePtr& b);
void require_same_table(const TablePtr& a, const TablePtr& b);

/// Exponent vector over the variables of a table (y excluded).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);
  static Monomial from_exponents(const Exponents& e);  // drops the y lane

  int operator[](std::size_t i) const { return exp_.lane[i]; }
  void set(std::size_t i, int value);
  const Exponents& packed() const { return exp_; }
  std::vector<int> to_vector(std::size_t arity) const;
  bool is_one() const { return exp_ == Exponents{}; }

  Monomial inverse() const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Exponents exp_{};
};

struct Term {
  Exponents exp;  // y-degree in lane kYLane
  std::int64_t coeff = 0;
};

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;  // zero over no table; only for containers
  explicit LaurentPolynomial(TablePtr table);
  /// Builds from arbitrary terms (merged and canonically ordered).
  LaurentPolynomial(TablePtr table, std::vector<Term> terms);

  static LaurentPolynomial constant(TablePtr table, const YPoly& c);
  static LaurentPolynomial monomial(TablePtr table, const Monomial& m, const YPoly& c = YPoly(1));
  static LaurentPolynomial variable(TablePtr table, const std::string& name, int power = 1);

  const TablePtr& table() const { return table_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// A single variable-monomial (any Z[y] coefficient).
  bool is_monomial() const;
  bool is_constant() const;

  /// Terms grouped by variable monomial, canonical order, y-polynomial
  /// coefficients.
  std::vector<std::pair<Monomial, YPoly>> grouped() const;
  YPoly coefficient(const Monomial& m) const;
  /// Distinct variable monomials with nonzero coefficient, canonical order.
  std::vector<Monomial> support() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  LaurentPolynomial scaled(const YPoly& c) const;
  LaurentPolynomial shifted(const Monomial& m) const;  // multiplication by a monomial
  LaurentPolynomial pow(unsigned k) const;

  /// Same table and identical terms.
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);
  /// Total order on polynomials of one table (used to sort factor lists).
  friend std::strong_ordering compare(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  void canonicalize();

  TablePtr table_;
  std::vector<Term> terms_;  // strictly increasing, no zero coefficients
};

/// Sorts and merges raw terms into canonical form.
void canonicalize_terms(std::vector<Term>& terms);

}  // namespace mcc
