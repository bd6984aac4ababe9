#pragma once
// Integer polynomials in y, and overflow-checked int64 helpers.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcc {

struct ArithmeticOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in multiplication");
  return r;
}

/// Dense polynomial in one variable with int64 coefficients, lowest degree
/// first. The zero polynomial has no coefficients; the top coefficient of a
/// nonzero polynomial is never zero.
class YPoly {
 public:
  YPoly() = default;
  YPoly(std::int64_t c);  // NOLINT(google-explicit-constructor)
  YPoly(std::initializer_list<std::int64_t> coeffs);
  explicit YPoly(std::vector<std::int64_t> coeffs);

  static YPoly y() { return YPoly{0, 1}; }
  /// y^k
  static YPoly power(int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
  }
  const std::vector<std::int64_t>& coefficients() const { return c_; }
  std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  std::int64_t evaluate(std::int64_t at) const;

  /// The polynomial p(-y): the ring automorphism relating the y and q = -y
  /// conventions (it is an involution).
  YPoly reflect() const;

  YPoly operator-() const;
  YPoly& operator+=(const YPoly& o);
  YPoly& operator-=(const YPoly& o);
  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
  friend YPoly operator*(const YPoly& a, const YPoly& b);
  friend bool operator==(const YPoly&, const YPoly&) = default;
  friend bool operator<(const YPoly& a, const YPoly& b);

  /// Exact division over Z[y]; nullopt when the quotient is not in Z[y].
  std::optional<YPoly> exact_div(const YPoly& d) const;

  /// e.g. "1+y", "-1+y^2", "2*y", "0". `var` names the indeterminate.
  std::string to_string(const std::string& var = "y") const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

}  // namespace mcc
