#include "mcc/rational.hpp"

#include <algorithm>

#include "mcc/algebra.hpp"

namespace mcc {

namespace {

LaurentPolynomial unit_inverse(const LaurentPolynomial& unit) {
  // unit = +-m
  const Term& t = unit.terms().front();
  return LaurentPolynomial::monomial(unit.table(), Monomial::from_exponents(t.exp).inverse(), YPoly(t.coeff));
}

LaurentPolynomial times_power(LaurentPolynomial p, const LaurentPolynomial& f, int k) {
  for (int i = 0; i < k; ++i) p *= f;
  return p;
}

}  // namespace

std::pair<LaurentPolynomial, LaurentPolynomial> normalize_factor(const LaurentPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("zero denominator factor");
  const Term& low = f.terms().front();
  const Monomial m = Monomial::from_exponents(low.exp);
  const std::int64_t sign = low.coeff > 0 ? 1 : -1;
  LaurentPolynomial g = f.shifted(m.inverse());
  if (sign < 0) g = -g;
  return {LaurentPolynomial::monomial(f.table(), m, YPoly(sign)), std::move(g)};
}

RationalExpression::RationalExpression(LaurentPolynomial numerator) : num_(std::move(numerator)) {}

RationalExpression::RationalExpression(LaurentPolynomial numerator, const std::vector<LaurentPolynomial>& denominator)
    : num_(std::move(numerator)) {
  for (const auto& f : denominator) {
    require_same_table(num_.table(), f.table());
    auto [unit, g] = normalize_factor(f);
    num_ *= unit_inverse(unit);
    if (g == LaurentPolynomial::constant(g.table(), YPoly(1))) continue;
    add_factor(g, 1);
  }
}

void RationalExpression::add_factor(const LaurentPolynomial& normalized, int multiplicity) {
  auto it = std::lower_bound(den_.begin(), den_.end(), normalized,
                             [](const Factor& f, const LaurentPolynomial& p) { return compare(f.poly, p) < 0; });
  if (it != den_.end() && it->poly == normalized) {
    it->multiplicity += multiplicity;
  } else {
    den_.insert(it, Factor{normalized, multiplicity});
  }
}

std::vector<LaurentPolynomial> RationalExpression::denominator_factors() const {
  std::vector<LaurentPolynomial> out;
  for (const auto& f : den_) {
    for (int i = 0; i < f.multiplicity; ++i) out.push_back(f.poly);
  }
  return out;
}

LaurentPolynomial RationalExpression::expanded_denominator() const {
  LaurentPolynomial d = LaurentPolynomial::constant(table(), YPoly(1));
  for (const auto& f : den_) d = times_power(std::move(d), f.poly, f.multiplicity);
  return d;
}

const LaurentPolynomial& RationalExpression::as_polynomial() const {
  if (!den_.empty()) throw NonCancellingDenominator("expression still has denominator factors");
  return num_;
}

RationalExpression RationalExpression::divided_by(const LaurentPolynomial& f) const {
  RationalExpression r = *this;
  auto [unit, g] = normalize_factor(f);
  r.num_ *= unit_inverse(unit);
  if (!(g == LaurentPolynomial::constant(g.table(), YPoly(1)))) r.add_factor(g, 1);
  return r;
}

RationalExpression RationalExpression::cancelled() const {
  RationalExpression r;
  r.num_ = num_;
  if (num_.is_zero()) return r;
  for (const auto& f : den_) {
    int left = f.multiplicity;
    while (left > 0) {
      auto q = exact_div(r.num_, f.poly);
      if (!q) break;
      r.num_ = std::move(*q);
      --left;
    }
    if (left > 0) r.den_.push_back(Factor{f.poly, left});
  }
  return r;
}

RationalExpression RationalExpression::operator-() const {
  RationalExpression r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalExpression operator+(const RationalExpression& a, const RationalExpression& b) {
  if (!a.num_.table()) return b;
  if (!b.num_.table()) return a;
  require_same_table(a.table(), b.table());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RationalExpression r;
  LaurentPolynomial na = a.num_;
  LaurentPolynomial nb = b.num_;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.den_.size() || j < b.den_.size()) {
    int c;
    if (i == a.den_.size()) {
      c = 1;
    } else if (j == b.den_.size()) {
      c = -1;
    } else {
      const auto ord = compare(a.den_[i].poly, b.den_[j].poly);
      c = ord < 0 ? -1 : (ord > 0 ? 1 : 0);
    }
    if (c < 0) {
      nb = times_power(std::move(nb), a.den_[i].poly, a.den_[i].multiplicity);
      r.den_.push_back(a.den_[i++]);
    } else if (c > 0) {
      na = times_power(std::move(na), b.den_[j].poly, b.den_[j].multiplicity);
      r.den_.push_back(b.den_[j++]);
    } else {
      const int ma = a.den_[i].multiplicity;
      const int mb = b.den_[j].multiplicity;
      if (ma < mb) na = times_power(std::move(na), a.den_[i].poly, mb - ma);
      if (mb < ma) nb = times_power(std::move(nb), a.den_[i].poly, ma - mb);
      r.den_.push_back(Factor{a.den_[i].poly, std::max(ma, mb)});
      ++i;
      ++j;
    }
  }
  r.num_ = na + nb;
  return r;
}

RationalExpression operator*(const RationalExpression& a, const RationalExpression& b) {
  require_same_table(a.table(), b.table());
  RationalExpression r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_;
  for (const auto& f : b.den_) r.add_factor(f.poly, f.multiplicity);
  return r;
}

RationalExpression RationalExpression::scaled(const YPoly& c) const {
  RationalExpression r = *this;
  r.num_ = r.num_.scaled(c);
  return r;
}

RationalExpression RationalExpression::substituted(const TablePtr& target, std::span<const Monomial> images) const {
  RationalExpression r;
  r.num_ = substitute_monomials(num_, target, images);
  for (const auto& f : den_) {
    const LaurentPolynomial g = substitute_monomials(f.poly, target, images);
    if (g.is_zero()) throw std::domain_error("substitution sends a denominator factor to zero");
    auto [unit, h] = normalize_factor(g);
    r.num_ *= unit_inverse(unit).pow(static_cast<unsigned>(f.multiplicity));
    if (!(h == LaurentPolynomial::constant(target, YPoly(1)))) r.add_factor(h, f.multiplicity);
  }
  return r;
}

RationalExpression RationalExpression::permuted(std::span<const std::size_t> perm) const {
  RationalExpression r;
  r.num_ = permute_variables(num_, perm);
  for (const auto& f : den_) {
    auto [unit, h] = normalize_factor(permute_variables(f.poly, perm));
    r.num_ *= unit_inverse(unit).pow(static_cast<unsigned>(f.multiplicity));
    r.add_factor(h, f.multiplicity);
  }
  return r;
}

bool rat_equal(const RationalExpression& a, const RationalExpression& b) {
  require_same_table(a.table(), b.table());
  LaurentPolynomial lhs = a.numerator();
  LaurentPolynomial rhs = b.numerator();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() || j < fb.size()) {
    int c;
    if (i == fa.size()) {
      c = 1;
    } else if (j == fb.size()) {
      c = -1;
    } else {
      const auto ord = compare(fa[i].poly, fb[j].poly);
      c = ord < 0 ? -1 : (ord > 0 ? 1 : 0);
    }
    if (c < 0) {
      rhs = times_power(std::move(rhs), fa[i].poly, fa[i].multiplicity);
      ++i;
    } else if (c > 0) {
      lhs = times_power(std::move(lhs), fb[j].poly, fb[j].multiplicity);
      ++j;
    } else {
      const int d = fa[i].multiplicity - fb[j].multiplicity;
      if (d > 0) rhs = times_power(std::move(rhs), fa[i].poly, d);
      if (d < 0) lhs = times_power(std::move(lhs), fa[i].poly, -d);
      ++i;
      ++j;
    }
  }
  return lhs == rhs;
}

}  // namespace mcc
