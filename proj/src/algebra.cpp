#include "mcc/algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace mcc {

namespace {

struct ExpLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return kernels::active().compare(a, b) < 0;
  }
};

Exponents difference(const Exponents& a, const Exponents& b) {
  Exponents out;
  for (std::size_t i = 0; i < kLanes; ++i) {
    const int d = a.lane[i] - b.lane[i];
    if (d < INT16_MIN || d > INT16_MAX) throw ArithmeticOverflow("exponent overflow");
    out.lane[i] = static_cast<std::int16_t>(d);
  }
  return out;
}

}  // namespace

std::optional<LaurentPolynomial> exact_div(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  require_same_table(p.table(), q.table());
  if (q.is_zero()) throw std::domain_error("exact_div by the zero polynomial");
  if (p.is_zero()) return LaurentPolynomial(p.table());

  // Any quotient has every exponent inside this box, lane by lane.
  std::array<int, kLanes> lo{};
  std::array<int, kLanes> hi{};
  for (std::size_t i = 0; i < kLanes; ++i) {
    int pmin = std::numeric_limits<int>::max(), pmax = std::numeric_limits<int>::min();
    int qmin = pmin, qmax = pmax;
    for (const auto& t : p.terms()) {
      pmin = std::min<int>(pmin, t.exp.lane[i]);
      pmax = std::max<int>(pmax, t.exp.lane[i]);
    }
    for (const auto& t : q.terms()) {
      qmin = std::min<int>(qmin, t.exp.lane[i]);
      qmax = std::max<int>(qmax, t.exp.lane[i]);
    }
    lo[i] = pmin - qmin;
    hi[i] = pmax - qmax;
    if (lo[i] > hi[i]) return std::nullopt;
  }

  std::map<Exponents, std::int64_t, ExpLess> rem;
  for (const auto& t : p.terms()) rem.emplace_hint(rem.end(), t.exp, t.coeff);
  const Term lead = q.terms().back();
  const auto& k = kernels::active();

  std::vector<Term> quotient;
  while (!rem.empty()) {
    const auto top = std::prev(rem.end());
    const Exponents e = difference(top->first, lead.exp);
    for (std::size_t i = 0; i < kLanes; ++i) {
      if (e.lane[i] < lo[i] || e.lane[i] > hi[i]) return std::nullopt;
    }
    if (top->second % lead.coeff != 0) return std::nullopt;
    const std::int64_t c = top->second / lead.coeff;
    quotient.push_back({e, c});
    for (const auto& t : q.terms()) {
      Exponents x;
      if (!k.add(t.exp, e, x)) throw ArithmeticOverflow("exponent overflow");
      auto [it, inserted] = rem.try_emplace(x, 0);
      it->second = checked_add(it->second, -checked_mul(c, t.coeff));
      if (it->second == 0) rem.erase(it);
    }
  }
  std::reverse(quotient.begin(), quotient.end());
  return LaurentPolynomial(p.table(), std::move(quotient));
}

LaurentPolynomial substitute_monomials(const LaurentPolynomial& p, const TablePtr& target,
                                       std::span<const Monomial> images) {
  const std::size_t n = p.table()->arity();
  if (images.size() != n) throw std::invalid_argument("substitution arity mismatch");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::array<int, kLanes> acc{};
    acc[kYLane] = t.exp.lane[kYLane];
    for (std::size_t i = 0; i < n; ++i) {
      const int e = t.exp.lane[i];
      if (e == 0) continue;
      for (std::size_t j = 0; j < kMaxVariables; ++j) acc[j] += e * images[i][j];
    }
    Term out{{}, t.coeff};
    for (std::size_t j = 0; j < kLanes; ++j) {
      if (acc[j] < INT16_MIN || acc[j] > INT16_MAX) throw ArithmeticOverflow("exponent overflow");
      out.exp.lane[j] = static_cast<std::int16_t>(acc[j]);
    }
    terms.push_back(out);
  }
  return LaurentPolynomial(target, std::move(terms));
}

LaurentPolynomial permute_variables(const LaurentPolynomial& p, std::span<const std::size_t> perm) {
  const std::size_t n = p.table()->arity();
  if (perm.size() != n) throw std::invalid_argument("permutation arity mismatch");
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  for (auto& t : terms) {
    Exponents e{};
    e.lane[kYLane] = t.exp.lane[kYLane];
    for (std::size_t i = 0; i < n; ++i) e.lane[perm[i]] = t.exp.lane[i];
    t.exp = e;
  }
  return LaurentPolynomial(p.table(), std::move(terms));
}

TablePtr xi_table(const std::string& name) { return make_table({name}); }

LaurentPolynomial toric_substitute(const LaurentPolynomial& p, std::span<const int> s, const TablePtr& xi) {
  if (s.size() != p.table()->arity()) throw std::invalid_argument("toric substitution: direction arity mismatch");
  if (xi->arity() != 1) throw std::invalid_argument("toric substitution target must have one variable");
  std::vector<Monomial> images;
  images.reserve(s.size());
  for (int si : s) {
    Monomial m;
    m.set(0, si);
    images.push_back(m);
  }
  return substitute_monomials(p, xi, images);
}

LaurentPolynomial lambda_class(const TablePtr& table, std::span<const Monomial> weights, LambdaSign sign,
                               bool dual) {
  LaurentPolynomial result = LaurentPolynomial::constant(table, YPoly(1));
  for (const auto& w : weights) {
    const Monomial m = dual ? w.inverse() : w;
    const YPoly c = sign == LambdaSign::y ? YPoly::y() : YPoly(-1);
    result *= LaurentPolynomial::constant(table, YPoly(1)) + LaurentPolynomial::monomial(table, m, c);
  }
  return result;
}

}  // namespace mcc
