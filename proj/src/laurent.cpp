#include "mcc/laurent.hpp"

#include <algorithm>
#include <set>

namespace mcc {

namespace {

bool term_less(const Term& a, const Term& b) { return kernels::active().compare(a.exp, b.exp) < 0; }

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out;
  if (!kernels::active().add(a, b, out)) throw ArithmeticOverflow("exponent overflow");
  return out;
}

// Merges two canonical term lists.
std::vector<Term> merge_sorted(const std::vector<Term>& a, const std::vector<Term>& b) {
  const auto& k = kernels::active();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = k.compare(a[i].exp, b[j].exp);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
    } else {
      const std::int64_t s = checked_add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].exp, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

// Multiplies canonical terms by a single term; the order is translation
// invariant, so the result stays canonical.
std::vector<Term> times_term(std::span<const Term> a, const Term& t) {
  std::vector<Term> out(a.begin(), a.end());
  const auto& k = kernels::active();
  for (auto& x : out) {
    x.coeff = checked_mul(x.coeff, t.coeff);
    if (!k.add(x.exp, t.exp, x.exp)) throw ArithmeticOverflow("exponent overflow");
  }
  return out;
}

}  // namespace

VariableTable::VariableTable(std::vector<std::string> names, std::vector<Block> blocks)
    : names_(std::move(names)), blocks_(std::move(blocks)) {
  if (names_.size() > kMaxVariables) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || n == "y" || !seen.insert(n).second) {
      throw std::invalid_argument("variable names must be unique, nonempty and not 'y': '" + n + "'");
    }
  }
  std::vector<bool> used(names_.size(), false);
  for (const auto& b : blocks_) {
    if (b.begin + b.size > names_.size()) throw std::invalid_argument("block '" + b.name + "' out of range");
    for (std::size_t i = b.begin; i < b.begin + b.size; ++i) {
      if (used[i]) throw std::invalid_argument("blocks overlap at variable '" + names_[i] + "'");
      used[i] = true;
    }
  }
}

const Block& VariableTable::block(const std::string& name) const {
  for (const auto& b : blocks_) {
    if (b.name == name) return b;
  }
  throw std::out_of_range("no block named '" + name + "'");
}

int VariableTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

TablePtr make_table(std::vector<std::string> names, std::vector<Block> blocks) {
  return std::make_shared<const VariableTable>(std::move(names), std::move(blocks));
}

bool same_table(const TablePtr& a, const TablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_table(const TablePtr& a, const TablePtr& b) {
  if (!same_table(a, b)) throw TableMismatch("operands belong to different variable tables");
}

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVariables) throw std::invalid_argument("too many exponents");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::from_exponents(const Exponents& e) {
  Monomial m;
  m.exp_ = e;
  m.exp_.lane[kYLane] = 0;
  return m;
}

void Monomial::set(std::size_t i, int value) {
  if (i >= kMaxVariables) throw std::out_of_range("monomial index");
  if (value < INT16_MIN || value > INT16_MAX) throw ArithmeticOverflow("exponent overflow");
  exp_.lane[i] = static_cast<std::int16_t>(value);
}

std::vector<int> Monomial::to_vector(std::size_t arity) const {
  std::vector<int> v(arity);
  for (std::size_t i = 0; i < arity; ++i) v[i] = exp_.lane[i];
  return v;
}

Monomial Monomial::inverse() const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.set(i, -exp_.lane[i]);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.exp_ = add_exponents(a.exp_, b.exp_);
  return m;
}

void canonicalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  const auto& k = kernels::active();
  std::size_t w = 0;
  for (std::size_t r = 0; r < terms.size();) {
    Term acc = terms[r++];
    while (r < terms.size() && k.equal(terms[r].exp, acc.exp)) acc.coeff = checked_add(acc.coeff, terms[r++].coeff);
    if (acc.coeff != 0) terms[w++] = acc;
  }
  terms.resize(w);
}

LaurentPolynomial::LaurentPolynomial(TablePtr table) : table_(std::move(table)) {}

LaurentPolynomial::LaurentPolynomial(TablePtr table, std::vector<Term> terms)
    : table_(std::move(table)), terms_(std::move(terms)) {
  canonicalize();
}

void LaurentPolynomial::canonicalize() {
  const std::size_t arity = table_ ? table_->arity() : 0;
  for (const auto& t : terms_) {
    for (std::size_t i = arity; i < kYLane; ++i) {
      if (t.exp.lane[i] != 0) throw std::invalid_argument("exponent on a variable outside the table");
    }
    if (t.exp.lane[kYLane] < 0) throw std::invalid_argument("negative power of y");
  }
  canonicalize_terms(terms_);
}

LaurentPolynomial LaurentPolynomial::constant(TablePtr table, const YPoly& c) {
  return monomial(std::move(table), Monomial{}, c);
}

LaurentPolynomial LaurentPolynomial::monomial(TablePtr table, const Monomial& m, const YPoly& c) {
  std::vector<Term> terms;
  const auto& coeffs = c.coefficients();
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] == 0) continue;
    Term t{m.packed(), coeffs[d]};
    t.exp.lane[kYLane] = static_cast<std::int16_t>(d);
    terms.push_back(t);
  }
  return LaurentPolynomial(std::move(table), std::move(terms));
}

LaurentPolynomial LaurentPolynomial::variable(TablePtr table, const std::string& name, int power) {
  const int idx = table->index_of(name);
  if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "'");
  Monomial m;
  m.set(static_cast<std::size_t>(idx), power);
  return monomial(std::move(table), m);
}

bool LaurentPolynomial::is_monomial() const {
  if (terms_.empty()) return false;
  return Monomial::from_exponents(terms_.front().exp) == Monomial::from_exponents(terms_.back().exp);
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (is_monomial() && Monomial::from_exponents(terms_.front().exp).is_one());
}

std::vector<std::pair<Monomial, YPoly>> LaurentPolynomial::grouped() const {
  std::vector<std::pair<Monomial, YPoly>> out;
  for (std::size_t i = 0; i < terms_.size();) {
    const Monomial m = Monomial::from_exponents(terms_[i].exp);
    std::vector<std::int64_t> c;
    while (i < terms_.size() && Monomial::from_exponents(terms_[i].exp) == m) {
      const auto d = static_cast<std::size_t>(terms_[i].exp.lane[kYLane]);
      if (c.size() <= d) c.resize(d + 1, 0);
      c[d] = terms_[i].coeff;
      ++i;
    }
    out.emplace_back(m, YPoly(std::move(c)));
  }
  return out;
}

YPoly LaurentPolynomial::coefficient(const Monomial& m) const {
  std::vector<std::int64_t> c;
  for (const auto& t : terms_) {
    if (Monomial::from_exponents(t.exp) == m) {
      const auto d = static_cast<std::size_t>(t.exp.lane[kYLane]);
      if (c.size() <= d) c.resize(d + 1, 0);
      c[d] = t.coeff;
    }
  }
  return YPoly(std::move(c));
}

std::vector<Monomial> LaurentPolynomial::support() const {
  std::vector<Monomial> out;
  for (const auto& t : terms_) {
    Monomial m = Monomial::from_exponents(t.exp);
    if (out.empty() || !(out.back() == m)) out.push_back(m);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (!table_) table_ = o.table_;
  if (o.table_) require_same_table(table_, o.table_);
  terms_ = merge_sorted(terms_, o.terms_);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  require_same_table(a.table_, b.table_);
  LaurentPolynomial r(a.table_);
  if (a.is_zero() || b.is_zero()) return r;
  const LaurentPolynomial& big = a.size() >= b.size() ? a : b;
  const LaurentPolynomial& small = a.size() >= b.size() ? b : a;
  if (small.size() <= 8) {
    for (const auto& t : small.terms_) r.terms_ = merge_sorted(r.terms_, times_term(big.terms_, t));
    return r;
  }
  std::vector<Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& s : small.terms_) {
    for (const auto& t : big.terms_) raw.push_back({add_exponents(s.exp, t.exp), checked_mul(s.coeff, t.coeff)});
  }
  canonicalize_terms(raw);
  r.terms_ = std::move(raw);
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const YPoly& c) const {
  return *this * constant(table_, c);
}

LaurentPolynomial LaurentPolynomial::shifted(const Monomial& m) const {
  LaurentPolynomial r(table_);
  r.terms_ = times_term(terms_, Term{m.packed(), 1});
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial r = constant(table_, YPoly(1));
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (!same_table(a.table_, b.table_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  const auto& k = kernels::active();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !k.equal(a.terms_[i].exp, b.terms_[i].exp)) return false;
  }
  return true;
}

std::strong_ordering compare(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  const auto& k = kernels::active();
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  // Compare from the leading (largest) term down.
  for (std::size_t i = 0; i < n; ++i) {
    const Term& x = a.terms_[a.terms_.size() - 1 - i];
    const Term& y = b.terms_[b.terms_.size() - 1 - i];
    if (const int c = k.compare(x.exp, y.exp); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x.coeff != y.coeff) return x.coeff <=> y.coeff;
  }
  return a.terms_.size() <=> b.terms_.size();
}

}  // namespace mcc
